// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#include "smqc/glyph.hpp"

#include <algorithm>
#include <array>

#include "smqc/error.hpp"

namespace smqc {
namespace {

constexpr int kCols = 5;
constexpr int kRows = 7;

struct FontGlyph {
  char ch;
  std::array<const char*, kRows> rows;
};

// Zero carries a diagonal stroke so it cannot be confused with O.
constexpr std::array<FontGlyph, 36> kFont = {{
    {'0', {"01110", "10001", "10011", "10101", "11001", "10001", "01110"}},
    {'1', {"00100", "01100", "00100", "00100", "00100", "00100", "01110"}},
    {'2', {"01110", "10001", "00001", "00010", "00100", "01000", "11111"}},
    {'3', {"11111", "00010", "00100", "00010", "00001", "10001", "01110"}},
    {'4', {"00010", "00110", "01010", "10010", "11111", "00010", "00010"}},
    {'5', {"11111", "10000", "11110", "00001", "00001", "10001", "01110"}},
    {'6', {"00110", "01000", "10000", "11110", "10001", "10001", "01110"}},
    {'7', {"11111", "00001", "00010", "00100", "01000", "01000", "01000"}},
    {'8', {"01110", "10001", "10001", "01110", "10001", "10001", "01110"}},
    {'9', {"01110", "10001", "10001", "01111", "00001", "00010", "01100"}},
    {'A', {"01110", "10001", "10001", "10001", "11111", "10001", "10001"}},
    {'B', {"11110", "10001", "10001", "11110", "10001", "10001", "11110"}},
    {'C', {"01110", "10001", "10000", "10000", "10000", "10001", "01110"}},
    {'D', {"11100", "10010", "10001", "10001", "10001", "10010", "11100"}},
    {'E', {"11111", "10000", "10000", "11110", "10000", "10000", "11111"}},
    {'F', {"11111", "10000", "10000", "11110", "10000", "10000", "10000"}},
    {'G', {"01110", "10001", "10000", "10111", "10001", "10001", "01111"}},
    {'H', {"10001", "10001", "10001", "11111", "10001", "10001", "10001"}},
    {'I', {"01110", "00100", "00100", "00100", "00100", "00100", "01110"}},
    {'J', {"00111", "00010", "00010", "00010", "00010", "10010", "01100"}},
    {'K', {"10001", "10010", "10100", "11000", "10100", "10010", "10001"}},
    {'L', {"10000", "10000", "10000", "10000", "10000", "10000", "11111"}},
    {'M', {"10001", "11011", "10101", "10101", "10001", "10001", "10001"}},
    {'N', {"10001", "10001", "11001", "10101", "10011", "10001", "10001"}},
    {'O', {"01110", "10001", "10001", "10001", "10001", "10001", "01110"}},
    {'P', {"11110", "10001", "10001", "11110", "10000", "10000", "10000"}},
    {'Q', {"01110", "10001", "10001", "10001", "10101", "10010", "01101"}},
    {'R', {"11110", "10001", "10001", "11110", "10100", "10010", "10001"}},
    {'S', {"01111", "10000", "10000", "01110", "00001", "00001", "11110"}},
    {'T', {"11111", "00100", "00100", "00100", "00100", "00100", "00100"}},
    {'U', {"10001", "10001", "10001", "10001", "10001", "10001", "01110"}},
    {'V', {"10001", "10001", "10001", "10001", "10001", "01010", "00100"}},
    {'W', {"10001", "10001", "10001", "10101", "10101", "10101", "01010"}},
    {'X', {"10001", "10001", "01010", "00100", "01010", "10001", "10001"}},
    {'Y', {"10001", "10001", "10001", "01010", "00100", "00100", "00100"}},
    {'Z', {"11111", "00001", "00010", "00100", "01000", "10000", "11111"}},
}};

const FontGlyph* find_glyph(char c) {
  for (const auto& g : kFont) {
    if (g.ch == c) return &g;
  }
  return nullptr;
}

}  // namespace

GlyphMask::GlyphMask(Canvas canvas, std::vector<std::uint8_t> bits)
    : canvas_(canvas), bits_(std::move(bits)) {
  if (bits_.size() != canvas_.pixel_count()) {
    fail(ErrorKind::kInvalidInput, "mask size does not match canvas");
  }
  for (std::uint32_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] != 0) {
      bits_[i] = 1;
      members_.push_back(i);
    }
  }
}

bool font_supports(char c) { return find_glyph(c) != nullptr; }

std::string_view font_charset() {
  static const std::string charset = [] {
    std::string s;
    for (const auto& g : kFont) s.push_back(g.ch);
    return s;
  }();
  return charset;
}

GlyphMask rasterize_glyph(std::string_view text, const Canvas& canvas,
                          const FontSpec& font) {
  if (text.empty()) fail(ErrorKind::kInvalidInput, "empty glyph text");
  if (font.name != "block5x7") {
    fail(ErrorKind::kInvalidInput, "unknown font '" + font.name + "'");
  }
  if (font.cell_size < 1) fail(ErrorKind::kInvalidInput, "font cell size must be >= 1");

  std::vector<const FontGlyph*> glyphs;
  for (char c : text) {
    const FontGlyph* g = find_glyph(c);
    if (g == nullptr) {
      fail(ErrorKind::kInvalidInput,
           std::string("unsupported character '") + c + "'");
    }
    glyphs.push_back(g);
  }

  const long cell = font.cell_size;
  const long n = static_cast<long>(glyphs.size());
  const long text_w = (n * (kCols + 1) - 1) * cell;
  const long text_h = kRows * cell;
  if (text_w > canvas.width || text_h > canvas.height) {
    fail(ErrorKind::kInvalidInput,
         "glyph '" + std::string(text) + "' exceeds the " +
             std::to_string(canvas.width) + "x" + std::to_string(canvas.height) +
             " canvas");
  }
  const long x0 = (canvas.width - text_w) / 2;
  const long y0 = (canvas.height - text_h) / 2;

  std::vector<std::uint8_t> bits(canvas.pixel_count(), 0);
  for (long k = 0; k < n; ++k) {
    for (int r = 0; r < kRows; ++r) {
      for (int c = 0; c < kCols; ++c) {
        if (glyphs[k]->rows[r][c] != '1') continue;
        const long xs = x0 + (k * (kCols + 1) + c) * cell;
        const long ys = y0 + r * cell;
        for (long y = ys; y < ys + cell; ++y) {
          std::fill_n(bits.begin() + y * canvas.width + xs, cell, 1);
        }
      }
    }
  }
  return GlyphMask(canvas, std::move(bits));
}

}  // namespace smqc
