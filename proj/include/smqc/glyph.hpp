// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smqc {

struct Canvas {
  int width = 512;
  int height = 512;
  double extent_um = 80.0;  // physical edge length of the field of view

  std::size_t pixel_count() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  bool contains(int x, int y) const {
    return x >= 0 && y >= 0 && x < width && y < height;
  }
  std::uint32_t index(int x, int y) const {
    return static_cast<std::uint32_t>(y) * static_cast<std::uint32_t>(width) +
           static_cast<std::uint32_t>(x);
  }
  friend bool operator==(const Canvas&, const Canvas&) = default;
};

/// The bundled 5x7 block font. Every font cell becomes a `cell_size` square
/// of pixels; characters are separated by one empty cell.
struct FontSpec {
  std::string name = "block5x7";
  int cell_size = 28;
};

class GlyphMask {
 public:
  GlyphMask() = default;
  GlyphMask(Canvas canvas, std::vector<std::uint8_t> bits);

  const Canvas& canvas() const { return canvas_; }
  bool contains(int x, int y) const {
    return canvas_.contains(x, y) && bits_[canvas_.index(x, y)] != 0;
  }
  std::span<const std::uint8_t> bits() const { return bits_; }
  /// Sorted linear indices of member pixels.
  std::span<const std::uint32_t> members() const { return members_; }
  std::size_t area() const { return members_.size(); }

  friend bool operator==(const GlyphMask&, const GlyphMask&) = default;

 private:
  Canvas canvas_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::uint32_t> members_;
};

/// True when the bundled font has a bitmap for `c`.
bool font_supports(char c);

/// All single characters the font can draw, digits first.
std::string_view font_charset();

/// Renders `text` centred on the canvas.
/// Throws Error(kInvalidInput) for unsupported characters, empty text, or
/// text that does not fit.
GlyphMask rasterize_glyph(std::string_view text, const Canvas& canvas,
                          const FontSpec& font = {});

}  // namespace smqc
