// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "smqc/error.hpp"
#include "smqc/glyph.hpp"

using namespace smqc;

TEST_CASE("charset covers digits and capitals") {
  const auto cs = font_charset();
  CHECK(cs.size() == 36);
  CHECK(cs.substr(0, 10) == "0123456789");
  for (char c = 'A'; c <= 'Z'; ++c) CHECK(font_supports(c));
  CHECK_FALSE(font_supports('a'));
  CHECK_FALSE(font_supports(' '));
}

TEST_CASE("pair mask area is of the expected order") {
  const Canvas canvas;
  const auto qc = rasterize_glyph("QC", canvas);
  // 30 lit font cells of 28 x 28 px
  CHECK(qc.area() == 30u * 28u * 28u);
  CHECK(qc.area() > 15000);
  CHECK(qc.area() < 30000);
}

TEST_CASE("narrow glyphs cover less than wide ones") {
  const Canvas canvas;
  CHECK(rasterize_glyph("I", canvas).area() < rasterize_glyph("W", canvas).area());
}

TEST_CASE("rasterization is deterministic and centred") {
  const Canvas canvas;
  const auto a = rasterize_glyph("H", canvas);
  const auto b = rasterize_glyph("H", canvas);
  CHECK(a == b);
  long sx = 0, sy = 0;
  for (auto p : a.members()) {
    sx += p % canvas.width;
    sy += p / canvas.width;
  }
  // H is left-right symmetric
  CHECK(static_cast<double>(sx) / a.area() == doctest::Approx(255.5).epsilon(0.01));
  CHECK(static_cast<double>(sy) / a.area() > 200.0);
  CHECK(static_cast<double>(sy) / a.area() < 312.0);
}

TEST_CASE("every glyph is distinct and inside the canvas") {
  const Canvas canvas;
  std::set<std::vector<std::uint32_t>> seen;
  for (char c : font_charset()) {
    const auto m = rasterize_glyph(std::string(1, c), canvas);
    CHECK(m.area() > 0);
    for (auto p : m.members()) CHECK(p < canvas.pixel_count());
    seen.insert({m.members().begin(), m.members().end()});
  }
  CHECK(seen.size() == 36);
}

TEST_CASE("rasterization errors") {
  const Canvas canvas;
  CHECK_THROWS_AS(rasterize_glyph("", canvas), Error);
  CHECK_THROWS_AS(rasterize_glyph("h", canvas), Error);
  CHECK_THROWS_AS(rasterize_glyph("AB", Canvas{100, 100, 10.0}), Error);
  CHECK_THROWS_AS(rasterize_glyph("A", canvas, FontSpec{"nope", 28}), Error);
  CHECK_THROWS_AS(rasterize_glyph("ABCD", canvas), Error);
}
