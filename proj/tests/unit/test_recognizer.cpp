// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "smqc/error.hpp"
#include "smqc/recognizer.hpp"

using namespace smqc;

namespace {

const TemplateSet& singles() {
  static const TemplateSet set = [] {
    const auto cs = single_charset();
    return build_templates(cs, Canvas{});
  }();
  return set;
}

std::vector<AccuracyPoint> model_points(double beta, double k, double ap,
                                        std::span<const double> times) {
  std::vector<AccuracyPoint> pts;
  for (double t : times) {
    for (double n0 : {10.0, 30.0, 60.0, 90.0, 120.0, 150.0}) {
      pts.push_back({n0, t, beta * std::exp(-n0 * std::exp(-ap * t) * k) + 1.0});
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("charsets") {
  CHECK(single_charset().size() == 36);
  const auto pairs = pair_charset();
  CHECK(pairs.size() == 676);
  CHECK(pairs.front() == "AA");
  CHECK(pairs.back() == "ZZ");
}

TEST_CASE("every template classifies to itself with score 1") {
  const auto& set = singles();
  REQUIRE(set.size() == 36);
  for (const auto& label : set.labels()) {
    const auto img = template_image(set, label);
    const auto c = classify(img, set);
    CHECK_FALSE(c.no_signal);
    CHECK(c.label == label);
    CHECK(c.score == doctest::Approx(1.0));
    CHECK(c.runner_up_score < 1.0);
  }
}

TEST_CASE("templates are median roots") {
  const auto& set = singles();
  const auto img = template_image(set, "R");
  CHECK(median3x3(img, 512, 512) == img);
}

TEST_CASE("classification is invariant to rescaling the image") {
  const auto& set = singles();
  auto img = template_image(set, "7");
  for (auto& v : img) v = v ? 100 : 3;
  const auto c = classify(img, set);
  CHECK(c.label == "7");
  CHECK(c.score == doctest::Approx(1.0));
}

TEST_CASE("blank or flat images carry no signal") {
  const auto& set = singles();
  const std::vector<std::uint8_t> zeros(512 * 512, 0);
  CHECK(classify(zeros, set).no_signal);
  const std::vector<std::uint8_t> flat(512 * 512, 40);
  CHECK(classify(flat, set).no_signal);
  CHECK_FALSE(otsu_threshold(flat).has_value());
  CHECK_THROWS_AS(classify(std::vector<std::uint8_t>(5, 1), set), Error);
}

TEST_CASE("template sets are sorted and unique") {
  const Canvas canvas{8, 8, 1.0};
  const std::vector<std::uint32_t> px{9, 10, 17, 18, 27, 28};
  const TemplateSet set(canvas, {{"Q", px}, {"B", px}, {"K", {50, 51}}});
  CHECK(set.labels() == std::vector<std::string>{"B", "K", "Q"});
  CHECK_THROWS_AS(TemplateSet(canvas, {{"A", px}, {"A", px}}), Error);
  CHECK(set.find("K") != nullptr);
  CHECK(set.find("Z") == nullptr);
}

TEST_CASE("identical templates tie on a real glyph") {
  const auto cs = single_charset();
  const auto full = build_templates(cs, Canvas{});
  const auto* h = full.find("H");
  REQUIRE(h != nullptr);
  const TemplateSet twins(Canvas{}, {{"ZZ", h->pixels}, {"H2", h->pixels}, {"H1", h->pixels}});
  const auto c = classify(template_image(full, "H"), twins);
  CHECK(c.label == "H1");
  CHECK(c.runner_up == "H2");
  CHECK(c.score == c.runner_up_score);
}

TEST_CASE("median filter and otsu on small images") {
  const std::vector<std::uint8_t> img{0, 0, 0, 0, 255, 0, 0, 0, 0};
  CHECK(median3x3(img, 3, 3) == std::vector<std::uint8_t>(9, 0));
  const std::vector<std::uint8_t> two{10, 10, 200, 200};
  const auto t = otsu_threshold(two);
  REQUIRE(t.has_value());
  CHECK(*t >= 10);
  CHECK(*t < 200);
  CHECK_THROWS_AS(median3x3(img, 2, 2), Error);
}

TEST_CASE("wilson interval") {
  const auto ci = wilson_interval(50, 100);
  CHECK(ci.low == doctest::Approx(0.40383).epsilon(1e-4));
  CHECK(ci.high == doctest::Approx(0.59617).epsilon(1e-4));
  const auto all = wilson_interval(500, 500);
  CHECK(all.high == 1.0);
  CHECK(all.low == doctest::Approx(0.99238).epsilon(1e-4));
  const auto none = wilson_interval(0, 0);
  CHECK(none.low == 0.0);
  CHECK(none.high == 1.0);
}

TEST_CASE("fit recovers parameters of noiseless model data") {
  const std::vector<double> times{0.1, 0.55, 1.0};
  const auto pts = model_points(-0.95, 0.08, 2.24, times);
  const auto fit = fit_accuracy_model(pts);
  CHECK(std::abs(fit.beta / -0.95 - 1.0) < 0.01);
  CHECK(std::abs(fit.k_dis / 0.08 - 1.0) < 0.01);
  CHECK(std::abs(fit.alpha_p / 2.24 - 1.0) < 0.01);
  CHECK(fit.c == 1.0);
  CHECK(fit.c_fixed);
  CHECK_FALSE(fit.alpha_p_fixed);
  CHECK(fit.residual_r2 > 0.9999);
  CHECK(fit.predict(60.0, 0.55) == doctest::Approx(pts[8].accuracy).epsilon(1e-4));
}

TEST_CASE("fit at a single read time holds alpha_p") {
  const std::vector<double> times{0.0};
  const auto pts = model_points(-0.97, 0.05, 2.24, times);
  FitOptions opt;
  opt.alpha_p_init = 3.0;
  const auto fit = fit_accuracy_model(pts, opt);
  CHECK(fit.alpha_p_fixed);
  CHECK(fit.alpha_p == 3.0);
  CHECK(std::abs(fit.beta / -0.97 - 1.0) < 0.01);
  CHECK(std::abs(fit.k_dis / 0.05 - 1.0) < 0.01);
}

TEST_CASE("fit with a free constant") {
  std::vector<AccuracyPoint> pts;
  for (double n0 : {5.0, 10.0, 20.0, 30.0, 60.0, 90.0, 150.0}) {
    pts.push_back({n0, 0.0, -0.8 * std::exp(-n0 * 0.04) + 0.97});
  }
  FitOptions opt;
  opt.free_c = true;
  const auto fit = fit_accuracy_model(pts, opt);
  CHECK_FALSE(fit.c_fixed);
  CHECK(fit.c == doctest::Approx(0.97).epsilon(1e-3));
  CHECK(fit.k_dis == doctest::Approx(0.04).epsilon(1e-3));
}

TEST_CASE("fit rejects degenerate data") {
  std::vector<AccuracyPoint> flat;
  for (double n0 : {10.0, 30.0, 60.0, 90.0}) flat.push_back({n0, 0.0, 0.9});
  CHECK_THROWS_AS(fit_accuracy_model(flat), Error);
  std::vector<AccuracyPoint> few{{10, 0, 0.5}, {30, 0, 0.8}, {60, 0, 0.9}};
  CHECK_THROWS_AS(fit_accuracy_model(few), Error);
  std::vector<AccuracyPoint> one_load{{30, 0, 0.5}, {30, 0, 0.8}, {30, 0, 0.9}, {30, 0, 0.7}};
  CHECK_THROWS_AS(fit_accuracy_model(one_load), Error);
  try {
    fit_accuracy_model(flat);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidInput);
  }
}

TEST_CASE("sweep csv round trip") {
  const auto path = std::filesystem::temp_directory_path() / "smqc_test_sweep.csv";
  std::vector<SweepRow> rows{{10, 500, 100, 0.2, 0.17, 0.24}, {30, 500, 450, 0.9, 0.87, 0.92}};
  write_sweep_csv(path, rows);
  const auto back = read_sweep_csv(path);
  REQUIRE(back.size() == 2);
  CHECK(back[1].mean_n == 30);
  CHECK(back[1].correct == 450);
  CHECK(back[1].accuracy == doctest::Approx(0.9));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_sweep_csv(path), Error);
}

TEST_CASE("a bright label decodes in the frequency image") {
  SimulationSetup setup;
  const auto& set = singles();
  const auto r = run_trial("H", 100, setup, 5, set);
  CHECK(r.truth == "H");
  CHECK(r.molecules_at_start == 100);
  CHECK(r.frequency.label == "H");
}

TEST_CASE("sweep tables depend only on the seed") {
  SimulationSetup setup;
  setup.label.canvas = Canvas{128, 128, 40.0};
  setup.label.font.cell_size = 6;
  setup.label.qd_count = 60;
  SweepOptions opt;
  opt.mean_counts = {20};
  opt.trials = 4;
  opt.charset = {"A", "B", "C"};
  const auto a = accuracy_sweep(opt, setup);
  const auto b = accuracy_sweep(opt, setup);
  REQUIRE(a.frequency.size() == 1);
  CHECK(a.frequency[0].correct == b.frequency[0].correct);
  CHECK(a.frequency[0].trials == 4);
  CHECK(a.time.empty());
  opt.trials = 0;
  CHECK_THROWS_AS(accuracy_sweep(opt, setup), Error);
}
