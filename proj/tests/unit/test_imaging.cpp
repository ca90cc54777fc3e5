// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "smqc/error.hpp"
#include "smqc/imaging.hpp"

using namespace smqc;

namespace {

constexpr double kPi = std::numbers::pi;
const double kOmega = 2 * kPi * 1000.0;

// Arrival times of a single-pixel emitter with mean count about n.
std::vector<double> stream_times(double v, double n, std::uint64_t seed,
                                 double duration = 0.1) {
  const Canvas canvas{3, 3, 1.0};
  Emitter e;
  e.x = 1;
  e.y = 1;
  e.spot_radius = 0;
  e.visibility = v;
  e.peak_rate = 2.0 * n / duration;
  ExposureConfig exp;
  exp.duration = duration;
  Rng rng(seed);
  PhotonRecorder rec;
  simulate_emitter_stream(e, canvas, {}, exp, 0.0, rng, rec);
  return rec.times;
}

std::vector<double> uniform_times(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> t(n);
  for (auto& x : t) x = 0.1 * uniform01(rng);
  return t;
}

}  // namespace

TEST_CASE("dft magnitude edge cases") {
  CHECK(dft_magnitude({}, kOmega) == 0.0);
  const std::vector<double> one{0.0123};
  CHECK(dft_magnitude(one, kOmega) == doctest::Approx(1.0));
  const std::vector<double> same(50, 0.0371);
  CHECK(dft_magnitude(same, kOmega) == doctest::Approx(50.0));
  // two photons half a period apart cancel
  const std::vector<double> pair{0.0, 0.0005};
  CHECK(dft_magnitude(pair, kOmega) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("phasor sum agrees with std::polar") {
  const auto t = uniform_times(5000, 4);
  for (double w : {kOmega, 2 * kPi * 733.3, 2 * kPi * 1e5, 0.1}) {
    std::complex<double> ref = 0.0;
    for (double x : t) ref += std::polar(1.0, -w * x);
    const auto got = phasor_sum(t, w);
    CHECK(got.real() == doctest::Approx(ref.real()).epsilon(1e-9).scale(100));
    CHECK(got.imag() == doctest::Approx(ref.imag()).epsilon(1e-9).scale(100));
  }
}

TEST_CASE("phasor sum is linear and obeys the triangle inequality") {
  const auto a = uniform_times(700, 1);
  const auto b = stream_times(0.8, 900, 2);
  auto ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  const auto sa = phasor_sum(a, kOmega);
  const auto sb = phasor_sum(b, kOmega);
  const auto sab = phasor_sum(ab, kOmega);
  CHECK(std::abs(sab - (sa + sb)) < 1e-9);
  CHECK(std::abs(sab) <= std::abs(sa) + std::abs(sb) + 1e-9);
  CHECK(std::abs(sab) <= static_cast<double>(ab.size()));
}

TEST_CASE("coherent streams recover their visibility") {
  for (double v : {0.3, 0.6, 0.9}) {
    for (double n : {1e3, 1e4, 1e5}) {
      const int seeds = 20;
      double sum = 0.0;
      for (int s = 0; s < seeds; ++s) {
        const auto t = stream_times(v, n, derive_seed(static_cast<std::uint64_t>(n), s));
        const auto est = estimate_visibility(dft_magnitude(t, kOmega),
                                             static_cast<double>(t.size()), 100.0);
        sum += est.value;
      }
      // per-seed sigma of 2f/N is at most sqrt(2/N)
      CHECK(std::abs(sum / seeds - v) <= 3.0 * std::sqrt(2.0 / n / seeds));
    }
  }
}

TEST_CASE("incoherent streams do not modulate") {
  for (double n : {1e3, 1e4, 1e5}) {
    int over = 0;
    for (int s = 0; s < 20; ++s) {
      const auto t = stream_times(0.0, n, derive_seed(7, s));
      const double f = dft_magnitude(t, kOmega);
      if (f > 3.0 * std::sqrt(static_cast<double>(t.size()))) ++over;
    }
    CHECK(over <= 1);
  }
}

TEST_CASE("off-peak frequencies stay at the noise floor") {
  int within = 0;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) {
    const auto t = stream_times(0.9, 1e4, derive_seed(31, s));
    // 100 Hz away is ten linewidths of a 0.1 s exposure
    const double f = dft_magnitude(t, 2 * kPi * 1100.0);
    if (f <= 3.0 * std::sqrt(static_cast<double>(t.size()))) ++within;
  }
  CHECK(within >= 198);
}

TEST_CASE("spectrum of a coherent stream peaks at the modulation frequency") {
  const auto t = stream_times(0.9, 2e4, 5);
  const auto grid = linear_grid(500.0, 1500.0, 101);
  REQUIRE(grid.size() == 101);
  CHECK(grid.front() == 500.0);
  CHECK(grid.back() == 1500.0);
  const auto spec = modulation_spectrum(t, grid);
  const auto peak = std::max_element(spec.magnitude.begin(), spec.magnitude.end());
  CHECK(grid[static_cast<std::size_t>(peak - spec.magnitude.begin())] == doctest::Approx(1000.0));
  CHECK(*std::max_element(spec.normalized.begin(), spec.normalized.end()) == 1.0);
  CHECK(linear_grid(1.0, 2.0, 1) == std::vector<double>{1.0});
  CHECK_THROWS_AS(linear_grid(1.0, 2.0, 0), Error);
}

TEST_CASE("visibility estimate validation") {
  CHECK(estimate_visibility(50.0, 100.0, 100.0).value == 1.0);
  CHECK_FALSE(estimate_visibility(50.0, 100.0, 100.0).clamped);
  CHECK(estimate_visibility(60.0, 100.0, 100.0).clamped);
  CHECK_THROWS_AS(estimate_visibility(1.0, 0.0, 100.0), Error);
  CHECK_THROWS_AS(estimate_visibility(1.0, 10.0, 9.0), Error);
}

TEST_CASE("normalization is invariant to integer rescaling") {
  Rng rng(3);
  std::vector<double> raw(4096);
  for (auto& x : raw) x = static_cast<double>(rng() % 1000);
  const auto base = normalize_to_u8(raw);
  CHECK(*std::max_element(base.begin(), base.end()) == 255);
  for (double c : {2.0, 3.0, 7.0, 1000.0, 0.5}) {
    auto scaled = raw;
    for (auto& x : scaled) x *= c;
    CHECK(normalize_to_u8(scaled) == base);
  }
  const std::vector<double> zeros(10, 0.0);
  CHECK(normalize_to_u8(zeros) == std::vector<std::uint8_t>(10, 0));
}

TEST_CASE("accumulated images match rendering the full stream") {
  LabelConfig cfg;
  cfg.canvas = Canvas{96, 96, 30.0};
  cfg.font.cell_size = 4;
  cfg.molecule_count = 15;
  cfg.qd_count = 40;
  auto a = build_label("B", cfg, 8);
  auto b = a;
  coherence::PulsePairDrive drive;
  const double omega = 2 * kPi * drive.mod_frequency;
  ImageAccumulator acc(a.canvas, omega);
  simulate_read(a, drive, ExposureConfig{}, acc);
  const auto stream = simulate_read(b, drive, ExposureConfig{});
  const auto ti = time_image(acc);
  const auto tr = render_time_image(stream);
  CHECK(ti.raw == tr.raw);
  CHECK(ti.values == tr.values);
  const auto fi = freq_image(acc);
  const auto fr = render_freq_image(stream, omega);
  for (std::size_t i = 0; i < fi.raw.size(); ++i) {
    CHECK(fi.raw[i] == doctest::Approx(fr.raw[i]).epsilon(1e-9).scale(1.0));
  }
  CHECK_THROWS_AS(render_freq_image(stream, 0.0), Error);
}

TEST_CASE("contrast ratio") {
  const Canvas canvas{2, 2, 1.0};
  const GlyphMask mask(canvas, {1, 0, 0, 0});
  const std::vector<double> raw{9.0, 3.0, 3.0, 3.0};
  CHECK(contrast_ratio(raw, mask) == doctest::Approx(3.0));
  const std::vector<double> dark{9.0, 0.0, 0.0, 0.0};
  CHECK(std::isinf(contrast_ratio(dark, mask)));
  const GlyphMask full(canvas, {1, 1, 1, 1});
  CHECK_THROWS_AS(contrast_ratio(raw, full), Error);
  CHECK_THROWS_AS(contrast_ratio(std::vector<double>{1.0}, mask), Error);
}

TEST_CASE("pgm and csv files") {
  const auto dir = std::filesystem::temp_directory_path() / "smqc_test_imaging";
  std::filesystem::create_directories(dir);
  const Canvas canvas{3, 2, 1.0};
  const std::vector<std::uint8_t> px{0, 10, 255, 32, 13, 1};
  write_pgm(dir / "a.pgm", canvas, px);
  const auto img = read_pgm(dir / "a.pgm");
  CHECK(img.width == 3);
  CHECK(img.height == 2);
  CHECK(img.values == px);
  CHECK_THROWS_AS(write_pgm(dir / "b.pgm", canvas, std::vector<std::uint8_t>(2)), Error);
  CHECK_THROWS_AS(read_pgm(dir / "missing.pgm"), Error);
  {
    std::ofstream(dir / "bad.pgm") << "P2\n3 2\n255\n";
  }
  CHECK_THROWS_AS(read_pgm(dir / "bad.pgm"), Error);

  write_raw_csv(dir / "raw.csv", canvas, std::vector<double>{0, 1, 2, 3, 4, 5.5});
  std::ifstream is(dir / "raw.csv");
  std::string line;
  std::getline(is, line);
  CHECK(line == "x,y,value");
  std::getline(is, line);
  CHECK(line == "0,0,0");
  for (int i = 0; i < 5; ++i) std::getline(is, line);
  CHECK(line == "2,1,5.5");
  std::filesystem::remove_all(dir);
}
