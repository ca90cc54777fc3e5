// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Prints one PASS/FAIL line per criterion, with the
// individual checks behind it, and exits non-zero when any criterion fails.
// Progress goes to stderr.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "../common/stats.hpp"
#include "smqc/coherence.hpp"
#include "smqc/config.hpp"
#include "smqc/imaging.hpp"
#include "smqc/label.hpp"
#include "smqc/photon.hpp"
#include "smqc/recognizer.hpp"

using namespace smqc;

namespace {

constexpr double kPi = std::numbers::pi;

// Tolerances and sizes, fixed here.
constexpr double kVisibilityTol = 0.02;
constexpr double kStreamPhotons = 1e5;
constexpr int kStreamSeeds = 20;
constexpr double kIncoherentMax = 0.02;
constexpr int kIncoherentMinPass = 19;
constexpr int kConcealTrials = 200;
constexpr double kConcealFreqMin = 0.99;
constexpr double kConcealGapMin = 0.40;
constexpr std::size_t kSweepTrials = 500;
constexpr double kAcc100Min = 0.99;
constexpr double kAcc50Min = 0.95;
constexpr int kBleachSeeds = 100;
constexpr double kGofLevel = 0.01;
constexpr double kSurvivorLo = 15.0;
constexpr double kSurvivorHi = 27.0;
constexpr std::size_t kReadTrials = 100;
constexpr double kRead3Max = 0.70;
constexpr double kReusableMin = 0.99;
constexpr double kFitRelTol = 0.01;
constexpr double kFitR2Min = 0.95;

int g_failures = 0;

// Collects the checks of one criterion and prints them when it goes out of
// scope.
class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}
  Criterion(const Criterion&) = delete;
  Criterion& operator=(const Criterion&) = delete;
  ~Criterion() {
    std::printf("%s %s\n", ok_ ? "PASS" : "FAIL", name_.c_str());
    for (const auto& line : lines_) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
    if (!ok_) ++g_failures;
  }

  void check(bool ok, const std::string& what, const std::string& detail) {
    ok_ = ok_ && ok;
    lines_.push_back((ok ? "ok   " : "FAIL ") + what + ": " + detail);
  }

 private:
  std::string name_;
  bool ok_ = true;
  std::vector<std::string> lines_;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

ProgressFn progress(const char* what) {
  return [what](std::size_t done, std::size_t total) {
    if (done % 50 == 0 || done == total) {
      std::fprintf(stderr, "  %s %zu/%zu\n", what, done, total);
    }
  };
}

// Arrival times of one single-pixel emitter with mean count n.
std::vector<double> emitter_times(double v, double n, std::uint64_t seed) {
  const Canvas canvas{1, 1, 1.0};
  Emitter e;
  e.spot_radius = 0;
  e.visibility = v;
  e.peak_rate = 2.0 * n / 0.1;
  Rng rng(seed);
  PhotonRecorder rec;
  simulate_emitter_stream(e, canvas, {}, ExposureConfig{}, 0.0, rng, rec);
  return rec.times;
}

const double kOmega = 2 * kPi * 1000.0;

void visibility_recovery() {
  Criterion crit("visibility_recovery");
  double worst = 0.0;
  for (double v : {0.3, 0.6, 0.9}) {
    for (int s = 0; s < kStreamSeeds; ++s) {
      const auto t = emitter_times(v, kStreamPhotons, derive_seed(0xacc1, s, static_cast<std::uint64_t>(v * 10)));
      const double est = 2.0 * dft_magnitude(t, kOmega) / static_cast<double>(t.size());
      worst = std::max(worst, std::abs(est - v));
    }
  }
  crit.check(worst <= kVisibilityTol, "visibility_recovery",
            fmt("max |2f/N - V| = %.4f over V in {0.3,0.6,0.9} x %d seeds, N~1e5 (tol %.2f)",
                worst, kStreamSeeds, kVisibilityTol));
}

void incoherent_suppression() {
  Criterion crit("incoherent_suppression");
  const RunConfig cfg;
  const auto grid = linear_grid(cfg.spectrum_min_hz, cfg.spectrum_max_hz, cfg.spectrum_points);
  auto check = [&](const char* name, auto&& make_stream) {
    int pass = 0;
    double worst = 0.0;
    for (int s = 0; s < kStreamSeeds; ++s) {
      const auto t = make_stream(derive_seed(0xacc2, s));
      const double n = static_cast<double>(t.size());
      const double ratio = dft_magnitude(t, kOmega) / n;
      const auto spec = modulation_spectrum(t, grid);
      const double at_mod = spec.magnitude[static_cast<std::size_t>(cfg.spectrum_points / 2)];
      worst = std::max(worst, ratio);
      if (ratio <= kIncoherentMax && at_mod <= 3.0 * std::sqrt(n)) ++pass;
    }
    crit.check(pass >= kIncoherentMinPass, name,
              fmt("%d/%d seeds with f/N <= %.2f and no 1 kHz bin above 3 sqrt(N); max f/N %.4f",
                  pass, kStreamSeeds, kIncoherentMax, worst));
  };
  check("incoherent_suppression_qd", [&](std::uint64_t seed) {
    return emitter_times(cfg.qd_visibility(), kStreamPhotons, seed);
  });
  check("incoherent_suppression_dark", [&](std::uint64_t seed) {
    const Canvas one{1, 1, 1.0};
    Rng rng(seed);
    PhotonRecorder rec;
    dark_counts(one, kStreamPhotons / 0.1, 0.1, rng, rec);
    return rec.times;
  });
}

void concealment() {
  Criterion crit("concealment_extraction");
  const RunConfig cfg;
  const auto setup = cfg.setup();
  const auto charset = cfg.charset_entries();
  const auto templates = build_templates(charset, setup.label.canvas, setup.label.font);
  int freq_ok = 0;
  int time_ok = 0;
  for (int i = 0; i < kConcealTrials; ++i) {
    const auto r = run_trial("H", cfg.molecule_count, setup, derive_seed(0xacc3, i), templates);
    freq_ok += r.frequency.label == "H";
    time_ok += r.time.label == "H";
    if ((i + 1) % 50 == 0) std::fprintf(stderr, "  concealment %d/%d\n", i + 1, kConcealTrials);
  }
  const double f = static_cast<double>(freq_ok) / kConcealTrials;
  const double t = static_cast<double>(time_ok) / kConcealTrials;
  crit.check(f >= kConcealFreqMin && f - t >= kConcealGapMin, "concealment",
            fmt("'H', %d molecules, %d QDs, %d trials: frequency %.3f, time %.3f, gap %.3f "
                "(need >= %.2f and gap >= %.2f)",
                cfg.molecule_count, cfg.qd_count, kConcealTrials, f, t, f - t, kConcealFreqMin,
                kConcealGapMin));
}

double interpolate(const std::vector<SweepRow>& rows, double n) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double a = rows[i - 1].mean_n;
    const double b = rows[i].mean_n;
    if (n >= a && n <= b) {
      return rows[i - 1].accuracy + (n - a) / (b - a) * (rows[i].accuracy - rows[i - 1].accuracy);
    }
  }
  return std::nan("");
}

std::vector<SweepRow> accuracy_sweep_check() {
  Criterion crit("accuracy_sweep");
  const RunConfig cfg;
  SweepOptions opt;
  opt.mean_counts = {10, 30, 60, 90, 120, 150};
  opt.trials = kSweepTrials;
  opt.seed = 0xacc4;
  opt.charset = cfg.charset_entries();
  const auto rows = accuracy_sweep(opt, cfg.setup(), progress("sweep")).frequency;
  std::string table;
  for (const auto& r : rows) table += fmt(" %d:%.3f", r.mean_n, r.accuracy);

  const double a100 = interpolate(rows, 100.0);
  const double a50 = interpolate(rows, 50.0);
  crit.check(a100 >= kAcc100Min, "sweep_accuracy_at_100",
            fmt("interpolated %.4f (need >= %.2f);%s", a100, kAcc100Min, table.c_str()));
  crit.check(a50 >= kAcc50Min, "sweep_accuracy_at_50",
            fmt("interpolated %.4f (need >= %.2f)", a50, kAcc50Min));

  bool monotone = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[j].ci_high < rows[i].ci_low) monotone = false;
    }
  }
  crit.check(monotone, "sweep_monotone",
            fmt("no later 95%% Wilson interval lies below an earlier one across %zu counts x %zu trials",
                rows.size(), kSweepTrials));
  return rows;
}

void bleaching_statistics() {
  Criterion crit("photobleaching_statistics");
  LabelConfig lc;
  lc.molecule_count = 1000;
  lc.qd_count = 0;
  lc.bleach.alpha = std::log(2.0);
  lc.bleach.power = 1.0;
  const auto base = build_label("W", lc, 0xacc5);
  std::vector<long> survivors;
  for (int s = 0; s < kBleachSeeds; ++s) {
    auto state = base;
    Rng rng(derive_seed(0xacc5, s));
    apply_bleaching(state, 1.0, rng);
    survivors.push_back(static_cast<long>(state.alive_molecules()));
  }
  const auto gof = testing::binomial_gof(survivors, 1000, 0.5);
  double mean = 0.0;
  for (long s : survivors) mean += static_cast<double>(s);
  mean /= kBleachSeeds;
  crit.check(gof.p_value > kGofLevel, "bleaching_binomial_gof",
            fmt("k = ln 2, t = 1 s, N0 = 1000, %d seeds: mean %.1f, chi2 %.2f on %d dof, p = %.3f",
                kBleachSeeds, mean, gof.statistic, gof.dof, gof.p_value));

  const RunConfig cfg;
  LabelConfig cal = cfg.setup().label;
  cal.molecule_count = 150;
  cal.qd_count = 0;
  double sum = 0.0;
  for (int s = 0; s < kBleachSeeds; ++s) {
    auto state = build_label("H", cal, derive_seed(0xacc6, s));
    Rng rng(derive_seed(0xacc7, s));
    apply_bleaching(state, 0.9, rng);
    sum += static_cast<double>(state.alive_molecules());
  }
  const double m = sum / kBleachSeeds;
  crit.check(m >= kSurvivorLo && m <= kSurvivorHi, "bleaching_calibration",
            fmt("k = %.4f 1/s, 150 molecules after 0.9 s: mean survivors %.2f (need [%.0f, %.0f])",
                cfg.alpha * cfg.power, m, kSurvivorLo, kSurvivorHi));
}

void disposability() {
  Criterion crit("disposability_trajectory");
  const RunConfig cfg;
  RepeatedReadOptions opt;
  opt.n_reads = cfg.n_reads;
  opt.trials = kReadTrials;
  opt.read_interval = cfg.read_interval;
  opt.seed = 0xacc8;
  opt.charset = cfg.charset_entries();

  auto setup = cfg.setup();
  setup.label.molecule_count = 150;
  const auto rows = repeated_read_trial(opt, setup, progress("disposable reads"));
  std::string traj;
  for (const auto& r : rows) traj += fmt(" read %d: %.1f survivors, acc %.3f;", r.read_index, r.survivors, r.accuracy);
  const auto& last = rows.back();
  crit.check(last.survivors >= kSurvivorLo && last.survivors <= kSurvivorHi && last.accuracy <= kRead3Max,
            "disposable_trajectory",
            fmt("need read-3 survivors in [%.0f, %.0f] and accuracy <= %.2f;%s", kSurvivorLo,
                kSurvivorHi, kRead3Max, traj.c_str()));

  setup.label.layer_stack = LayerStack::kQuenchInhibited;
  const auto keep = repeated_read_trial(opt, setup, progress("reusable reads"));
  bool ok = true;
  traj.clear();
  for (const auto& r : keep) {
    ok = ok && r.accuracy >= kReusableMin && r.min_survivors == 150 && r.max_survivors == 150;
    traj += fmt(" read %d: survivors [%zu, %zu], acc %.3f;", r.read_index, r.min_survivors,
                r.max_survivors, r.accuracy);
  }
  crit.check(ok, "reusable_trajectory",
            fmt("need accuracy >= %.2f and exactly 150 survivors on every read;%s", kReusableMin,
                traj.c_str()));
}

void fit_consistency(const std::vector<SweepRow>& sweep) {
  Criterion crit("accuracy_model_fit");
  const double beta = -0.95, k = 0.08, ap = 2.24;
  std::vector<AccuracyPoint> pts;
  for (double t : {0.1, 0.55, 1.0}) {
    for (double n0 : {10.0, 30.0, 60.0, 90.0, 120.0, 150.0}) {
      pts.push_back({n0, t, beta * std::exp(-n0 * std::exp(-ap * t) * k) + 1.0});
    }
  }
  const auto fit = fit_accuracy_model(pts);
  const double eb = std::abs(fit.beta / beta - 1.0);
  const double ek = std::abs(fit.k_dis / k - 1.0);
  const double ea = std::abs(fit.alpha_p / ap - 1.0);
  crit.check(std::max({eb, ek, ea}) <= kFitRelTol, "fit_self_consistency",
            fmt("relative errors beta %.2e, k_dis %.2e, alpha_p %.2e (tol %.2f)", eb, ek, ea,
                kFitRelTol));

  const RunConfig cfg;
  std::vector<AccuracyPoint> data;
  for (const auto& r : sweep) data.push_back({static_cast<double>(r.mean_n), 0.0, r.accuracy});
  FitOptions opt;
  opt.alpha_p_init = cfg.alpha * cfg.power;
  opt.charset_size = cfg.charset_entries().size();
  try {
    const auto sf = fit_accuracy_model(data, opt);
    crit.check(sf.residual_r2 >= kFitR2Min, "fit_sweep_r2",
              fmt("beta %.4f, k_dis %.4f, R^2 %.4f (need >= %.2f)", sf.beta, sf.k_dis,
                  sf.residual_r2, kFitR2Min));
  } catch (const std::exception& e) {
    crit.check(false, "fit_sweep_r2", std::string("fit failed: ") + e.what());
  }
}

void physics_suite() {
  Criterion crit("physics_suite");
  using namespace coherence;
  Rng rng(0xacc9);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(-4 * kPi, 4 * kPi), vv(0.0, 1.0);
  double pair_err = 0.0, reduce_err = 0.0;
  bool in_range = true;
  for (int i = 0; i < 100000; ++i) {
    const double t = th(rng), t2 = th(rng), p = ph(rng), v = vv(rng);
    const double s2 = std::sin(t) * std::sin(t);
    const double a = excited_population(t, p, v);
    pair_err = std::max(pair_err, std::abs(a + excited_population(t, p + kPi, v) - s2));
    in_range = in_range && a >= 0.0 && a <= s2 + 1e-15;
    const double g = excited_population_general(t, t2, p);
    in_range = in_range && g >= 0.0 && g <= 1.0;
    reduce_err = std::max(reduce_err, std::abs(excited_population_general(t, t, p) -
                                               excited_population(t, p, 1.0)));
  }
  crit.check(pair_err <= 1e-12, "physics_pair_sum", fmt("max deviation %.2e over 1e5 draws", pair_err));
  crit.check(in_range, "physics_population_range", "all populations within [0, sin^2 theta] and [0, 1]");
  crit.check(reduce_err <= 1e-12, "physics_equal_pulse_reduction",
            fmt("general form with equal pulses vs V = 1 form: max deviation %.2e", reduce_err));

  double ratio_err = 0.0;
  for (double s : {1e6, 1e9, 3.33e11, 1e13}) {
    const double single = dephasing_time({DephasingGeometry::kSingleAxis, s});
    const double iso = dephasing_time({DephasingGeometry::kIsotropicThreeAxis, s});
    ratio_err = std::max(ratio_err, std::abs(single / iso - 3.0));
  }
  crit.check(ratio_err <= 1e-12, "physics_dephasing_ratio", fmt("T2 single / isotropic = 3 within %.1e", ratio_err));

  bool triangle = true;
  for (int s = 0; s < 50; ++s) {
    const auto a = emitter_times(0.7, 2000, derive_seed(0xacca, s));
    const auto b = emitter_times(0.0, 3000, derive_seed(0xaccb, s));
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    for (double w : {kOmega, 2 * kPi * 1234.5}) {
      const double fab = dft_magnitude(ab, w);
      triangle = triangle && fab <= dft_magnitude(a, w) + dft_magnitude(b, w) + 1e-9 &&
                 fab <= static_cast<double>(ab.size());
    }
  }
  crit.check(triangle, "physics_dft_triangle", "f(A+B) <= f(A) + f(B) and f <= N on 50 stream pairs");

  // Rescaled count images normalize identically and decode identically.
  const RunConfig cfg;
  auto setup = cfg.setup();
  const auto templates = build_templates(cfg.charset_entries(), setup.label.canvas, setup.label.font);
  bool invariant = true;
  for (int s = 0; s < 5; ++s) {
    auto state = build_label("K", setup.label, derive_seed(0xaccc, s));
    ImageAccumulator acc(state.canvas, setup.omega());
    simulate_read(state, setup.drive, setup.exposure, acc);
    const auto img = time_image(acc);
    const auto base = classify(img, templates);
    const auto argmax = std::max_element(img.raw.begin(), img.raw.end()) - img.raw.begin();
    for (double c : {2.0, 3.0, 17.0}) {
      auto raw = img.raw;
      for (auto& x : raw) x *= c;
      const auto values = normalize_to_u8(raw);
      invariant = invariant && values == img.values &&
                  std::max_element(raw.begin(), raw.end()) - raw.begin() == argmax &&
                  classify(values, templates).label == base.label;
    }
  }
  crit.check(invariant, "physics_normalization_invariance",
            "time images scaled by 2, 3, 17 keep pixels, argmax and decoded label");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  physics_suite();
  visibility_recovery();
  incoherent_suppression();
  bleaching_statistics();
  concealment();
  disposability();
  const auto sweep = accuracy_sweep_check();
  fit_consistency(sweep);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s: %d criteria failed, %.0f s\n", g_failures ? "FAILED" : "ALL PASSED", g_failures,
              secs);
  return g_failures == 0 ? 0 : 1;
}
