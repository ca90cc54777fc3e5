// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#include "smqc/recognizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <Eigen/Dense>
#include <unsupported/Eigen/NonLinearOptimization>
#include <json.hpp>

#include "smqc/error.hpp"
#include "smqc/random.hpp"

namespace smqc {
namespace {

inline void sort2(std::uint8_t& a, std::uint8_t& b) {
  const std::uint8_t lo = std::min(a, b);
  b = std::max(a, b);
  a = lo;
}

// Median of nine by the classic 19-exchange network.
inline std::uint8_t median9(std::uint8_t p[9]) {
  sort2(p[1], p[2]); sort2(p[4], p[5]); sort2(p[7], p[8]);
  sort2(p[0], p[1]); sort2(p[3], p[4]); sort2(p[6], p[7]);
  sort2(p[1], p[2]); sort2(p[4], p[5]); sort2(p[7], p[8]);
  sort2(p[0], p[3]); sort2(p[5], p[8]); sort2(p[4], p[7]);
  sort2(p[3], p[6]); sort2(p[1], p[4]); sort2(p[2], p[5]);
  sort2(p[4], p[7]); sort2(p[4], p[2]); sort2(p[6], p[4]);
  sort2(p[4], p[2]);
  return p[4];
}

std::vector<std::uint8_t> median_root(std::vector<std::uint8_t> img, int w, int h) {
  for (;;) {
    auto next = median3x3(img, w, h);
    if (next == img) return img;
    img = std::move(next);
  }
}

std::string pick_glyph(std::span<const std::string> charset, std::uint64_t seed) {
  Rng rng(derive_seed(seed, stream::kTrial));
  auto i = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(charset.size()));
  return charset[std::min(i, charset.size() - 1)];
}

std::uint64_t trial_seed(std::uint64_t seed, int mean_n, std::size_t trial) {
  return derive_seed(derive_seed(seed, stream::kTrial, static_cast<std::uint64_t>(mean_n)),
                     trial);
}

void require_charset(std::span<const std::string> charset) {
  if (charset.empty()) fail(ErrorKind::kInvalidInput, "charset is empty");
}

SweepRow make_row(int mean_n, std::size_t trials, std::size_t correct) {
  SweepRow row;
  row.mean_n = mean_n;
  row.trials = trials;
  row.correct = correct;
  row.accuracy = trials ? static_cast<double>(correct) / static_cast<double>(trials) : 0.0;
  const auto ci = wilson_interval(correct, trials);
  row.ci_low = ci.low;
  row.ci_high = ci.high;
  return row;
}

// Residuals of the accuracy model for Eigen's Levenberg-Marquardt. The
// parameter vector is (beta, k_dis[, alpha_p][, c]).
struct AccuracyResiduals {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;

  std::span<const AccuracyPoint> data;
  bool fit_alpha_p;
  bool fit_c;
  double alpha_p_fixed;
  double c_fixed;

  int inputs() const { return 2 + (fit_alpha_p ? 1 : 0) + (fit_c ? 1 : 0); }
  int values() const { return static_cast<int>(data.size()); }

  void unpack(const Eigen::VectorXd& x, double& beta, double& k, double& ap,
              double& c) const {
    int i = 0;
    beta = x[i++];
    k = x[i++];
    ap = fit_alpha_p ? x[i++] : alpha_p_fixed;
    c = fit_c ? x[i++] : c_fixed;
  }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& fvec) const {
    double beta, k, ap, c;
    unpack(x, beta, k, ap, c);
    for (std::size_t i = 0; i < data.size(); ++i) {
      const double u = data[i].n0 * std::exp(-ap * data[i].t);
      fvec[static_cast<Eigen::Index>(i)] =
          beta * std::exp(-u * k) + c - data[i].accuracy;
    }
    return 0;
  }

  int df(const Eigen::VectorXd& x, Eigen::MatrixXd& jac) const {
    double beta, k, ap, c;
    unpack(x, beta, k, ap, c);
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto r = static_cast<Eigen::Index>(i);
      const double u = data[i].n0 * std::exp(-ap * data[i].t);
      const double e = std::exp(-u * k);
      int j = 0;
      jac(r, j++) = e;
      jac(r, j++) = -beta * e * u;
      if (fit_alpha_p) jac(r, j++) = beta * e * k * data[i].t * u;
      if (fit_c) jac(r, j++) = 1.0;
    }
    return 0;
  }
};

}  // namespace

std::vector<std::string> single_charset() {
  std::vector<std::string> out;
  for (char c : font_charset()) out.emplace_back(1, c);
  return out;
}

std::vector<std::string> pair_charset() {
  std::vector<std::string> out;
  out.reserve(26 * 26);
  for (char a = 'A'; a <= 'Z'; ++a) {
    for (char b = 'A'; b <= 'Z'; ++b) out.push_back(std::string{a, b});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Templates

TemplateSet::TemplateSet(Canvas canvas, std::vector<Template> templates)
    : canvas_(canvas), templates_(std::move(templates)) {
  std::sort(templates_.begin(), templates_.end(),
            [](const Template& a, const Template& b) { return a.label < b.label; });
  for (std::size_t i = 1; i < templates_.size(); ++i) {
    if (templates_[i].label == templates_[i - 1].label) {
      fail(ErrorKind::kInvalidInput, "duplicate template label '" + templates_[i].label + "'");
    }
  }
}

const Template* TemplateSet::find(const std::string& label) const {
  auto it = std::lower_bound(
      templates_.begin(), templates_.end(), label,
      [](const Template& t, const std::string& l) { return t.label < l; });
  return it != templates_.end() && it->label == label ? &*it : nullptr;
}

std::vector<std::string> TemplateSet::labels() const {
  std::vector<std::string> out;
  for (const auto& t : templates_) out.push_back(t.label);
  return out;
}

TemplateSet build_templates(std::span<const std::string> charset,
                            const Canvas& canvas, const FontSpec& font) {
  require_charset(charset);
  std::vector<Template> out;
  out.reserve(charset.size());
  for (const auto& label : charset) {
    const auto mask = rasterize_glyph(label, canvas, font);
    std::vector<std::uint8_t> img(mask.bits().begin(), mask.bits().end());
    for (auto& v : img) v = v ? 255 : 0;
    img = median_root(std::move(img), canvas.width, canvas.height);
    Template t;
    t.label = label;
    for (std::uint32_t i = 0; i < img.size(); ++i) {
      if (img[i]) t.pixels.push_back(i);
    }
    out.push_back(std::move(t));
  }
  return TemplateSet(canvas, std::move(out));
}

std::vector<std::uint8_t> template_image(const TemplateSet& set,
                                         const std::string& label) {
  const Template* t = set.find(label);
  if (t == nullptr) fail(ErrorKind::kInvalidInput, "no template for '" + label + "'");
  std::vector<std::uint8_t> img(set.canvas().pixel_count(), 0);
  for (auto p : t->pixels) img[p] = 255;
  return img;
}

// ---------------------------------------------------------------------------
// Classification

std::vector<std::uint8_t> median3x3(std::span<const std::uint8_t> values,
                                    int width, int height) {
  if (width <= 0 || height <= 0 ||
      values.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    fail(ErrorKind::kInvalidInput, "image size does not match dimensions");
  }
  std::vector<std::uint8_t> out(values.size());
  for (int y = 0; y < height; ++y) {
    const int ys[3] = {std::max(0, y - 1), y, std::min(height - 1, y + 1)};
    for (int x = 0; x < width; ++x) {
      const int xs[3] = {std::max(0, x - 1), x, std::min(width - 1, x + 1)};
      std::uint8_t p[9];
      int n = 0;
      for (int yy : ys) {
        const std::size_t row = static_cast<std::size_t>(yy) * static_cast<std::size_t>(width);
        for (int xx : xs) p[n++] = values[row + static_cast<std::size_t>(xx)];
      }
      out[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
          static_cast<std::size_t>(x)] = median9(p);
    }
  }
  return out;
}

std::optional<int> otsu_threshold(std::span<const std::uint8_t> values) {
  std::array<std::uint64_t, 256> hist{};
  for (auto v : values) ++hist[v];
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (int i = 0; i < 256; ++i) sum += i * static_cast<double>(hist[i]);
  double w_b = 0.0;
  double sum_b = 0.0;
  double best = -1.0;
  std::optional<int> level;
  for (int t = 0; t < 255; ++t) {
    w_b += static_cast<double>(hist[t]);
    sum_b += t * static_cast<double>(hist[t]);
    const double w_f = n - w_b;
    if (w_b == 0.0) continue;
    if (w_f == 0.0) break;
    const double d = sum_b / w_b - (sum - sum_b) / w_f;
    const double between = w_b * w_f * d * d;
    if (between > best) {
      best = between;
      level = t;
    }
  }
  return level;
}

Classification classify(std::span<const std::uint8_t> values,
                        const TemplateSet& templates) {
  const Canvas& canvas = templates.canvas();
  if (values.size() != canvas.pixel_count()) {
    fail(ErrorKind::kInvalidInput, "image dimensions do not match the templates");
  }
  if (templates.size() == 0) fail(ErrorKind::kInvalidInput, "template set is empty");
  Classification out;
  out.no_signal = true;
  if (std::all_of(values.begin(), values.end(), [](std::uint8_t v) { return v == 0; })) {
    return out;
  }
  const auto filtered = median3x3(values, canvas.width, canvas.height);
  const auto level = otsu_threshold(filtered);
  if (!level) return out;
  const int t = *level;
  out.threshold = t;

  const double n = static_cast<double>(filtered.size());
  std::size_t fg = 0;
  for (auto v : filtered) fg += v > t;
  if (fg == 0 || fg == filtered.size()) return out;
  const double f = static_cast<double>(fg);
  const double var_image = f * (1.0 - f / n);

  double best = -2.0;
  double second = -2.0;
  const Template* best_t = nullptr;
  const Template* second_t = nullptr;
  for (const auto& tpl : templates.templates()) {
    const double a = static_cast<double>(tpl.pixels.size());
    double score = 0.0;
    if (a > 0.0 && a < n) {
      std::size_t hits = 0;
      for (auto p : tpl.pixels) hits += filtered[p] > t;
      score = (static_cast<double>(hits) - f * a / n) /
              std::sqrt(var_image * a * (1.0 - a / n));
    }
    // Templates are sorted by label, so strict comparison breaks ties
    // toward the lexicographically smaller label.
    if (score > best) {
      second = best;
      second_t = best_t;
      best = score;
      best_t = &tpl;
    } else if (score > second) {
      second = score;
      second_t = &tpl;
    }
  }
  out.no_signal = false;
  out.label = best_t->label;
  out.score = best;
  if (second_t != nullptr) {
    out.runner_up = second_t->label;
    out.runner_up_score = second;
  }
  return out;
}

Classification classify(const FrequencyDomainImage& image,
                        const TemplateSet& templates) {
  return classify(image.values, templates);
}

Classification classify(const TimeDomainImage& image, const TemplateSet& templates) {
  return classify(image.values, templates);
}

// ---------------------------------------------------------------------------
// Trials and sweeps

double SimulationSetup::omega() const {
  return 2.0 * std::numbers::pi * drive.mod_frequency;
}

void SimulationSetup::validate() const {
  label.validate();
  drive.validate();
  exposure.validate();
}

TrialOutcome run_trial(const std::string& text, int molecules,
                       const SimulationSetup& setup, std::uint64_t seed,
                       const TemplateSet& templates) {
  LabelConfig cfg = setup.label;
  cfg.molecule_count = molecules;
  LabelState state = build_label(text, cfg, seed);
  ImageAccumulator acc(state.canvas, setup.omega());
  const auto summary = simulate_read(state, setup.drive, setup.exposure, acc);
  TrialOutcome out;
  out.truth = text;
  out.molecules_at_start = summary.molecules_at_start;
  out.time = classify(time_image(acc), templates);
  out.frequency = classify(freq_image(acc), templates);
  return out;
}

ProportionCi wilson_interval(std::size_t successes, std::size_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double denom = 1.0 + z * z / n;
  const double centre = (p + z * z / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

SweepResult accuracy_sweep(const SweepOptions& options, const SimulationSetup& setup,
                           const ProgressFn& progress) {
  if (options.trials < 1) fail(ErrorKind::kInvalidInput, "trials must be >= 1");
  if (options.mean_counts.empty()) fail(ErrorKind::kInvalidInput, "no molecule counts given");
  require_charset(options.charset);
  setup.validate();
  for (int n : options.mean_counts) {
    if (n < 0) fail(ErrorKind::kInvalidInput, "molecule counts must be >= 0");
  }
  const auto templates = build_templates(options.charset, setup.label.canvas, setup.label.font);

  SweepResult result;
  const std::size_t total = options.trials * options.mean_counts.size();
  std::size_t done = 0;
  for (int mean_n : options.mean_counts) {
    std::size_t freq_ok = 0;
    std::size_t time_ok = 0;
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
      const auto seed = trial_seed(options.seed, mean_n, trial);
      const auto text = pick_glyph(options.charset, seed);
      const auto outcome = run_trial(text, mean_n, setup, seed, templates);
      freq_ok += outcome.frequency.label == text;
      time_ok += outcome.time.label == text;
      if (progress) progress(++done, total);
    }
    result.frequency.push_back(make_row(mean_n, options.trials, freq_ok));
    if (options.decode_time_image) {
      result.time.push_back(make_row(mean_n, options.trials, time_ok));
    }
  }
  return result;
}

std::vector<RepeatedReadRow> repeated_read_trial(const RepeatedReadOptions& options,
                                                 const SimulationSetup& setup,
                                                 const ProgressFn& progress) {
  if (options.n_reads < 1) fail(ErrorKind::kInvalidInput, "n_reads must be >= 1");
  if (options.trials < 1) fail(ErrorKind::kInvalidInput, "trials must be >= 1");
  require_charset(options.charset);
  setup.validate();
  const double rest = options.read_interval - setup.exposure.duration;
  if (options.n_reads > 1 && !(rest >= 0.0)) {
    fail(ErrorKind::kDomain, "read interval is shorter than the exposure");
  }
  const auto templates = build_templates(options.charset, setup.label.canvas, setup.label.font);

  std::vector<RepeatedReadRow> rows(static_cast<std::size_t>(options.n_reads));
  std::vector<double> survivor_sum(rows.size(), 0.0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rows[r].read_index = static_cast<int>(r) + 1;
    rows[r].min_survivors = static_cast<std::size_t>(-1);
  }
  const std::size_t total = options.trials * rows.size();
  std::size_t done = 0;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const auto seed = trial_seed(options.seed, setup.label.molecule_count, trial);
    const auto text = pick_glyph(options.charset, seed);
    LabelState state = build_label(text, setup.label, seed);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r > 0) bleach_between_reads(state, rest);
      ImageAccumulator acc(state.canvas, setup.omega());
      const auto summary = simulate_read(state, setup.drive, setup.exposure, acc);
      const auto decoded = classify(freq_image(acc), templates);
      auto& row = rows[r];
      row.trials += 1;
      row.correct += decoded.label == text;
      survivor_sum[r] += static_cast<double>(summary.molecules_at_start);
      row.min_survivors = std::min(row.min_survivors, summary.molecules_at_start);
      row.max_survivors = std::max(row.max_survivors, summary.molecules_at_start);
      if (progress) progress(++done, total);
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rows[r].survivors = survivor_sum[r] / static_cast<double>(rows[r].trials);
    rows[r].accuracy =
        static_cast<double>(rows[r].correct) / static_cast<double>(rows[r].trials);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Accuracy model

double AccuracyModelFit::predict(double n0, double t) const {
  return beta * std::exp(-n0 * std::exp(-alpha_p * t) * k_dis) + c;
}

AccuracyModelFit fit_accuracy_model(std::span<const AccuracyPoint> data,
                                    const FitOptions& options) {
  if (data.size() < 4) fail(ErrorKind::kInvalidInput, "need at least 4 data points");
  for (const auto& p : data) {
    if (!std::isfinite(p.n0) || !std::isfinite(p.t) || !std::isfinite(p.accuracy) ||
        p.n0 < 0.0 || p.t < 0.0) {
      fail(ErrorKind::kInvalidInput, "data points must be finite with n0, t >= 0");
    }
  }
  if (options.charset_size < 2) fail(ErrorKind::kInvalidInput, "charset size must be >= 2");

  const bool t_constant = std::all_of(data.begin(), data.end(), [&](const AccuracyPoint& p) {
    return p.t == data.front().t;
  });
  std::set<double> drives;
  for (const auto& p : data) drives.insert(p.n0 * std::exp(-options.alpha_p_init * p.t));
  if (drives.size() < 2) {
    fail(ErrorKind::kInvalidInput, "data span fewer than two distinct molecule loads");
  }
  const auto [lo, hi] = std::minmax_element(
      data.begin(), data.end(),
      [](const AccuracyPoint& a, const AccuracyPoint& b) { return a.accuracy < b.accuracy; });
  if (hi->accuracy - lo->accuracy <= 1e-12) {
    fail(ErrorKind::kInvalidInput, "accuracy is constant; the distortion rate is unidentifiable");
  }

  AccuracyResiduals f{data, !t_constant, options.free_c, options.alpha_p_init, options.c};

  // Initial guess: chance-level floor for beta, log-linearised k_dis.
  const double beta0 = -(1.0 - 1.0 / static_cast<double>(options.charset_size));
  double num = 0.0;
  double den = 0.0;
  for (const auto& p : data) {
    const double gap = (options.c - p.accuracy) / -beta0;
    const double u = p.n0 * std::exp(-options.alpha_p_init * p.t);
    if (gap > 0.0 && gap < 1.0 && u > 0.0) {
      num += -std::log(gap) * u;
      den += u * u;
    }
  }
  double k0 = den > 0.0 ? num / den : 0.0;
  if (!(k0 > 0.0)) {
    double mean_u = 0.0;
    for (double u : drives) mean_u += u;
    k0 = static_cast<double>(drives.size()) / std::max(mean_u, 1e-12);
  }

  Eigen::VectorXd x(f.inputs());
  {
    int i = 0;
    x[i++] = beta0;
    x[i++] = k0;
    if (f.fit_alpha_p) x[i++] = options.alpha_p_init;
    if (f.fit_c) x[i++] = options.c;
  }
  if (static_cast<int>(data.size()) < f.inputs()) {
    fail(ErrorKind::kInvalidInput, "fewer data points than free parameters");
  }

  Eigen::LevenbergMarquardt<AccuracyResiduals> lm(f);
  lm.parameters.maxfev = options.max_evaluations;
  lm.parameters.xtol = 1e-12;
  lm.parameters.ftol = 1e-12;
  const auto status = lm.minimize(x);
  using namespace Eigen::LevenbergMarquardtSpace;
  if (status == ImproperInputParameters || status == TooManyFunctionEvaluation ||
      status == UserAsked || !x.allFinite()) {
    fail(ErrorKind::kNonConvergence,
         "accuracy-model fit did not converge (status " + std::to_string(status) + ")");
  }

  AccuracyModelFit fit;
  f.unpack(x, fit.beta, fit.k_dis, fit.alpha_p, fit.c);
  fit.c_fixed = !options.free_c;
  fit.alpha_p_fixed = t_constant;
  fit.points = data.size();
  fit.evaluations = static_cast<int>(lm.nfev);
  if (!(fit.beta < 0.0) || !(fit.k_dis > 0.0)) {
    fail(ErrorKind::kNonConvergence,
         "accuracy-model fit left the admissible region (beta < 0, k_dis > 0)");
  }

  double mean = 0.0;
  for (const auto& p : data) mean += p.accuracy;
  mean /= static_cast<double>(data.size());
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (const auto& p : data) {
    const double r = p.accuracy - fit.predict(p.n0, p.t);
    ss_res += r * r;
    ss_tot += (p.accuracy - mean) * (p.accuracy - mean);
  }
  fit.residual_r2 = std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
  return fit;
}

// ---------------------------------------------------------------------------
// Export

namespace {
constexpr const char* kSweepHeader = "mean_n,trials,correct,accuracy,ci_low,ci_high";
}

void write_sweep_csv(const std::filesystem::path& path, std::span<const SweepRow> rows) {
  std::ofstream os(path);
  if (!os) fail(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  os.precision(17);
  os << kSweepHeader << '\n';
  for (const auto& r : rows) {
    os << r.mean_n << ',' << r.trials << ',' << r.correct << ',' << r.accuracy << ','
       << r.ci_low << ',' << r.ci_high << '\n';
  }
  if (!os) fail(ErrorKind::kIo, "failed writing " + path.string());
}

std::vector<SweepRow> read_sweep_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) fail(ErrorKind::kIo, "cannot open " + path.string());
  std::string line;
  if (!std::getline(is, line)) fail(ErrorKind::kValidation, path.string() + " is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kSweepHeader) {
    fail(ErrorKind::kValidation, path.string() + " does not have a sweep header");
  }
  std::vector<SweepRow> rows;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    SweepRow r;
    char c1, c2, c3, c4, c5;
    if (!(ls >> r.mean_n >> c1 >> r.trials >> c2 >> r.correct >> c3 >> r.accuracy >> c4 >>
          r.ci_low >> c5 >> r.ci_high) ||
        c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',' || c5 != ',') {
      fail(ErrorKind::kValidation,
           path.string() + ":" + std::to_string(lineno) + ": malformed sweep row");
    }
    rows.push_back(r);
  }
  return rows;
}

void write_repeated_read_csv(const std::filesystem::path& path,
                             std::span<const RepeatedReadRow> rows) {
  std::ofstream os(path);
  if (!os) fail(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  os.precision(17);
  os << "read_index,survivors,accuracy\n";
  for (const auto& r : rows) {
    os << r.read_index << ',' << r.survivors << ',' << r.accuracy << '\n';
  }
  if (!os) fail(ErrorKind::kIo, "failed writing " + path.string());
}

std::string fit_to_json(const AccuracyModelFit& fit) {
  nlohmann::ordered_json j;
  j["model"] = "beta*exp(-n0*exp(-alpha_p*t)*k_dis)+c";
  j["beta"] = fit.beta;
  j["k_dis"] = fit.k_dis;
  j["c"] = fit.c;
  j["alpha_p"] = fit.alpha_p;
  j["c_fixed"] = fit.c_fixed;
  j["alpha_p_fixed"] = fit.alpha_p_fixed;
  j["residual_r2"] = fit.residual_r2;
  j["points"] = fit.points;
  j["evaluations"] = fit.evaluations;
  return j.dump(2) + "\n";
}

}  // namespace smqc
