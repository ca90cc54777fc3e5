// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic glyph decoder (3x3 median, Otsu threshold, binary normalized
// cross-correlation against font templates), accuracy sweeps over molecule
// count and repeated reads, and the accuracy-model fit.
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "smqc/coherence.hpp"
#include "smqc/glyph.hpp"
#include "smqc/imaging.hpp"
#include "smqc/label.hpp"
#include "smqc/photon.hpp"

namespace smqc {

/// The 36 single characters, digits first.
std::vector<std::string> single_charset();
/// The 676 two-letter A-Z combinations.
std::vector<std::string> pair_charset();

struct Template {
  std::string label;
  std::vector<std::uint32_t> pixels;  // sorted foreground indices
};

class TemplateSet {
 public:
  TemplateSet() = default;
  TemplateSet(Canvas canvas, std::vector<Template> templates);

  const Canvas& canvas() const { return canvas_; }
  std::size_t size() const { return templates_.size(); }
  const std::vector<Template>& templates() const { return templates_; }
  const Template* find(const std::string& label) const;
  std::vector<std::string> labels() const;

 private:
  Canvas canvas_;
  std::vector<Template> templates_;  // sorted by label
};

/// One template per charset entry: the rasterized glyph reduced to its 3x3
/// median root, so a template rendered as an image classifies to itself
/// with score 1. Throws on duplicates and unsupported entries.
TemplateSet build_templates(std::span<const std::string> charset,
                            const Canvas& canvas, const FontSpec& font = {});

/// Template mask rendered as a 0/255 image.
std::vector<std::uint8_t> template_image(const TemplateSet& set,
                                         const std::string& label);

struct Classification {
  bool no_signal = false;
  std::string label;  // empty when no_signal
  double score = 0.0;
  std::string runner_up;
  double runner_up_score = 0.0;
  int threshold = 0;  // Otsu level on the filtered image
};

/// 3x3 median with replicated borders.
std::vector<std::uint8_t> median3x3(std::span<const std::uint8_t> values,
                                    int width, int height);

/// Otsu level t on a 256-bin histogram; foreground is value > t. Returns
/// nullopt when the image has a single grey level.
std::optional<int> otsu_threshold(std::span<const std::uint8_t> values);

Classification classify(std::span<const std::uint8_t> values,
                        const TemplateSet& templates);
Classification classify(const FrequencyDomainImage& image,
                        const TemplateSet& templates);
Classification classify(const TimeDomainImage& image,
                        const TemplateSet& templates);

/// Physics and imaging settings shared by every simulated trial.
struct SimulationSetup {
  LabelConfig label;
  coherence::PulsePairDrive drive;
  ExposureConfig exposure;

  double omega() const;
  void validate() const;
};

struct TrialOutcome {
  std::string truth;
  std::size_t molecules_at_start = 0;
  Classification time;
  Classification frequency;
};

/// Builds `text` with `molecules` signal molecules, performs one read and
/// decodes both images.
TrialOutcome run_trial(const std::string& text, int molecules,
                       const SimulationSetup& setup, std::uint64_t seed,
                       const TemplateSet& templates);

struct ProportionCi {
  double low = 0.0;
  double high = 0.0;
};
/// Wilson score interval at 95 %.
ProportionCi wilson_interval(std::size_t successes, std::size_t trials);

struct SweepRow {
  int mean_n = 0;
  std::size_t trials = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

struct SweepOptions {
  std::vector<int> mean_counts{10, 30, 60, 90, 120, 150};
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  std::vector<std::string> charset = single_charset();
  bool decode_time_image = false;  // also score the time image
};

struct SweepResult {
  std::vector<SweepRow> frequency;
  std::vector<SweepRow> time;  // filled when decode_time_image is set
};

/// For every mean count, `trials` labels with glyphs drawn uniformly from the
/// charset, one read each. Tables depend only on the seed.
SweepResult accuracy_sweep(const SweepOptions& options,
                           const SimulationSetup& setup,
                           const ProgressFn& progress = {});

struct RepeatedReadOptions {
  int n_reads = 3;
  std::size_t trials = 100;
  double read_interval = 0.45;  // s of illumination from one read start to the next
  std::uint64_t seed = 1;
  std::vector<std::string> charset = single_charset();
};

struct RepeatedReadRow {
  int read_index = 0;  // 1-based
  double survivors = 0.0;  // mean alive molecules at read start
  std::size_t min_survivors = 0;
  std::size_t max_survivors = 0;
  std::size_t trials = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
};

/// Reads one persistent label `n_reads` times per trial. Between reads the
/// label stays illuminated for read_interval - duration seconds.
std::vector<RepeatedReadRow> repeated_read_trial(const RepeatedReadOptions& options,
                                                 const SimulationSetup& setup,
                                                 const ProgressFn& progress = {});

struct AccuracyPoint {
  double n0 = 0.0;
  double t = 0.0;
  double accuracy = 0.0;
};

struct FitOptions {
  bool free_c = false;
  double c = 1.0;
  double alpha_p_init = 2.2388;
  std::size_t charset_size = 36;
  int max_evaluations = 2000;
};

struct AccuracyModelFit {
  double beta = 0.0;
  double k_dis = 0.0;
  double c = 1.0;
  double alpha_p = 0.0;
  bool c_fixed = true;
  bool alpha_p_fixed = false;  // all t equal: alpha_p is not identifiable
  double residual_r2 = 0.0;
  std::size_t points = 0;
  int evaluations = 0;

  double predict(double n0, double t) const;
};

/// Acc = beta * exp(-n0 * exp(-alpha_p t) * k_dis) + c by Levenberg-Marquardt.
/// Throws kInvalidInput on degenerate data, kNonConvergence otherwise.
AccuracyModelFit fit_accuracy_model(std::span<const AccuracyPoint> data,
                                    const FitOptions& options = {});

void write_sweep_csv(const std::filesystem::path& path,
                     std::span<const SweepRow> rows);
std::vector<SweepRow> read_sweep_csv(const std::filesystem::path& path);
void write_repeated_read_csv(const std::filesystem::path& path,
                             std::span<const RepeatedReadRow> rows);
std::string fit_to_json(const AccuracyModelFit& fit);

}  // namespace smqc
