// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Run configuration: one TOML-style file with [section] headers and
// `key = value` lines (integers, floats, booleans, quoted strings and flat
// numeric arrays). Every field has a default, so an empty file is valid.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "smqc/recognizer.hpp"

namespace smqc {

struct RunConfig {
  // [canvas]
  Canvas canvas;
  FontSpec font;
  // [label]
  int molecule_count = 100;
  int qd_count = 1000;
  int radius_min = 3;
  int radius_max = 4;
  LayerStack layer_stack = LayerStack::kDisposable;
  std::string charset = "single";  // single | pairs | all
  // [emission]
  double molecule_peak_rate = 4.0e5;
  double qd_peak_rate = 1.2e6;
  SpotProfile spot_profile = SpotProfile::kUniformDisk;
  // [coherence]
  double pulse_area = 1.5707963267948966;
  double inter_pulse_delay = 100e-12;
  double mod_frequency = 1000.0;
  double molecule_noise_density = 1e9;  // single-axis dipole
  double qd_noise_density = 3.33e11;    // isotropic, three axes
  // [exposure]
  double duration = 0.1;
  double dark_rate = 10.0;
  // [bleach]
  double alpha = 2.2388;
  double power = 1.0;
  double qd_bleach_rate = 0.0;
  // [schedule]
  double read_interval = 0.45;
  int n_reads = 3;
  // [sweep]
  std::vector<int> mean_counts{10, 30, 60, 90, 120, 150};
  int trials = 500;
  double spectrum_min_hz = 500.0;
  double spectrum_max_hz = 1500.0;
  int spectrum_points = 101;
  // [seed]
  std::uint64_t label_seed = 1;
  std::uint64_t sweep_seed = 1;

  /// Throws Error(kDomain / kInvalidInput) naming the offending field.
  void validate() const;

  double molecule_visibility() const;
  double qd_visibility() const;
  SimulationSetup setup() const;
  std::vector<std::string> charset_entries() const;
};

RunConfig parse_config(std::string_view text, const std::string& source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// Overlays the keys present in `text` on `config`; validates the result and
/// leaves `config` untouched on error.
void apply_config(RunConfig& config, std::string_view text,
                  const std::string& source = "<config>");

/// Sets one `section.key` from a value literal in config syntax, e.g.
/// set_config_value(c, "label.qd_count", "0").
void set_config_value(RunConfig& config, const std::string& key, const std::string& value);

/// The default configuration as a commented file; parse_config of this text
/// yields RunConfig{}.
std::string default_config_text();

}  // namespace smqc
