// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Whole-label workflows shared by the C API and the command line: a read
// cycle that consumes the label, a non-destructive spectrum probe, and
// dataset export.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "smqc/config.hpp"

namespace smqc {

LabelState forge_label(const RunConfig& config, const std::string& text);

struct ReadOutputs {
  std::optional<std::filesystem::path> time_pgm;
  std::optional<std::filesystem::path> freq_pgm;
  std::optional<std::filesystem::path> raw_csv;      // frequency magnitudes
  std::optional<std::filesystem::path> photon_dump;  // binary columns
};

struct ReadReport {
  ReadSummary summary;
  double illumination_at_start = 0.0;  // s, after any between-read bleaching
  Classification frequency;
  Classification time;
  double contrast_frequency = 0.0;
  double contrast_time = 0.0;
};

/// One read cycle on a persistent label. When the label has been read
/// before, it first spends read_interval - duration seconds under
/// illumination; then one exposure is simulated, both images are decoded
/// and the requested files are written. `state` is updated in place.
ReadReport perform_read(const RunConfig& config, LabelState& state,
                        const ReadOutputs& outputs = {});

struct SpectrumReport {
  ModulationSpectrum molecule;
  ModulationSpectrum background;
  std::size_t molecule_photons = 0;
  std::size_t background_photons = 0;
  double molecule_peak_hz = 0.0;
  double background_peak_hz = 0.0;
};

/// Spectra of the photons on alive-molecule centre pixels and on background
/// pixels (interference centres outside every molecule spot, or every
/// uncovered pixel when the label has no interference). The label is not
/// modified.
SpectrumReport probe_spectrum(const RunConfig& config, const LabelState& state);

struct DatasetOptions {
  std::size_t count = 1000;
  bool include_time = false;
};

/// Writes images/freq_NNNNN.pgm (and images/time_NNNNN.pgm) plus
/// manifest.csv with columns filename,glyph_label,mean_n,seed. Mean counts
/// cycle through config.mean_counts; glyphs are drawn from the charset.
void export_dataset(const RunConfig& config, const DatasetOptions& options,
                    const std::filesystem::path& out_dir, const ProgressFn& progress = {});

}  // namespace smqc
