// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Frequency-domain readout: the modulation factor f(w) = |sum_n e^{-i w t_n}|
// per pixel, time-domain (photon count) images, spectra and contrast.
#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "smqc/glyph.hpp"
#include "smqc/photon.hpp"

namespace smqc {

/// Linear max-scaling to 0..255 (round half up); all-zero input stays zero.
std::vector<std::uint8_t> normalize_to_u8(std::span<const double> raw);

struct TimeDomainImage {
  Canvas canvas;
  std::vector<double> raw;  // photon counts
  std::vector<std::uint8_t> values;
};

struct FrequencyDomainImage {
  Canvas canvas;
  double omega = 0.0;
  std::vector<double> raw;  // modulation factor per pixel
  std::vector<std::uint8_t> values;
};

struct ModulationSpectrum {
  std::vector<double> frequency_hz;
  std::vector<double> magnitude;
  std::vector<double> normalized;  // magnitude / max(magnitude)
};

struct VisibilityEstimate {
  double value = 0.0;
  bool clamped = false;
};

/// Complex phasor sum sum_n e^{-i omega t_n}.
std::complex<double> phasor_sum(std::span<const double> times, double omega);

/// f(omega) = |phasor_sum|; 0 <= f <= times.size().
double dft_magnitude(std::span<const double> times, double omega);

/// Frequency grid of `points` evenly spaced values in [lo_hz, hi_hz].
std::vector<double> linear_grid(double lo_hz, double hi_hz, int points);

ModulationSpectrum modulation_spectrum(std::span<const double> times,
                                       std::span<const double> freq_grid_hz);

TimeDomainImage render_time_image(const PhotonStream& stream);
FrequencyDomainImage render_freq_image(const PhotonStream& stream, double omega);
TimeDomainImage time_image(const ImageAccumulator& acc);
FrequencyDomainImage freq_image(const ImageAccumulator& acc);

/// V = 2 f / N, clamped to [0, 1]. `modulation_periods` is the exposure
/// length in modulation periods; fewer than 10 is rejected because the
/// relation only holds when the sweep averages over many periods.
VisibilityEstimate estimate_visibility(double magnitude, double photon_count,
                                       double modulation_periods);

/// mean(raw on mask) / mean(raw off mask); +inf when the off-mask mean is 0.
double contrast_ratio(std::span<const double> raw, const GlyphMask& mask);

/// Binary P5 graymap.
void write_pgm(const std::filesystem::path& path, const Canvas& canvas,
               std::span<const std::uint8_t> values);
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> values;
};
GrayImage read_pgm(const std::filesystem::path& path);

/// CSV with header "x,y,value".
void write_raw_csv(const std::filesystem::path& path, const Canvas& canvas,
                   std::span<const double> raw);
/// CSV with header "frequency_hz,magnitude,normalized".
void write_spectrum_csv(const std::filesystem::path& path,
                        const ModulationSpectrum& spectrum);

}  // namespace smqc
