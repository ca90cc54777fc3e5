// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#include "smqc/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "smqc/error.hpp"
#include "smqc/phasor.hpp"

namespace smqc {

std::vector<std::uint8_t> normalize_to_u8(std::span<const double> raw) {
  std::vector<std::uint8_t> out(raw.size(), 0);
  double peak = 0.0;
  for (double v : raw) peak = std::max(peak, v);
  if (!(peak > 0.0)) return out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    // ratio first: exact under integer rescaling of integer counts
    const double v = std::max(0.0, raw[i]) / peak * 255.0;
    out[i] = static_cast<std::uint8_t>(std::min(255.0, std::floor(v + 0.5)));
  }
  return out;
}

std::complex<double> phasor_sum(std::span<const double> times, double omega) {
  double re = 0.0;
  double im = 0.0;
  dsp::accumulate_phasors(times, omega / (2.0 * std::numbers::pi), re, im);
  return {re, im};
}

double dft_magnitude(std::span<const double> times, double omega) {
  return std::abs(phasor_sum(times, omega));
}

std::vector<double> linear_grid(double lo_hz, double hi_hz, int points) {
  if (points < 1) fail(ErrorKind::kInvalidInput, "grid needs at least one point");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        points == 1 ? lo_hz : lo_hz + (hi_hz - lo_hz) * i / (points - 1);
  }
  return grid;
}

ModulationSpectrum modulation_spectrum(std::span<const double> times,
                                       std::span<const double> freq_grid_hz) {
  if (freq_grid_hz.empty()) fail(ErrorKind::kInvalidInput, "empty frequency grid");
  ModulationSpectrum s;
  s.frequency_hz.assign(freq_grid_hz.begin(), freq_grid_hz.end());
  double peak = 0.0;
  for (double f : freq_grid_hz) {
    s.magnitude.push_back(dft_magnitude(times, 2.0 * std::numbers::pi * f));
    peak = std::max(peak, s.magnitude.back());
  }
  for (double m : s.magnitude) s.normalized.push_back(peak > 0.0 ? m / peak : 0.0);
  return s;
}

TimeDomainImage render_time_image(const PhotonStream& stream) {
  TimeDomainImage img;
  img.canvas = stream.canvas();
  img.raw.resize(stream.pixel_count());
  for (std::uint32_t p = 0; p < img.raw.size(); ++p) {
    img.raw[p] = static_cast<double>(stream.count(p));
  }
  img.values = normalize_to_u8(img.raw);
  return img;
}

FrequencyDomainImage render_freq_image(const PhotonStream& stream, double omega) {
  if (!(omega > 0.0)) fail(ErrorKind::kDomain, "omega must be positive");
  FrequencyDomainImage img;
  img.canvas = stream.canvas();
  img.omega = omega;
  img.raw.resize(stream.pixel_count());
  for (std::uint32_t p = 0; p < img.raw.size(); ++p) {
    img.raw[p] = dft_magnitude(stream.pixel(p), omega);
  }
  img.values = normalize_to_u8(img.raw);
  return img;
}

TimeDomainImage time_image(const ImageAccumulator& acc) {
  TimeDomainImage img;
  img.canvas = acc.canvas();
  img.raw.assign(acc.counts().begin(), acc.counts().end());
  img.values = normalize_to_u8(img.raw);
  return img;
}

FrequencyDomainImage freq_image(const ImageAccumulator& acc) {
  FrequencyDomainImage img;
  img.canvas = acc.canvas();
  img.omega = acc.omega();
  img.raw = acc.magnitudes();
  img.values = normalize_to_u8(img.raw);
  return img;
}

VisibilityEstimate estimate_visibility(double magnitude, double photon_count,
                                       double modulation_periods) {
  if (!(photon_count > 0.0)) {
    fail(ErrorKind::kInvalidInput, "visibility estimate needs at least one photon");
  }
  if (!(modulation_periods >= 10.0)) {
    fail(ErrorKind::kInvalidInput,
         "exposure must span at least 10 modulation periods");
  }
  VisibilityEstimate est;
  const double v = 2.0 * magnitude / photon_count;
  est.value = std::clamp(v, 0.0, 1.0);
  est.clamped = est.value != v;
  return est;
}

double contrast_ratio(std::span<const double> raw, const GlyphMask& mask) {
  const auto bits = mask.bits();
  if (raw.size() != bits.size()) {
    fail(ErrorKind::kInvalidInput, "image and mask sizes differ");
  }
  const std::size_t on_count = mask.area();
  if (on_count == 0 || on_count == bits.size()) {
    fail(ErrorKind::kInvalidInput, "mask must be a non-empty proper subset");
  }
  double on = 0.0;
  double off = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) (bits[i] ? on : off) += raw[i];
  const double on_mean = on / static_cast<double>(on_count);
  const double off_mean = off / static_cast<double>(bits.size() - on_count);
  if (off_mean == 0.0) return std::numeric_limits<double>::infinity();
  return on_mean / off_mean;
}

void write_pgm(const std::filesystem::path& path, const Canvas& canvas,
               std::span<const std::uint8_t> values) {
  if (values.size() != canvas.pixel_count()) {
    fail(ErrorKind::kInvalidInput, "pixel buffer does not match canvas");
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  os << "P5\n" << canvas.width << ' ' << canvas.height << "\n255\n";
  os.write(reinterpret_cast<const char*>(values.data()),
           static_cast<std::streamsize>(values.size()));
  if (!os) fail(ErrorKind::kIo, "failed writing " + path.string());
}

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(ErrorKind::kIo, "cannot open " + path.string());
  std::string magic;
  int maxval = 0;
  GrayImage img;
  is >> magic >> img.width >> img.height >> maxval;
  if (magic != "P5" || img.width <= 0 || img.height <= 0 || maxval != 255) {
    fail(ErrorKind::kValidation, path.string() + " is not an 8-bit P5 graymap");
  }
  is.get();  // single whitespace byte after the header
  img.values.resize(static_cast<std::size_t>(img.width) *
                    static_cast<std::size_t>(img.height));
  if (!is.read(reinterpret_cast<char*>(img.values.data()),
               static_cast<std::streamsize>(img.values.size()))) {
    fail(ErrorKind::kValidation, path.string() + " has a truncated raster");
  }
  return img;
}

void write_raw_csv(const std::filesystem::path& path, const Canvas& canvas,
                   std::span<const double> raw) {
  std::ofstream os(path);
  if (!os) fail(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  os.precision(17);
  os << "x,y,value\n";
  for (int y = 0; y < canvas.height; ++y) {
    for (int x = 0; x < canvas.width; ++x) {
      os << x << ',' << y << ',' << raw[canvas.index(x, y)] << '\n';
    }
  }
  if (!os) fail(ErrorKind::kIo, "failed writing " + path.string());
}

void write_spectrum_csv(const std::filesystem::path& path,
                        const ModulationSpectrum& spectrum) {
  std::ofstream os(path);
  if (!os) fail(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  os.precision(17);
  os << "frequency_hz,magnitude,normalized\n";
  for (std::size_t i = 0; i < spectrum.frequency_hz.size(); ++i) {
    os << spectrum.frequency_hz[i] << ',' << spectrum.magnitude[i] << ','
       << spectrum.normalized[i] << '\n';
  }
  if (!os) fail(ErrorKind::kIo, "failed writing " + path.string());
}

}  // namespace smqc
