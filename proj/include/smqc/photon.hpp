// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Photon emission for one read of a label. Every emitter is an
// inhomogeneous Poisson process whose rate follows the excited-state
// population under the sawtooth phase sweep; it is sampled by thinning
// against the peak rate. Photons land uniformly on the emitter's spot.
#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "smqc/coherence.hpp"
#include "smqc/label.hpp"

namespace smqc {

enum class SpotProfile { kUniformDisk, kGaussian };

struct ExposureConfig {
  double duration = 0.1;                      // s
  double dark_rate = 10.0;                    // photons / s / pixel
  double pulse_area = std::numbers::pi / 2;  // rad, both pulses
  SpotProfile spot_profile = SpotProfile::kUniformDisk;

  void validate() const;
};

struct Photon {
  std::uint32_t pixel = 0;
  double time = 0.0;
};

/// Receives photons in per-pixel batches. Batches are not time-ordered.
class PhotonSink {
 public:
  virtual ~PhotonSink() = default;
  virtual void add(std::uint32_t pixel, std::span<const double> times) = 0;
};

/// Full record of a read: per-pixel arrival times, sorted once finalised.
class PhotonStream final : public PhotonSink {
 public:
  PhotonStream() = default;
  explicit PhotonStream(const Canvas& canvas);

  /// Restrict recording to pixels whose flag is non-zero.
  void set_pixel_filter(std::vector<std::uint8_t> keep);

  void add(std::uint32_t pixel, std::span<const double> times) override;
  void finalize();

  const Canvas& canvas() const { return canvas_; }
  std::span<const double> pixel(std::uint32_t index) const {
    return times_[index];
  }
  std::size_t pixel_count() const { return times_.size(); }
  std::size_t count(std::uint32_t index) const { return times_[index].size(); }
  std::size_t total() const;
  /// All photons as (pixel, time), pixel-major.
  std::vector<Photon> flatten() const;

 private:
  Canvas canvas_;
  std::vector<std::vector<double>> times_;
  std::vector<std::uint8_t> keep_;
};

/// Streaming per-pixel photon counts and phasor sums at one angular
/// frequency. Produces the same images as rendering a full PhotonStream
/// without holding the arrival times.
class ImageAccumulator final : public PhotonSink {
 public:
  ImageAccumulator(const Canvas& canvas, double omega);

  void add(std::uint32_t pixel, std::span<const double> times) override;

  const Canvas& canvas() const { return canvas_; }
  double omega() const { return omega_; }
  std::span<const std::uint32_t> counts() const { return counts_; }
  std::complex<double> phasor(std::uint32_t index) const {
    return {re_[index], im_[index]};
  }
  std::vector<double> magnitudes() const;
  std::size_t total() const;

 private:
  Canvas canvas_;
  double omega_;
  double cycles_per_second_;
  std::vector<std::uint32_t> counts_;
  std::vector<double> re_;
  std::vector<double> im_;
};

/// Appends everything to two columns for the binary photon dump.
class PhotonRecorder final : public PhotonSink {
 public:
  void add(std::uint32_t pixel, std::span<const double> times) override;
  std::vector<std::uint32_t> pixels;
  std::vector<double> times;
};

/// Forwards every batch to several sinks.
class SinkFanout final : public PhotonSink {
 public:
  explicit SinkFanout(std::vector<PhotonSink*> sinks) : sinks_(std::move(sinks)) {}
  void add(std::uint32_t pixel, std::span<const double> times) override {
    for (auto* s : sinks_) s->add(pixel, times);
  }

 private:
  std::vector<PhotonSink*> sinks_;
};

struct EmitterOutcome {
  double bleach_time = std::numeric_limits<double>::infinity();
  bool bleached = false;
  std::size_t photons = 0;
};

/// Emission rate at time t: peak_rate * excited_population(theta, dphi(t), V).
double emission_rate(const Emitter& emitter, double t,
                     const coherence::PulsePairDrive& drive,
                     const ExposureConfig& exposure);

/// Samples one emitter for one exposure. `bleach_rate` is the emitter's
/// photobleaching rate; a bleach time inside the exposure truncates the
/// stream there.
EmitterOutcome simulate_emitter_stream(const Emitter& emitter,
                                       const Canvas& canvas,
                                       const coherence::PulsePairDrive& drive,
                                       const ExposureConfig& exposure,
                                       double bleach_rate, Rng& rng,
                                       PhotonSink& sink);

/// Homogeneous Poisson background on every pixel. Returns the photon count.
std::size_t dark_counts(const Canvas& canvas, double dark_rate, double duration,
                        Rng& rng, PhotonSink& sink);

struct ReadSummary {
  int read_index = 0;  // 1-based
  std::size_t molecules_at_start = 0;
  std::size_t molecules_after = 0;
  std::size_t signal_photons = 0;
  std::size_t interference_photons = 0;
  std::size_t dark_photons = 0;
};

/// One read: all alive emitters plus dark counts go to `sink`. Bleach times
/// inside the exposure kill emitters; read_count and illumination_time
/// advance. Randomness derives from (rng_seed, read_count) so a read is
/// reproducible from the label file alone.
ReadSummary simulate_read(LabelState& state,
                          const coherence::PulsePairDrive& drive,
                          const ExposureConfig& exposure, PhotonSink& sink);

/// Convenience overload recording a full, sorted PhotonStream.
PhotonStream simulate_read(LabelState& state,
                           const coherence::PulsePairDrive& drive,
                           const ExposureConfig& exposure,
                           ReadSummary* summary = nullptr);

/// Binary columnar dump: "SMQCPHT1", u64 count, count x u32 pixel index,
/// count x f64 time; all little-endian.
void write_photon_dump(const std::filesystem::path& path,
                       std::span<const std::uint32_t> pixels,
                       std::span<const double> times);
PhotonRecorder read_photon_dump(const std::filesystem::path& path);

}  // namespace smqc
