// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#include "smqc/photon.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>

#include "smqc/error.hpp"
#include "smqc/phasor.hpp"

namespace smqc {
namespace {

struct SpotTap {
  int dx;
  int dy;
  double weight;  // fraction of the emitter's photons on this pixel
};

std::vector<SpotTap> make_spot(int radius, SpotProfile profile) {
  std::vector<SpotTap> taps;
  if (profile == SpotProfile::kUniformDisk) {
    for (int dy = -radius; dy <= radius; ++dy) {
      for (int dx = -radius; dx <= radius; ++dx) {
        if (dx * dx + dy * dy <= radius * radius) taps.push_back({dx, dy, 1.0});
      }
    }
  } else {
    // Gaussian with sigma = radius / 2, truncated at twice the radius.
    const double sigma = std::max(0.5, 0.5 * radius);
    const int reach = std::max(1, 2 * radius);
    for (int dy = -reach; dy <= reach; ++dy) {
      for (int dx = -reach; dx <= reach; ++dx) {
        if (dx * dx + dy * dy > reach * reach) continue;
        taps.push_back({dx, dy, std::exp(-(dx * dx + dy * dy) / (2 * sigma * sigma))});
      }
    }
  }
  double sum = 0.0;
  for (const auto& t : taps) sum += t.weight;
  for (auto& t : taps) t.weight /= sum;
  return taps;
}

const std::vector<SpotTap>& spot_for(int radius, SpotProfile profile) {
  // Only used from the simulating thread; radii are few.
  thread_local std::map<std::pair<int, int>, std::vector<SpotTap>> cache;
  auto key = std::make_pair(radius, static_cast<int>(profile));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_spot(radius, profile)).first;
  return it->second;
}

double bleach_rate_for(const LabelState& state, const Emitter& e) {
  if (!e.bleach_susceptible) return 0.0;
  return e.kind == EmitterKind::kCoherentMolecule ? state.bleach_model.k_bleach()
                                                  : state.bleach_model.qd_rate;
}

template <typename T>
void put_le(std::ostream& os, T value) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  const U bits = std::bit_cast<U>(value);
  char buf[sizeof(U)];
  for (std::size_t i = 0; i < sizeof(U); ++i) {
    buf[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
  }
  os.write(buf, sizeof(U));
}

template <typename T>
T get_le(std::istream& is) {
  using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
  unsigned char buf[sizeof(U)];
  if (!is.read(reinterpret_cast<char*>(buf), sizeof(U))) {
    fail(ErrorKind::kValidation, "truncated photon dump");
  }
  U bits = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) bits |= static_cast<U>(buf[i]) << (8 * i);
  return std::bit_cast<T>(bits);
}

constexpr char kDumpMagic[8] = {'S', 'M', 'Q', 'C', 'P', 'H', 'T', '1'};

}  // namespace

void ExposureConfig::validate() const {
  if (!(duration > 0.0)) fail(ErrorKind::kDomain, "exposure duration must be positive");
  if (!(dark_rate >= 0.0)) fail(ErrorKind::kDomain, "dark rate must be non-negative");
  if (!(pulse_area >= 0.0 && pulse_area <= std::numbers::pi)) {
    fail(ErrorKind::kDomain, "pulse area must lie in [0, pi]");
  }
}

// ---------------------------------------------------------------------------
// Sinks

PhotonStream::PhotonStream(const Canvas& canvas)
    : canvas_(canvas), times_(canvas.pixel_count()) {}

void PhotonStream::set_pixel_filter(std::vector<std::uint8_t> keep) {
  if (keep.size() != times_.size()) {
    fail(ErrorKind::kInvalidInput, "pixel filter size does not match canvas");
  }
  keep_ = std::move(keep);
}

void PhotonStream::add(std::uint32_t pixel, std::span<const double> times) {
  if (!keep_.empty() && keep_[pixel] == 0) return;
  auto& dst = times_[pixel];
  dst.insert(dst.end(), times.begin(), times.end());
}

void PhotonStream::finalize() {
  for (auto& v : times_) std::sort(v.begin(), v.end());
}

std::size_t PhotonStream::total() const {
  std::size_t n = 0;
  for (const auto& v : times_) n += v.size();
  return n;
}

std::vector<Photon> PhotonStream::flatten() const {
  std::vector<Photon> out;
  out.reserve(total());
  for (std::uint32_t p = 0; p < times_.size(); ++p) {
    for (double t : times_[p]) out.push_back({p, t});
  }
  return out;
}

ImageAccumulator::ImageAccumulator(const Canvas& canvas, double omega)
    : canvas_(canvas),
      omega_(omega),
      cycles_per_second_(omega / (2.0 * std::numbers::pi)),
      counts_(canvas.pixel_count(), 0),
      re_(canvas.pixel_count(), 0.0),
      im_(canvas.pixel_count(), 0.0) {}

void ImageAccumulator::add(std::uint32_t pixel, std::span<const double> times) {
  counts_[pixel] += static_cast<std::uint32_t>(times.size());
  dsp::accumulate_phasors(times, cycles_per_second_, re_[pixel], im_[pixel]);
}

std::vector<double> ImageAccumulator::magnitudes() const {
  std::vector<double> out(counts_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::hypot(re_[i], im_[i]);
  return out;
}

std::size_t ImageAccumulator::total() const {
  std::size_t n = 0;
  for (auto c : counts_) n += c;
  return n;
}

void PhotonRecorder::add(std::uint32_t pixel, std::span<const double> t) {
  pixels.insert(pixels.end(), t.size(), pixel);
  times.insert(times.end(), t.begin(), t.end());
}

// ---------------------------------------------------------------------------
// Emission

double emission_rate(const Emitter& emitter, double t,
                     const coherence::PulsePairDrive& drive,
                     const ExposureConfig& exposure) {
  return emitter.peak_rate *
         coherence::excited_population(exposure.pulse_area,
                                       coherence::relative_phase(t, drive),
                                       emitter.visibility);
}

EmitterOutcome simulate_emitter_stream(const Emitter& emitter,
                                       const Canvas& canvas,
                                       const coherence::PulsePairDrive& drive,
                                       const ExposureConfig& exposure,
                                       double bleach_rate, Rng& rng,
                                       PhotonSink& sink) {
  EmitterOutcome out;
  if (!emitter.alive) return out;

  if (bleach_rate > 0.0) {
    out.bleach_time = -std::log1p(-uniform01(rng)) / bleach_rate;
  }
  const double end = std::min(out.bleach_time, exposure.duration);
  out.bleached = out.bleach_time <= exposure.duration;

  const double v = emitter.visibility;
  const double rate_max =
      emitter.peak_rate * coherence::peak_population(exposure.pulse_area, v);
  if (!(rate_max > 0.0) || end <= 0.0) return out;

  // Thinning: a candidate at t survives with probability
  // rate(t) / rate_max = (1 + V cos dphi(t)) / (1 + V). With
  // dphi = -pi + 2 pi frac(t f), cos dphi = -Re e^{-2 pi i t f}.
  const bool thin = (1.0 - v) / (1.0 + v) < 1.0;
  const double f_mod = drive.mod_frequency;
  const auto& table = dsp::detail::root_table();

  const auto& spot = spot_for(emitter.spot_radius, exposure.spot_profile);
  PhotonRng fast(rng);
  std::vector<double> batch;
  for (const auto& tap : spot) {
    const int x = emitter.x + tap.dx;
    const int y = emitter.y + tap.dy;
    if (!canvas.contains(x, y)) continue;  // light falling off the sensor
    const double mean = rate_max * end * tap.weight;
    std::poisson_distribution<long> candidates(mean);
    const long n = candidates(rng);
    batch.clear();
    for (long i = 0; i < n; ++i) {
      const double t = end * fast.uniform01();
      if (thin) {
        const double cos_dphi = -dsp::unit_phasor(t * f_mod, table).real();
        if (fast.uniform01() * (1.0 + v) >= 1.0 + v * cos_dphi) continue;
      }
      batch.push_back(t);
    }
    if (!batch.empty()) {
      sink.add(canvas.index(x, y), batch);
      out.photons += batch.size();
    }
  }
  return out;
}

std::size_t dark_counts(const Canvas& canvas, double dark_rate, double duration,
                        Rng& rng, PhotonSink& sink) {
  if (!(dark_rate >= 0.0)) fail(ErrorKind::kDomain, "dark rate must be non-negative");
  if (dark_rate == 0.0 || duration <= 0.0) return 0;
  // A Poisson total scattered uniformly is the same process as independent
  // per-pixel Poisson counts.
  std::poisson_distribution<long> total_dist(dark_rate * duration *
                                             static_cast<double>(canvas.pixel_count()));
  const long total = total_dist(rng);
  std::uniform_int_distribution<std::uint32_t> pick(
      0, static_cast<std::uint32_t>(canvas.pixel_count() - 1));
  for (long i = 0; i < total; ++i) {
    const std::uint32_t p = pick(rng);
    const double t = duration * uniform01(rng);
    sink.add(p, std::span<const double>(&t, 1));
  }
  return static_cast<std::size_t>(total);
}

ReadSummary simulate_read(LabelState& state,
                          const coherence::PulsePairDrive& drive,
                          const ExposureConfig& exposure, PhotonSink& sink) {
  exposure.validate();
  drive.validate();
  ReadSummary summary;
  summary.read_index = state.read_count + 1;
  summary.molecules_at_start = state.alive_molecules();

  const auto read_seed =
      derive_seed(state.rng_seed, stream::kEmitter,
                  static_cast<std::uint64_t>(state.read_count));
  for (std::size_t i = 0; i < state.emitters.size(); ++i) {
    Emitter& e = state.emitters[i];
    if (!e.alive) continue;
    Rng rng(derive_seed(read_seed, i));
    const auto outcome = simulate_emitter_stream(
        e, state.canvas, drive, exposure, bleach_rate_for(state, e), rng, sink);
    if (e.kind == EmitterKind::kCoherentMolecule) {
      summary.signal_photons += outcome.photons;
    } else {
      summary.interference_photons += outcome.photons;
    }
    if (outcome.bleached) e.alive = false;
  }

  Rng dark_rng(derive_seed(state.rng_seed, stream::kDark,
                           static_cast<std::uint64_t>(state.read_count)));
  summary.dark_photons =
      dark_counts(state.canvas, exposure.dark_rate, exposure.duration, dark_rng, sink);

  state.read_count += 1;
  state.illumination_time += exposure.duration;
  summary.molecules_after = state.alive_molecules();
  return summary;
}

PhotonStream simulate_read(LabelState& state,
                           const coherence::PulsePairDrive& drive,
                           const ExposureConfig& exposure, ReadSummary* summary) {
  PhotonStream stream(state.canvas);
  const auto s = simulate_read(state, drive, exposure, stream);
  stream.finalize();
  if (summary != nullptr) *summary = s;
  return stream;
}

void write_photon_dump(const std::filesystem::path& path,
                       std::span<const std::uint32_t> pixels,
                       std::span<const double> times) {
  if (pixels.size() != times.size()) {
    fail(ErrorKind::kInvalidInput, "photon dump columns differ in length");
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  os.write(kDumpMagic, sizeof(kDumpMagic));
  put_le<std::uint64_t>(os, pixels.size());
  for (auto p : pixels) put_le<std::uint32_t>(os, p);
  for (auto t : times) put_le<double>(os, t);
  if (!os) fail(ErrorKind::kIo, "failed writing " + path.string());
}

PhotonRecorder read_photon_dump(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(ErrorKind::kIo, "cannot open " + path.string());
  char magic[8];
  if (!is.read(magic, 8) || std::memcmp(magic, kDumpMagic, 8) != 0) {
    fail(ErrorKind::kValidation, path.string() + " is not a photon dump");
  }
  const auto n = get_le<std::uint64_t>(is);
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  if (ec || n > (size - 16) / 12 || size != 16 + 12 * n) {
    fail(ErrorKind::kValidation, path.string() + " has an inconsistent length");
  }
  PhotonRecorder rec;
  rec.pixels.reserve(n);
  rec.times.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) rec.pixels.push_back(get_le<std::uint32_t>(is));
  for (std::uint64_t i = 0; i < n; ++i) rec.times.push_back(get_le<double>(is));
  return rec;
}

}  // namespace smqc
