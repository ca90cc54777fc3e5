// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#include "smqc/operations.hpp"

#include <cstdio>
#include <fstream>

#include "smqc/error.hpp"
#include "smqc/random.hpp"

namespace smqc {
namespace {

constexpr std::uint64_t kDatasetStream = 0x44415441ULL;

std::vector<std::uint8_t> spot_cover(const LabelState& state, EmitterKind kind) {
  std::vector<std::uint8_t> cover(state.canvas.pixel_count(), 0);
  for (const auto& e : state.emitters) {
    if (e.kind != kind) continue;
    const int r = e.spot_radius;
    for (int dy = -r; dy <= r; ++dy) {
      for (int dx = -r; dx <= r; ++dx) {
        if (dx * dx + dy * dy > r * r) continue;
        if (state.canvas.contains(e.x + dx, e.y + dy)) {
          cover[state.canvas.index(e.x + dx, e.y + dy)] = 1;
        }
      }
    }
  }
  return cover;
}

double peak_frequency(const ModulationSpectrum& s) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.magnitude.size(); ++i) {
    if (s.magnitude[i] > s.magnitude[best]) best = i;
  }
  return s.frequency_hz.empty() ? 0.0 : s.frequency_hz[best];
}

std::vector<double> gather_times(const PhotonStream& stream,
                                 std::span<const std::uint8_t> pick) {
  std::vector<double> out;
  for (std::uint32_t p = 0; p < pick.size(); ++p) {
    if (!pick[p]) continue;
    const auto t = stream.pixel(p);
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

}  // namespace

LabelState forge_label(const RunConfig& config, const std::string& text) {
  config.validate();
  return build_label(text, config.setup().label, config.label_seed);
}

ReadReport perform_read(const RunConfig& config, LabelState& state,
                        const ReadOutputs& outputs) {
  config.validate();
  const SimulationSetup setup = config.setup();
  LabelState next = state;
  if (next.read_count > 0) {
    bleach_between_reads(next, config.read_interval - config.duration);
  }

  ReadReport report;
  report.illumination_at_start = next.illumination_time;
  ImageAccumulator acc(next.canvas, setup.omega());
  PhotonRecorder recorder;
  SinkFanout both({&acc, &recorder});
  PhotonSink& sink = outputs.photon_dump ? static_cast<PhotonSink&>(both) : acc;
  report.summary = simulate_read(next, setup.drive, setup.exposure, sink);

  const auto charset = config.charset_entries();
  const auto templates = build_templates(charset, next.canvas, next.font);
  const auto freq = freq_image(acc);
  const auto time = time_image(acc);
  report.frequency = classify(freq, templates);
  report.time = classify(time, templates);
  const auto mask = rasterize_glyph(next.glyph_text, next.canvas, next.font);
  report.contrast_frequency = contrast_ratio(freq.raw, mask);
  report.contrast_time = contrast_ratio(time.raw, mask);

  if (outputs.time_pgm) write_pgm(*outputs.time_pgm, time.canvas, time.values);
  if (outputs.freq_pgm) write_pgm(*outputs.freq_pgm, freq.canvas, freq.values);
  if (outputs.raw_csv) write_raw_csv(*outputs.raw_csv, freq.canvas, freq.raw);
  if (outputs.photon_dump) {
    write_photon_dump(*outputs.photon_dump, recorder.pixels, recorder.times);
  }
  state = std::move(next);
  return report;
}

SpectrumReport probe_spectrum(const RunConfig& config, const LabelState& state) {
  config.validate();
  const SimulationSetup setup = config.setup();
  const auto grid =
      linear_grid(config.spectrum_min_hz, config.spectrum_max_hz, config.spectrum_points);

  std::vector<std::uint8_t> molecule(state.canvas.pixel_count(), 0);
  for (const auto& e : state.emitters) {
    if (e.kind == EmitterKind::kCoherentMolecule && e.alive) {
      molecule[state.canvas.index(e.x, e.y)] = 1;
    }
  }
  const auto molecule_cover = spot_cover(state, EmitterKind::kCoherentMolecule);
  std::vector<std::uint8_t> background(state.canvas.pixel_count(), 0);
  bool any_interference = false;
  for (const auto& e : state.emitters) {
    if (e.kind != EmitterKind::kIncoherentQd || !e.alive) continue;
    const auto p = state.canvas.index(e.x, e.y);
    if (!molecule_cover[p]) {
      background[p] = 1;
      any_interference = true;
    }
  }
  if (!any_interference) {
    const auto qd_cover = spot_cover(state, EmitterKind::kIncoherentQd);
    for (std::size_t p = 0; p < background.size(); ++p) {
      background[p] = !molecule_cover[p] && !qd_cover[p];
    }
  }

  std::vector<std::uint8_t> keep(state.canvas.pixel_count(), 0);
  for (std::size_t p = 0; p < keep.size(); ++p) keep[p] = molecule[p] || background[p];
  LabelState scratch = state;
  PhotonStream stream(scratch.canvas);
  stream.set_pixel_filter(std::move(keep));
  simulate_read(scratch, setup.drive, setup.exposure, stream);

  SpectrumReport report;
  const auto mol_times = gather_times(stream, molecule);
  const auto bg_times = gather_times(stream, background);
  report.molecule_photons = mol_times.size();
  report.background_photons = bg_times.size();
  report.molecule = modulation_spectrum(mol_times, grid);
  report.background = modulation_spectrum(bg_times, grid);
  report.molecule_peak_hz = peak_frequency(report.molecule);
  report.background_peak_hz = peak_frequency(report.background);
  return report;
}

void export_dataset(const RunConfig& config, const DatasetOptions& options,
                    const std::filesystem::path& out_dir, const ProgressFn& progress) {
  config.validate();
  if (options.count < 1) fail(ErrorKind::kInvalidInput, "dataset count must be >= 1");
  const SimulationSetup setup = config.setup();
  const auto charset = config.charset_entries();

  std::error_code ec;
  std::filesystem::create_directories(out_dir / "images", ec);
  if (ec) fail(ErrorKind::kIo, "cannot create " + (out_dir / "images").string());
  std::ofstream manifest(out_dir / "manifest.csv");
  if (!manifest) fail(ErrorKind::kIo, "cannot write " + (out_dir / "manifest.csv").string());
  manifest << "filename,glyph_label,mean_n,seed\n";

  for (std::size_t i = 0; i < options.count; ++i) {
    const int mean_n = config.mean_counts[i % config.mean_counts.size()];
    const std::uint64_t seed = derive_seed(config.sweep_seed, kDatasetStream, i);
    Rng pick(derive_seed(seed, stream::kTrial));
    const auto idx = std::min(charset.size() - 1,
                              static_cast<std::size_t>(uniform01(pick) *
                                                       static_cast<double>(charset.size())));
    const std::string& text = charset[idx];

    LabelConfig cfg = setup.label;
    cfg.molecule_count = mean_n;
    LabelState state = build_label(text, cfg, seed);
    ImageAccumulator acc(state.canvas, setup.omega());
    simulate_read(state, setup.drive, setup.exposure, acc);

    char name[32];
    std::snprintf(name, sizeof(name), "freq_%05zu.pgm", i);
    const auto freq = freq_image(acc);
    write_pgm(out_dir / "images" / name, freq.canvas, freq.values);
    if (options.include_time) {
      char tname[32];
      std::snprintf(tname, sizeof(tname), "time_%05zu.pgm", i);
      const auto time = time_image(acc);
      write_pgm(out_dir / "images" / tname, time.canvas, time.values);
    }
    manifest << "images/" << name << ',' << text << ',' << mean_n << ',' << seed << '\n';
    if (progress) progress(i + 1, options.count);
  }
  if (!manifest) fail(ErrorKind::kIo, "failed writing manifest.csv");
}

}  // namespace smqc
