// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#include "smqc/label.hpp"

#include <cmath>
#include <unordered_set>

#include "smqc/error.hpp"

namespace smqc {
namespace {

int draw_radius(int radius_min, int radius_max, Rng& rng) {
  std::uniform_int_distribution<int> dist(radius_min, radius_max);
  return dist(rng);
}

void require_radii(int radius_min, int radius_max) {
  if (radius_min < 0 || radius_max < radius_min) {
    fail(ErrorKind::kDomain, "invalid spot radius range");
  }
}

double bleach_rate(const LabelState& state, const Emitter& e) {
  if (!e.bleach_susceptible) return 0.0;
  return e.kind == EmitterKind::kCoherentMolecule
             ? state.bleach_model.k_bleach()
             : state.bleach_model.qd_rate;
}

}  // namespace

std::size_t LabelState::count(EmitterKind kind, bool alive_only) const {
  std::size_t n = 0;
  for (const auto& e : emitters) {
    if (e.kind == kind && (!alive_only || e.alive)) ++n;
  }
  return n;
}

void LabelConfig::validate() const {
  if (canvas.width < 1 || canvas.height < 1) {
    fail(ErrorKind::kDomain, "canvas must be at least 1x1");
  }
  if (molecule_count < 0 || qd_count < 0) {
    fail(ErrorKind::kDomain, "emitter counts must be non-negative");
  }
  require_radii(radius_min, radius_max);
  if (!(molecule_peak_rate >= 0.0) || !(qd_peak_rate >= 0.0)) {
    fail(ErrorKind::kDomain, "peak rates must be non-negative");
  }
  if (!(molecule_visibility >= 0.0 && molecule_visibility <= 1.0) ||
      !(qd_visibility >= 0.0 && qd_visibility <= 1.0)) {
    fail(ErrorKind::kDomain, "visibility must lie in [0, 1]");
  }
  if (!(bleach.alpha >= 0.0) || !(bleach.power >= 0.0) ||
      !(bleach.qd_rate >= 0.0)) {
    fail(ErrorKind::kDomain, "bleach parameters must be non-negative");
  }
}

const char* to_string(EmitterKind kind) {
  return kind == EmitterKind::kCoherentMolecule ? "coherent_molecule"
                                                : "incoherent_qd";
}

const char* to_string(LayerStack stack) {
  return stack == LayerStack::kDisposable ? "disposable" : "quench_inhibited";
}

EmitterKind emitter_kind_from_string(const std::string& s) {
  if (s == "coherent_molecule") return EmitterKind::kCoherentMolecule;
  if (s == "incoherent_qd") return EmitterKind::kIncoherentQd;
  fail(ErrorKind::kValidation, "unknown emitter kind '" + s + "'");
}

LayerStack layer_stack_from_string(const std::string& s) {
  if (s == "disposable") return LayerStack::kDisposable;
  if (s == "quench_inhibited" || s == "reusable") {
    return LayerStack::kQuenchInhibited;
  }
  fail(ErrorKind::kDomain, "unknown layer stack '" + s + "'");
}

std::vector<Emitter> place_signal_emitters(const GlyphMask& mask, int count,
                                           int radius_min, int radius_max,
                                           Rng& rng) {
  if (count < 1) fail(ErrorKind::kInvalidInput, "signal count must be >= 1");
  if (mask.area() == 0) fail(ErrorKind::kInvalidInput, "glyph mask is empty");
  if (static_cast<std::size_t>(count) > mask.area()) {
    fail(ErrorKind::kInvalidInput,
         "cannot place " + std::to_string(count) + " molecules in a mask of " +
             std::to_string(mask.area()) + " pixels");
  }
  require_radii(radius_min, radius_max);

  const auto members = mask.members();
  const int width = mask.canvas().width;
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  std::unordered_set<std::uint32_t> taken;
  std::vector<Emitter> out;
  out.reserve(static_cast<std::size_t>(count));
  while (out.size() < static_cast<std::size_t>(count)) {
    const std::uint32_t idx = members[pick(rng)];
    if (!taken.insert(idx).second) continue;  // collision: resample
    Emitter e;
    e.x = static_cast<int>(idx % static_cast<std::uint32_t>(width));
    e.y = static_cast<int>(idx / static_cast<std::uint32_t>(width));
    e.spot_radius = draw_radius(radius_min, radius_max, rng);
    e.kind = EmitterKind::kCoherentMolecule;
    out.push_back(e);
  }
  return out;
}

std::vector<Emitter> place_interference(const Canvas& canvas, int count,
                                        int radius_min, int radius_max,
                                        Rng& rng) {
  if (count < 0) fail(ErrorKind::kDomain, "interference count must be >= 0");
  require_radii(radius_min, radius_max);
  std::uniform_int_distribution<int> px(0, canvas.width - 1);
  std::uniform_int_distribution<int> py(0, canvas.height - 1);
  std::vector<Emitter> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Emitter e;
    e.x = px(rng);
    e.y = py(rng);
    e.spot_radius = draw_radius(radius_min, radius_max, rng);
    e.kind = EmitterKind::kIncoherentQd;
    out.push_back(e);
  }
  return out;
}

LabelState build_label(const std::string& text, const LabelConfig& config,
                       std::uint64_t seed) {
  config.validate();
  Rng rng(derive_seed(seed, stream::kForge));
  const GlyphMask mask = rasterize_glyph(text, config.canvas, config.font);

  LabelState state;
  state.glyph_text = text;
  state.canvas = config.canvas;
  state.font = config.font;
  state.mask_area = mask.area();
  state.layer_stack = config.layer_stack;
  state.rng_seed = seed;
  state.bleach_model = config.bleach;

  if (config.molecule_count > 0) {
    state.emitters = place_signal_emitters(mask, config.molecule_count,
                                           config.radius_min, config.radius_max,
                                           rng);
  }
  for (auto& e : state.emitters) {
    e.peak_rate = config.molecule_peak_rate;
    e.visibility = config.molecule_visibility;
    e.bleach_susceptible = config.layer_stack == LayerStack::kDisposable;
  }
  auto qds = place_interference(config.canvas, config.qd_count,
                                config.radius_min, config.radius_max, rng);
  for (auto& e : qds) {
    e.peak_rate = config.qd_peak_rate;
    e.visibility = config.qd_visibility;
    e.bleach_susceptible = true;  // governed by BleachModel::qd_rate
  }
  state.emitters.insert(state.emitters.end(), qds.begin(), qds.end());
  return state;
}

void apply_bleaching(LabelState& state, double illumination_time, Rng& rng) {
  if (!(illumination_time >= 0.0)) {
    fail(ErrorKind::kDomain, "illumination time must be non-negative");
  }
  if (illumination_time == 0.0) return;
  for (auto& e : state.emitters) {
    const double k = bleach_rate(state, e);
    if (!e.alive || k <= 0.0) continue;
    const double survive = std::exp(-k * illumination_time);
    if (uniform01(rng) >= survive) e.alive = false;
  }
  state.illumination_time += illumination_time;
}

void bleach_between_reads(LabelState& state, double illumination_time) {
  Rng rng(derive_seed(state.rng_seed, stream::kBleach,
                      static_cast<std::uint64_t>(state.read_count)));
  apply_bleaching(state, illumination_time, rng);
}

}  // namespace smqc
