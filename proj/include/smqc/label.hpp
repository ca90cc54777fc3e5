// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Label construction: coherent signal molecules written into a glyph mask,
// incoherent quantum-dot interference spread over the whole canvas, and the
// photobleaching that makes a label disposable.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smqc/glyph.hpp"
#include "smqc/random.hpp"

namespace smqc {

enum class EmitterKind { kCoherentMolecule, kIncoherentQd };
enum class LayerStack { kDisposable, kQuenchInhibited };

struct Emitter {
  int x = 0;
  int y = 0;
  int spot_radius = 3;  // px
  EmitterKind kind = EmitterKind::kCoherentMolecule;
  double peak_rate = 0.0;  // photons/s at full excited-state population
  double visibility = 0.0;
  bool alive = true;
  bool bleach_susceptible = true;

  friend bool operator==(const Emitter&, const Emitter&) = default;
};

/// First-order photobleaching, k = alpha * power.
struct BleachModel {
  double alpha = 2.2388;  // 1/(power unit * s)
  double power = 1.0;
  double qd_rate = 0.0;  // 1/s; quantum dots are persistent by default

  double k_bleach() const { return alpha * power; }
  friend bool operator==(const BleachModel&, const BleachModel&) = default;
};

struct LabelState {
  std::string glyph_text;
  Canvas canvas;
  FontSpec font;
  std::size_t mask_area = 0;
  std::vector<Emitter> emitters;
  LayerStack layer_stack = LayerStack::kDisposable;
  int read_count = 0;
  std::uint64_t rng_seed = 0;
  BleachModel bleach_model;
  double illumination_time = 0.0;  // cumulative seconds under excitation

  std::size_t count(EmitterKind kind, bool alive_only) const;
  std::size_t alive_molecules() const {
    return count(EmitterKind::kCoherentMolecule, true);
  }

  friend bool operator==(const LabelState& a, const LabelState& b) {
    return a.glyph_text == b.glyph_text && a.canvas.width == b.canvas.width &&
           a.canvas.height == b.canvas.height &&
           a.canvas.extent_um == b.canvas.extent_um &&
           a.font.name == b.font.name && a.font.cell_size == b.font.cell_size &&
           a.mask_area == b.mask_area && a.emitters == b.emitters &&
           a.layer_stack == b.layer_stack && a.read_count == b.read_count &&
           a.rng_seed == b.rng_seed && a.bleach_model == b.bleach_model &&
           a.illumination_time == b.illumination_time;
  }
};

struct LabelConfig {
  Canvas canvas;
  FontSpec font;
  int molecule_count = 100;
  int qd_count = 1000;
  int radius_min = 3;
  int radius_max = 4;
  double molecule_peak_rate = 4.0e5;
  double qd_peak_rate = 1.2e6;
  double molecule_visibility = 0.9048374180359595;  // exp(-100 ps / 1 ns)
  double qd_visibility = 0.0;
  LayerStack layer_stack = LayerStack::kDisposable;
  BleachModel bleach;

  void validate() const;
};

const char* to_string(EmitterKind kind);
const char* to_string(LayerStack stack);
EmitterKind emitter_kind_from_string(const std::string& s);
LayerStack layer_stack_from_string(const std::string& s);

/// `count` coherent molecules with distinct centres drawn uniformly from the
/// mask's member pixels. Spot radii are uniform over [radius_min, radius_max].
std::vector<Emitter> place_signal_emitters(const GlyphMask& mask, int count,
                                           int radius_min, int radius_max,
                                           Rng& rng);

/// `count` incoherent emitters uniform over the whole canvas.
std::vector<Emitter> place_interference(const Canvas& canvas, int count,
                                        int radius_min, int radius_max,
                                        Rng& rng);

LabelState build_label(const std::string& text, const LabelConfig& config,
                       std::uint64_t seed);

/// Illuminates the label for `illumination_time` seconds: every alive,
/// susceptible emitter survives independently with probability exp(-k t).
void apply_bleaching(LabelState& state, double illumination_time, Rng& rng);

/// apply_bleaching with a generator derived from the label's own seed and
/// read count, so the illumination between reads is reproducible from the
/// label file.
void bleach_between_reads(LabelState& state, double illumination_time);

}  // namespace smqc
