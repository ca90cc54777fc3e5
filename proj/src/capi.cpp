// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#include "smqc/smqc.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "smqc/error.hpp"
#include "smqc/label_io.hpp"
#include "smqc/operations.hpp"

struct smqc_config {
  smqc::RunConfig value;
};

struct smqc_label {
  smqc::LabelState value;
};

namespace {

thread_local std::string g_last_error;

smqc_status status_for(smqc::ErrorKind kind) {
  switch (kind) {
    case smqc::ErrorKind::kDomain:
    case smqc::ErrorKind::kInvalidInput:
      return SMQC_ERR_USAGE;
    case smqc::ErrorKind::kIo:
      return SMQC_ERR_IO;
    case smqc::ErrorKind::kValidation:
      return SMQC_ERR_VALIDATION;
    case smqc::ErrorKind::kNonConvergence:
      return SMQC_ERR_NONCONVERGENCE;
  }
  return SMQC_ERR_INTERNAL;
}

template <typename Fn>
smqc_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SMQC_OK;
  } catch (const smqc::Error& e) {
    g_last_error = e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return SMQC_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    smqc::fail(smqc::ErrorKind::kInvalidInput, std::string(what) + " must not be NULL");
  }
}

void copy_text(char (&dst)[SMQC_TEXT_CAP], const std::string& src) {
  std::memset(dst, 0, SMQC_TEXT_CAP);
  std::strncpy(dst, src.c_str(), SMQC_TEXT_CAP - 1);
}

void copy_decode(smqc_decode& dst, const smqc::Classification& c) {
  dst.no_signal = c.no_signal ? 1 : 0;
  copy_text(dst.label, c.label);
  dst.score = c.score;
  copy_text(dst.runner_up, c.runner_up);
  dst.runner_up_score = c.runner_up_score;
}

double value_at(const smqc::ModulationSpectrum& s, double hz) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < s.frequency_hz.size(); ++i) {
    if (std::abs(s.frequency_hz[i] - hz) < std::abs(s.frequency_hz[best] - hz)) best = i;
  }
  return s.magnitude.empty() ? 0.0 : s.magnitude[best];
}

smqc::ProgressFn wrap(smqc_progress_fn fn, void* user) {
  if (fn == nullptr) return {};
  return [fn, user](std::size_t done, std::size_t total) { fn(done, total, user); };
}

}  // namespace

extern "C" {

const char* smqc_version(void) { return "1.0.0"; }

const char* smqc_last_error(void) { return g_last_error.c_str(); }

void smqc_string_free(char* s) { delete[] s; }

smqc_status smqc_config_default(smqc_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new smqc_config{};
  });
}

smqc_status smqc_config_load(const char* path, smqc_config** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new smqc_config{smqc::load_config(path)};
  });
}

smqc_status smqc_config_parse(const char* text, smqc_config** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new smqc_config{smqc::parse_config(text)};
  });
}

smqc_status smqc_config_set(smqc_config* config, const char* key, const char* value) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    require(value, "value");
    smqc::set_config_value(config->value, key, value);
  });
}

smqc_status smqc_config_default_text(char** out) {
  return guarded([&] {
    require(out, "out");
    const std::string text = smqc::default_config_text();
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

void smqc_config_free(smqc_config* config) { delete config; }

smqc_status smqc_forge(const smqc_config* config, const char* text, smqc_label** out) {
  return guarded([&] {
    require(config, "config");
    require(text, "text");
    require(out, "out");
    *out = new smqc_label{smqc::forge_label(config->value, text)};
  });
}

smqc_status smqc_label_load(const char* path, smqc_label** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new smqc_label{smqc::load_label(path)};
  });
}

smqc_status smqc_label_save(const smqc_label* label, const char* path) {
  return guarded([&] {
    require(label, "label");
    require(path, "path");
    smqc::save_label(path, label->value);
  });
}

smqc_status smqc_label_info_get(const smqc_label* label, smqc_label_info* out) {
  return guarded([&] {
    require(label, "label");
    require(out, "out");
    const auto& s = label->value;
    *out = smqc_label_info{};
    copy_text(out->glyph, s.glyph_text);
    out->read_count = s.read_count;
    out->reusable = s.layer_stack == smqc::LayerStack::kQuenchInhibited ? 1 : 0;
    out->mask_area = s.mask_area;
    out->molecules = s.count(smqc::EmitterKind::kCoherentMolecule, false);
    out->molecules_alive = s.alive_molecules();
    out->interference = s.count(smqc::EmitterKind::kIncoherentQd, false);
    out->illumination_time = s.illumination_time;
    out->seed = s.rng_seed;
  });
}

void smqc_label_free(smqc_label* label) { delete label; }

smqc_status smqc_read(const smqc_config* config, smqc_label* label,
                      const smqc_read_outputs* outputs, smqc_read_report* report) {
  return guarded([&] {
    require(config, "config");
    require(label, "label");
    smqc::ReadOutputs out;
    if (outputs != nullptr) {
      if (outputs->time_pgm) out.time_pgm = outputs->time_pgm;
      if (outputs->freq_pgm) out.freq_pgm = outputs->freq_pgm;
      if (outputs->raw_csv) out.raw_csv = outputs->raw_csv;
      if (outputs->photon_dump) out.photon_dump = outputs->photon_dump;
    }
    const auto r = smqc::perform_read(config->value, label->value, out);
    if (report != nullptr) {
      *report = smqc_read_report{};
      report->read_index = r.summary.read_index;
      report->molecules_at_start = r.summary.molecules_at_start;
      report->molecules_after = r.summary.molecules_after;
      report->signal_photons = r.summary.signal_photons;
      report->interference_photons = r.summary.interference_photons;
      report->dark_photons = r.summary.dark_photons;
      report->illumination_at_start = r.illumination_at_start;
      copy_decode(report->frequency, r.frequency);
      copy_decode(report->time, r.time);
      report->contrast_frequency = r.contrast_frequency;
      report->contrast_time = r.contrast_time;
    }
  });
}

smqc_status smqc_spectrum(const smqc_config* config, const smqc_label* label,
                          const char* molecule_csv, const char* background_csv,
                          smqc_spectrum_report* report) {
  return guarded([&] {
    require(config, "config");
    require(label, "label");
    const auto r = smqc::probe_spectrum(config->value, label->value);
    if (molecule_csv) smqc::write_spectrum_csv(molecule_csv, r.molecule);
    if (background_csv) smqc::write_spectrum_csv(background_csv, r.background);
    if (report != nullptr) {
      report->molecule_photons = r.molecule_photons;
      report->background_photons = r.background_photons;
      report->molecule_peak_hz = r.molecule_peak_hz;
      report->background_peak_hz = r.background_peak_hz;
      report->molecule_at_mod = value_at(r.molecule, config->value.mod_frequency);
      report->background_at_mod = value_at(r.background, config->value.mod_frequency);
    }
  });
}

smqc_status smqc_sweep(const smqc_config* config, const char* out_csv,
                       smqc_sweep_row* rows, size_t capacity, size_t* row_count,
                       smqc_progress_fn progress, void* user) {
  return guarded([&] {
    require(config, "config");
    const auto& c = config->value;
    smqc::SweepOptions opt;
    opt.mean_counts = c.mean_counts;
    opt.trials = static_cast<std::size_t>(c.trials);
    opt.seed = c.sweep_seed;
    opt.charset = c.charset_entries();
    const auto result = smqc::accuracy_sweep(opt, c.setup(), wrap(progress, user));
    if (out_csv) smqc::write_sweep_csv(out_csv, result.frequency);
    if (row_count) *row_count = result.frequency.size();
    for (std::size_t i = 0; rows != nullptr && i < capacity && i < result.frequency.size();
         ++i) {
      const auto& r = result.frequency[i];
      rows[i] = smqc_sweep_row{r.mean_n, r.trials, r.correct, r.accuracy, r.ci_low, r.ci_high};
    }
  });
}

smqc_status smqc_fit(const smqc_config* config, const char* sweep_csv, const char* out_json,
                     int free_c, smqc_fit_result* out) {
  return guarded([&] {
    require(config, "config");
    require(sweep_csv, "sweep_csv");
    const auto rows = smqc::read_sweep_csv(sweep_csv);
    std::vector<smqc::AccuracyPoint> points;
    for (const auto& r : rows) {
      points.push_back({static_cast<double>(r.mean_n), 0.0, r.accuracy});
    }
    smqc::FitOptions opt;
    opt.free_c = free_c != 0;
    opt.alpha_p_init = config->value.alpha * config->value.power;
    opt.charset_size = config->value.charset_entries().size();
    const auto fit = smqc::fit_accuracy_model(points, opt);
    if (out_json) {
      std::ofstream os(out_json);
      if (!os) smqc::fail(smqc::ErrorKind::kIo, std::string("cannot write ") + out_json);
      os << smqc::fit_to_json(fit);
      if (!os) smqc::fail(smqc::ErrorKind::kIo, std::string("failed writing ") + out_json);
    }
    if (out != nullptr) {
      *out = smqc_fit_result{fit.beta,    fit.k_dis,
                             fit.c,       fit.alpha_p,
                             fit.c_fixed, fit.alpha_p_fixed,
                             fit.residual_r2};
    }
  });
}

smqc_status smqc_export_dataset(const smqc_config* config, size_t count, const char* out_dir,
                                int include_time, smqc_progress_fn progress, void* user) {
  return guarded([&] {
    require(config, "config");
    require(out_dir, "out_dir");
    smqc::DatasetOptions opt;
    opt.count = count;
    opt.include_time = include_time != 0;
    smqc::export_dataset(config->value, opt, out_dir, wrap(progress, user));
  });
}

double smqc_relative_phase(double t, double mod_frequency) {
  smqc::coherence::PulsePairDrive d;
  d.mod_frequency = mod_frequency;
  return smqc::coherence::relative_phase(t, d);
}

smqc_status smqc_excited_population(double theta, double delta_phi, double visibility,
                                    double* out) {
  return guarded([&] {
    require(out, "out");
    *out = smqc::coherence::excited_population(theta, delta_phi, visibility);
  });
}

smqc_status smqc_excited_population_general(double theta1, double theta2, double delta_phi,
                                            double* out) {
  return guarded([&] {
    require(out, "out");
    *out = smqc::coherence::excited_population_general(theta1, theta2, delta_phi);
  });
}

smqc_status smqc_visibility(double delta_t, double dephasing_time, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = smqc::coherence::visibility(delta_t, dephasing_time);
  });
}

smqc_status smqc_dephasing_time(int geometry, double noise_density, double* out) {
  return guarded([&] {
    require(out, "out");
    if (geometry != 0 && geometry != 1) {
      smqc::fail(smqc::ErrorKind::kDomain, "geometry must be 0 or 1");
    }
    smqc::coherence::DephasingEnvironment env;
    env.geometry = geometry == 0 ? smqc::coherence::DephasingGeometry::kSingleAxis
                                 : smqc::coherence::DephasingGeometry::kIsotropicThreeAxis;
    env.noise_density = noise_density;
    *out = smqc::coherence::dephasing_time(env);
  });
}

double smqc_dft_magnitude(const double* times, size_t n, double omega) {
  if (times == nullptr || n == 0) return 0.0;
  return smqc::dft_magnitude(std::span<const double>(times, n), omega);
}

smqc_status smqc_estimate_visibility(double magnitude, double photons,
                                     double modulation_periods, double* out, int* clamped) {
  return guarded([&] {
    require(out, "out");
    const auto v = smqc::estimate_visibility(magnitude, photons, modulation_periods);
    *out = v.value;
    if (clamped) *clamped = v.clamped ? 1 : 0;
  });
}

}  // extern "C"
