// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
//
// smqc command line. Talks to the library only through the C interface.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "smqc/smqc.h"

namespace fs = std::filesystem;

namespace {

struct CliError {
  int code;
};

void check(smqc_status s, const std::string& what) {
  if (s != SMQC_OK) {
    std::cerr << "smqc: " << what << ": " << smqc_last_error() << "\n";
    throw CliError{static_cast<int>(s)};
  }
}

class Config {
 public:
  Config(const std::string& path, const std::vector<std::string>& overrides) {
    if (path.empty()) {
      check(smqc_config_default(&handle_), "default config");
    } else {
      check(smqc_config_load(path.c_str(), &handle_), "config");
    }
    for (const auto& kv : overrides) set_pair(kv);
  }
  ~Config() { smqc_config_free(handle_); }
  Config(const Config&) = delete;
  Config& operator=(const Config&) = delete;

  void set(const std::string& key, const std::string& value) {
    check(smqc_config_set(handle_, key.c_str(), value.c_str()), "--set " + key);
  }
  void set_pair(const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "smqc: --set expects section.key=value, got '" << kv << "'\n";
      throw CliError{SMQC_ERR_USAGE};
    }
    set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  const smqc_config* get() const { return handle_; }

 private:
  smqc_config* handle_ = nullptr;
};

class Label {
 public:
  explicit Label(smqc_label* h) : handle_(h) {}
  ~Label() { smqc_label_free(handle_); }
  Label(const Label&) = delete;
  Label& operator=(const Label&) = delete;
  smqc_label* get() const { return handle_; }

  smqc_label_info info() const {
    smqc_label_info i{};
    check(smqc_label_info_get(handle_, &i), "label info");
    return i;
  }

 private:
  smqc_label* handle_;
};

Label load(const std::string& path) {
  smqc_label* h = nullptr;
  check(smqc_label_load(path.c_str(), &h), "label " + path);
  return Label(h);
}

nlohmann::ordered_json decode_json(const smqc_decode& d) {
  nlohmann::ordered_json j;
  j["no_signal"] = d.no_signal != 0;
  j["label"] = d.label;
  j["score"] = d.score;
  j["runner_up"] = d.runner_up;
  j["runner_up_score"] = d.runner_up_score;
  return j;
}

void progress_bar(size_t done, size_t total, void*) {
  if (done == total || done % 25 == 0) {
    std::fprintf(stderr, "\r%zu/%zu", done, total);
    if (done == total) std::fputc('\n', stderr);
  }
}

std::string join_counts(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate, read and decode single-molecule coherence labels"};
  app.require_subcommand(0, 1);

  std::string config_path;
  std::vector<std::string> overrides;
  bool emit_default = false;
  app.add_option("-c,--config", config_path, "Run configuration file")->check(CLI::ExistingFile);
  app.add_option("--set", overrides, "Override a config field, section.key=value")
      ->take_all();
  app.add_flag("--emit-default-config", emit_default,
               "Print the annotated default configuration and exit");

  // forge
  auto* forge = app.add_subcommand("forge", "Build a new label file");
  std::string forge_text;
  std::string forge_out;
  bool reusable = false;
  long long forge_seed = -1;
  forge->add_option("text", forge_text, "Glyph: 0-9, A-Z or a two-letter pair")->required();
  forge->add_option("-o,--out", forge_out, "Label file to write")->required();
  forge->add_flag("--reusable", reusable, "Quench-inhibited layer stack");
  forge->add_option("--seed", forge_seed, "Label seed")->check(CLI::NonNegativeNumber);

  // read
  auto* read = app.add_subcommand("read", "Read a label once; the label file is updated");
  std::string read_label;
  std::string read_dir = ".";
  bool read_dump = false;
  read->add_option("label", read_label, "Label file")->required();
  read->add_option("-d,--out-dir", read_dir, "Directory for images and report");
  read->add_flag("--photon-dump", read_dump, "Also write the binary photon list");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Modulation spectra without consuming the label");
  std::string spec_label;
  std::string spec_prefix = "spectrum";
  spectrum->add_option("label", spec_label, "Label file")->required();
  spectrum->add_option("-o,--out", spec_prefix,
                       "Output prefix; writes PREFIX_molecule.csv and PREFIX_background.csv");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Accuracy versus mean molecule count");
  std::string sweep_out = "sweep.csv";
  long long sweep_trials = -1;
  std::vector<int> sweep_counts;
  long long sweep_seed = -1;
  sweep->add_option("-o,--out", sweep_out, "Sweep CSV");
  sweep->add_option("--trials", sweep_trials, "Trials per mean count");
  sweep->add_option("--counts", sweep_counts, "Mean molecule counts")->delimiter(',');
  sweep->add_option("--seed", sweep_seed, "Sweep seed")->check(CLI::NonNegativeNumber);

  // fit
  auto* fit = app.add_subcommand("fit", "Fit the accuracy model to a sweep CSV");
  std::string fit_in;
  std::string fit_out = "fit.json";
  bool free_c = false;
  fit->add_option("sweep_csv", fit_in, "Sweep CSV")->required();
  fit->add_option("-o,--out", fit_out, "Fit JSON");
  fit->add_flag("--free-c", free_c, "Fit the constant c instead of fixing it at 1");

  // export-dataset
  auto* dataset = app.add_subcommand("export-dataset", "Write a training dataset of images");
  long long ds_count = 1000;
  std::string ds_out;
  bool ds_time = false;
  dataset->add_option("--count", ds_count, "Number of images");
  dataset->add_option("-o,--out", ds_out, "Output directory")->required();
  dataset->add_flag("--time", ds_time, "Also write time-domain images");

  auto* emit = app.add_subcommand("emit-default-config", "Print the annotated default configuration");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : SMQC_ERR_USAGE;
  }

  try {
    if (emit_default || emit->parsed()) {
      char* text = nullptr;
      check(smqc_config_default_text(&text), "default config");
      std::cout << text;
      smqc_string_free(text);
      return 0;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return SMQC_ERR_USAGE;
    }
    Config config(config_path, overrides);

    if (forge->parsed()) {
      if (reusable) config.set("label.layer_stack", "\"quench_inhibited\"");
      if (forge_seed >= 0) config.set("seed.label", std::to_string(forge_seed));
      smqc_label* h = nullptr;
      check(smqc_forge(config.get(), forge_text.c_str(), &h), "forge");
      Label label(h);
      check(smqc_label_save(label.get(), forge_out.c_str()), "save " + forge_out);
      const auto info = label.info();
      std::cout << "glyph " << info.glyph << "\n"
                << "mask_area " << info.mask_area << "\n"
                << "molecules " << info.molecules << "\n"
                << "interference " << info.interference << "\n"
                << "layer_stack " << (info.reusable ? "quench_inhibited" : "disposable") << "\n"
                << "label " << forge_out << "\n";
      return 0;
    }

    if (read->parsed()) {
      Label label = load(read_label);
      const int index = label.info().read_count + 1;
      std::error_code ec;
      fs::create_directories(read_dir, ec);
      const std::string stem = (fs::path(read_dir) / ("read_" + std::to_string(index))).string();
      const std::string time_pgm = stem + "_time.pgm";
      const std::string freq_pgm = stem + "_freq.pgm";
      const std::string raw_csv = stem + "_freq_raw.csv";
      const std::string dump = stem + "_photons.bin";
      const std::string report_path = stem + "_report.json";
      smqc_read_outputs out{time_pgm.c_str(), freq_pgm.c_str(), raw_csv.c_str(),
                            read_dump ? dump.c_str() : nullptr};
      smqc_read_report r{};
      check(smqc_read(config.get(), label.get(), &out, &r), "read");
      check(smqc_label_save(label.get(), read_label.c_str()), "save " + read_label);
      const auto info = label.info();

      nlohmann::ordered_json j;
      j["label"] = read_label;
      j["truth"] = info.glyph;
      j["read_index"] = r.read_index;
      j["illumination_at_start"] = r.illumination_at_start;
      j["molecules_at_start"] = r.molecules_at_start;
      j["molecules_after"] = r.molecules_after;
      j["signal_photons"] = r.signal_photons;
      j["interference_photons"] = r.interference_photons;
      j["dark_photons"] = r.dark_photons;
      j["frequency"] = decode_json(r.frequency);
      j["time"] = decode_json(r.time);
      j["contrast_frequency"] = r.contrast_frequency;
      j["contrast_time"] = r.contrast_time;
      std::ofstream(report_path) << j.dump(2) << "\n";

      std::cout << "read " << r.read_index << " of " << read_label << "\n"
                << "molecules " << r.molecules_at_start << " -> " << r.molecules_after << "\n"
                << "frequency decode "
                << (r.frequency.no_signal ? "<no signal>" : r.frequency.label)
                << " score " << r.frequency.score << " (runner-up " << r.frequency.runner_up
                << " " << r.frequency.runner_up_score << ")\n"
                << "time decode " << (r.time.no_signal ? "<no signal>" : r.time.label)
                << " score " << r.time.score << "\n"
                << "contrast frequency " << r.contrast_frequency << " time " << r.contrast_time
                << "\n"
                << "report " << report_path << "\n";
      return 0;
    }

    if (spectrum->parsed()) {
      Label label = load(spec_label);
      const std::string mol = spec_prefix + "_molecule.csv";
      const std::string bg = spec_prefix + "_background.csv";
      smqc_spectrum_report r{};
      check(smqc_spectrum(config.get(), label.get(), mol.c_str(), bg.c_str(), &r), "spectrum");
      std::cout << "molecule photons " << r.molecule_photons << " peak " << r.molecule_peak_hz
                << " Hz\n"
                << "background photons " << r.background_photons << " peak "
                << r.background_peak_hz << " Hz\n"
                << "wrote " << mol << " " << bg << "\n";
      return 0;
    }

    if (sweep->parsed()) {
      if (sweep_trials != -1) config.set("sweep.trials", std::to_string(sweep_trials));
      if (!sweep_counts.empty()) config.set("sweep.mean_counts", join_counts(sweep_counts));
      if (sweep_seed >= 0) config.set("seed.sweep", std::to_string(sweep_seed));
      std::vector<smqc_sweep_row> rows(64);
      size_t n = 0;
      check(smqc_sweep(config.get(), sweep_out.c_str(), rows.data(), rows.size(), &n,
                       progress_bar, nullptr),
            "sweep");
      std::cout << "mean_n accuracy ci_low ci_high\n";
      for (size_t i = 0; i < n && i < rows.size(); ++i) {
        std::cout << rows[i].mean_n << " " << rows[i].accuracy << " " << rows[i].ci_low << " "
                  << rows[i].ci_high << "\n";
      }
      std::cout << "wrote " << sweep_out << "\n";
      return 0;
    }

    if (fit->parsed()) {
      smqc_fit_result r{};
      check(smqc_fit(config.get(), fit_in.c_str(), fit_out.c_str(), free_c ? 1 : 0, &r), "fit");
      std::cout << "beta " << r.beta << "\nk_dis " << r.k_dis << "\nc " << r.c << "\nalpha_p "
                << r.alpha_p << (r.alpha_p_fixed ? " (held)" : "") << "\nr2 " << r.residual_r2
                << "\nwrote " << fit_out << "\n";
      return 0;
    }

    if (dataset->parsed()) {
      if (ds_count < 1) {
        std::cerr << "smqc: --count must be >= 1\n";
        return SMQC_ERR_USAGE;
      }
      check(smqc_export_dataset(config.get(), static_cast<size_t>(ds_count), ds_out.c_str(),
                                ds_time ? 1 : 0, progress_bar, nullptr),
            "export-dataset");
      std::cout << "wrote " << ds_count << " images to " << ds_out << "\n";
      return 0;
    }
  } catch (const CliError& e) {
    return e.code;
  }
  return 0;
}
