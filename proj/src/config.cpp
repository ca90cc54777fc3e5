// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#include "smqc/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <variant>

#include "smqc/error.hpp"

namespace smqc {
namespace {

using Array = std::vector<double>;
using Value = std::variant<std::int64_t, double, bool, std::string, Array>;

struct Entry {
  Value value;
  int line = 0;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Drops a trailing comment, ignoring '#' inside a quoted string.
std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void error(int line, const std::string& msg) const {
    fail(ErrorKind::kInvalidInput, source_ + ":" + std::to_string(line) + ": " + msg);
  }

  std::optional<Value> number(std::string_view s) const {
    std::string clean;
    for (char c : s) {
      if (c != '_') clean.push_back(c);
    }
    if (clean.empty()) return std::nullopt;
    const char* b = clean.data();
    const char* e = b + clean.size();
    if (*b == '+') ++b;
    const bool is_float = clean.find_first_of(".eE") != std::string::npos ||
                          clean == "inf" || clean == "nan";
    if (!is_float) {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(b, e, v);
      if (ec == std::errc() && p == e) return Value{v};
      return std::nullopt;
    }
    double d = 0.0;
    auto [p, ec] = std::from_chars(b, e, d);
    if (ec == std::errc() && p == e && std::isfinite(d)) return Value{d};
    return std::nullopt;
  }

  Value value(std::string_view s, int line) const {
    if (s.empty()) error(line, "missing value");
    if (s == "true") return true;
    if (s == "false") return false;
    if (s.front() == '"') {
      if (s.size() < 2 || s.back() != '"') error(line, "unterminated string");
      const auto body = s.substr(1, s.size() - 2);
      if (body.find_first_of("\"\\") != std::string_view::npos) {
        error(line, "escapes are not supported in strings");
      }
      return std::string(body);
    }
    if (s.front() == '[') {
      if (s.back() != ']') error(line, "unterminated array");
      Array out;
      auto body = trim(s.substr(1, s.size() - 2));
      while (!body.empty()) {
        const auto comma = body.find(',');
        const auto item = trim(body.substr(0, comma));
        if (!item.empty()) {
          const auto v = number(item);
          if (!v) error(line, "arrays may only hold numbers");
          out.push_back(std::holds_alternative<double>(*v)
                            ? std::get<double>(*v)
                            : static_cast<double>(std::get<std::int64_t>(*v)));
        } else if (comma != std::string_view::npos) {
          error(line, "empty array element");
        }
        if (comma == std::string_view::npos) break;
        body = trim(body.substr(comma + 1));
      }
      return out;
    }
    const auto v = number(s);
    if (!v) error(line, "cannot parse value '" + std::string(s) + "'");
    return *v;
  }

  std::map<std::string, Entry> parse(std::string_view text) {
    std::map<std::string, Entry> out;
    std::string section;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto nl = text.find('\n', pos);
      const auto raw = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
      pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      ++line_no;
      const auto line = trim(strip_comment(raw));
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') error(line_no, "malformed section header");
        section = std::string(trim(line.substr(1, line.size() - 2)));
        if (section.empty()) error(line_no, "empty section name");
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) error(line_no, "expected key = value");
      const auto key = trim(line.substr(0, eq));
      if (key.empty()) error(line_no, "empty key");
      const std::string full = section.empty() ? std::string(key)
                                               : section + "." + std::string(key);
      if (out.count(full)) error(line_no, "duplicate key '" + full + "'");
      out[full] = Entry{value(trim(line.substr(eq + 1)), line_no), line_no};
    }
    return out;
  }

 private:
  std::string source_;
};

class Binder {
 public:
  Binder(std::map<std::string, Entry> entries, const Parser& parser)
      : entries_(std::move(entries)), parser_(parser) {}

  void get(const std::string& key, double& out) {
    if (auto* e = take(key)) {
      if (auto* d = std::get_if<double>(&e->value)) {
        out = *d;
      } else if (auto* i = std::get_if<std::int64_t>(&e->value)) {
        out = static_cast<double>(*i);
      } else {
        parser_.error(e->line, key + " must be a number");
      }
    }
  }
  void get(const std::string& key, int& out) {
    if (auto* e = take(key)) {
      auto* i = std::get_if<std::int64_t>(&e->value);
      if (i == nullptr || *i < INT32_MIN || *i > INT32_MAX) {
        parser_.error(e->line, key + " must be an integer");
      }
      out = static_cast<int>(*i);
    }
  }
  void get(const std::string& key, std::uint64_t& out) {
    if (auto* e = take(key)) {
      auto* i = std::get_if<std::int64_t>(&e->value);
      if (i == nullptr || *i < 0) parser_.error(e->line, key + " must be a non-negative integer");
      out = static_cast<std::uint64_t>(*i);
    }
  }
  void get(const std::string& key, std::string& out) {
    if (auto* e = take(key)) {
      auto* s = std::get_if<std::string>(&e->value);
      if (s == nullptr) parser_.error(e->line, key + " must be a string");
      out = *s;
    }
  }
  void get(const std::string& key, std::vector<int>& out) {
    if (auto* e = take(key)) {
      auto* a = std::get_if<Array>(&e->value);
      if (a == nullptr) parser_.error(e->line, key + " must be an array");
      out.clear();
      for (double d : *a) {
        if (d != std::floor(d) || std::abs(d) > INT32_MAX) {
          parser_.error(e->line, key + " must hold integers");
        }
        out.push_back(static_cast<int>(d));
      }
    }
  }
  template <typename Fn>
  void get_enum(const std::string& key, Fn&& convert) {
    std::string s;
    const Entry* e = entries_.count(key) ? &entries_.at(key) : nullptr;
    const int line = e ? e->line : 0;
    get(key, s);
    if (e == nullptr) return;
    try {
      convert(s);
    } catch (const Error& err) {
      parser_.error(line, err.what());
    }
  }

  void finish() const {
    if (!entries_.empty()) {
      const auto& [key, e] = *entries_.begin();
      parser_.error(e.line, "unknown key '" + key + "'");
    }
  }

 private:
  Entry* take(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return nullptr;
    taken_ = it->second;
    entries_.erase(it);
    return &taken_;
  }

  std::map<std::string, Entry> entries_;
  const Parser& parser_;
  Entry taken_;
};

void require(bool ok, const std::string& msg) {
  if (!ok) fail(ErrorKind::kDomain, "config: " + msg);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

void RunConfig::validate() const {
  require(canvas.width >= 1 && canvas.height >= 1, "canvas.width and canvas.height must be >= 1");
  require(canvas.extent_um > 0.0, "canvas.extent_um must be positive");
  require(font.cell_size >= 1, "canvas.cell_size must be >= 1");
  require(molecule_count >= 0, "label.molecule_count must be >= 0");
  require(qd_count >= 0, "label.qd_count must be >= 0");
  require(radius_min >= 0 && radius_max >= radius_min, "label radius range is invalid");
  require(charset == "single" || charset == "pairs" || charset == "all",
          "label.charset must be single, pairs or all");
  require(molecule_peak_rate >= 0.0 && qd_peak_rate >= 0.0, "emission rates must be >= 0");
  require(pulse_area >= 0.0 && pulse_area <= std::numbers::pi,
          "coherence.pulse_area must lie in [0, pi]");
  require(inter_pulse_delay >= 0.0, "coherence.inter_pulse_delay must be >= 0");
  require(mod_frequency > 0.0, "coherence.mod_frequency must be positive");
  require(molecule_noise_density > 0.0 && qd_noise_density > 0.0,
          "coherence noise densities must be positive");
  require(duration > 0.0, "exposure.duration must be positive");
  require(dark_rate >= 0.0, "exposure.dark_rate must be >= 0");
  require(alpha >= 0.0 && power >= 0.0 && qd_bleach_rate >= 0.0,
          "bleach parameters must be >= 0");
  require(n_reads >= 1, "schedule.n_reads must be >= 1");
  require(read_interval >= duration, "schedule.read_interval must be >= exposure.duration");
  require(!mean_counts.empty(), "sweep.mean_counts must not be empty");
  for (int n : mean_counts) require(n >= 0, "sweep.mean_counts must be >= 0");
  require(trials >= 1, "sweep.trials must be >= 1");
  require(spectrum_points >= 1, "sweep.spectrum_points must be >= 1");
  require(spectrum_min_hz >= 0.0 && spectrum_max_hz >= spectrum_min_hz,
          "sweep spectrum range is invalid");
  setup().validate();
}

double RunConfig::molecule_visibility() const {
  const coherence::DephasingEnvironment env{coherence::DephasingGeometry::kSingleAxis,
                                            molecule_noise_density};
  return coherence::visibility(inter_pulse_delay, coherence::dephasing_time(env));
}

double RunConfig::qd_visibility() const {
  const coherence::DephasingEnvironment env{
      coherence::DephasingGeometry::kIsotropicThreeAxis, qd_noise_density};
  return coherence::visibility(inter_pulse_delay, coherence::dephasing_time(env));
}

SimulationSetup RunConfig::setup() const {
  SimulationSetup s;
  s.label.canvas = canvas;
  s.label.font = font;
  s.label.molecule_count = molecule_count;
  s.label.qd_count = qd_count;
  s.label.radius_min = radius_min;
  s.label.radius_max = radius_max;
  s.label.molecule_peak_rate = molecule_peak_rate;
  s.label.qd_peak_rate = qd_peak_rate;
  s.label.molecule_visibility = molecule_visibility();
  s.label.qd_visibility = qd_visibility();
  s.label.layer_stack = layer_stack;
  s.label.bleach.alpha = alpha;
  s.label.bleach.power = power;
  s.label.bleach.qd_rate = qd_bleach_rate;
  s.drive.theta1 = pulse_area;
  s.drive.theta2 = pulse_area;
  s.drive.inter_pulse_delay = inter_pulse_delay;
  s.drive.mod_frequency = mod_frequency;
  s.exposure.duration = duration;
  s.exposure.dark_rate = dark_rate;
  s.exposure.pulse_area = pulse_area;
  s.exposure.spot_profile = spot_profile;
  return s;
}

std::vector<std::string> RunConfig::charset_entries() const {
  std::vector<std::string> out;
  if (charset != "pairs") out = single_charset();
  if (charset != "single") {
    const auto pairs = pair_charset();
    out.insert(out.end(), pairs.begin(), pairs.end());
  }
  return out;
}

RunConfig parse_config(std::string_view text, const std::string& source) {
  RunConfig c;
  apply_config(c, text, source);
  return c;
}

void apply_config(RunConfig& config, std::string_view text, const std::string& source) {
  Parser parser(source);
  Binder b(parser.parse(text), parser);
  RunConfig c = config;
  b.get("canvas.width", c.canvas.width);
  b.get("canvas.height", c.canvas.height);
  b.get("canvas.extent_um", c.canvas.extent_um);
  b.get("canvas.font", c.font.name);
  b.get("canvas.cell_size", c.font.cell_size);
  b.get("label.molecule_count", c.molecule_count);
  b.get("label.qd_count", c.qd_count);
  b.get("label.radius_min", c.radius_min);
  b.get("label.radius_max", c.radius_max);
  b.get_enum("label.layer_stack",
             [&](const std::string& s) { c.layer_stack = layer_stack_from_string(s); });
  b.get("label.charset", c.charset);
  b.get("emission.molecule_peak_rate", c.molecule_peak_rate);
  b.get("emission.qd_peak_rate", c.qd_peak_rate);
  b.get_enum("emission.spot_profile", [&](const std::string& s) {
    if (s == "uniform_disk") {
      c.spot_profile = SpotProfile::kUniformDisk;
    } else if (s == "gaussian") {
      c.spot_profile = SpotProfile::kGaussian;
    } else {
      fail(ErrorKind::kInvalidInput, "spot_profile must be uniform_disk or gaussian");
    }
  });
  b.get("coherence.pulse_area", c.pulse_area);
  b.get("coherence.inter_pulse_delay", c.inter_pulse_delay);
  b.get("coherence.mod_frequency", c.mod_frequency);
  b.get("coherence.molecule_noise_density", c.molecule_noise_density);
  b.get("coherence.qd_noise_density", c.qd_noise_density);
  b.get("exposure.duration", c.duration);
  b.get("exposure.dark_rate", c.dark_rate);
  b.get("bleach.alpha", c.alpha);
  b.get("bleach.power", c.power);
  b.get("bleach.qd_rate", c.qd_bleach_rate);
  b.get("schedule.read_interval", c.read_interval);
  b.get("schedule.n_reads", c.n_reads);
  b.get("sweep.mean_counts", c.mean_counts);
  b.get("sweep.trials", c.trials);
  b.get("sweep.spectrum_min_hz", c.spectrum_min_hz);
  b.get("sweep.spectrum_max_hz", c.spectrum_max_hz);
  b.get("sweep.spectrum_points", c.spectrum_points);
  b.get("seed.label", c.label_seed);
  b.get("seed.sweep", c.sweep_seed);
  b.finish();
  c.validate();
  config = std::move(c);
}

void set_config_value(RunConfig& config, const std::string& key, const std::string& value) {
  const auto dot = key.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == key.size()) {
    fail(ErrorKind::kInvalidInput, "config key must look like section.key");
  }
  apply_config(config, "[" + key.substr(0, dot) + "]\n" + key.substr(dot + 1) + " = " + value,
               "--set " + key);
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) fail(ErrorKind::kIo, "cannot open config " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str(), path.string());
}

std::string default_config_text() {
  const RunConfig c;
  std::ostringstream os;
  os << "# smqc run configuration\n"
        "# origin tags: [reference] value of the reference experiment,\n"
        "# [calibrated] tuned so the simulator reproduces the reference\n"
        "# behaviour (see README), [choice] implementation default.\n\n";
  os << "[canvas]\n"
     << "width = " << c.canvas.width << "  # [reference] px\n"
     << "height = " << c.canvas.height << "  # [reference] px\n"
     << "extent_um = " << fmt(c.canvas.extent_um) << "  # [reference] field of view edge\n"
     << "font = \"" << c.font.name << "\"  # [choice] bundled 5x7 block font\n"
     << "cell_size = " << c.font.cell_size << "  # [choice] px per font cell\n\n";
  os << "[label]\n"
     << "molecule_count = " << c.molecule_count << "  # [reference] signal molecules in the glyph\n"
     << "qd_count = " << c.qd_count << "  # [reference] interference points over the canvas\n"
     << "radius_min = " << c.radius_min << "  # [reference] spot radius, px\n"
     << "radius_max = " << c.radius_max << "  # [reference] spot radius, px\n"
     << "layer_stack = \"" << to_string(c.layer_stack)
     << "\"  # [reference] disposable | quench_inhibited\n"
     << "charset = \"" << c.charset << "\"  # [choice] single | pairs | all\n\n";
  os << "[emission]\n"
     << "molecule_peak_rate = " << fmt(c.molecule_peak_rate)
     << "  # [calibrated] photons/s at full population\n"
     << "qd_peak_rate = " << fmt(c.qd_peak_rate)
     << "  # [calibrated] hides the glyph in the count image\n"
     << "spot_profile = \"uniform_disk\"  # [choice] uniform_disk | gaussian\n\n";
  os << "[coherence]\n"
     << "pulse_area = " << fmt(c.pulse_area) << "  # [choice] rad, both pulses\n"
     << "inter_pulse_delay = " << fmt(c.inter_pulse_delay) << "  # [choice] s\n"
     << "mod_frequency = " << fmt(c.mod_frequency) << "  # [reference] Hz\n"
     << "molecule_noise_density = " << fmt(c.molecule_noise_density)
     << "  # [choice] 1/s, T2* = 1 ns\n"
     << "qd_noise_density = " << fmt(c.qd_noise_density)
     << "  # [choice] 1/s per axis, T2* = 1 ps\n\n";
  os << "[exposure]\n"
     << "duration = " << fmt(c.duration) << "  # [reference] s per read\n"
     << "dark_rate = " << fmt(c.dark_rate) << "  # [choice] photons/s/px\n\n";
  os << "[bleach]\n"
     << "alpha = " << fmt(c.alpha) << "  # [calibrated] 1/(power s)\n"
     << "power = " << fmt(c.power) << "  # [choice] relative excitation power\n"
     << "qd_rate = " << fmt(c.qd_bleach_rate) << "  # [choice] 1/s\n\n";
  os << "[schedule]\n"
     << "read_interval = " << fmt(c.read_interval)
     << "  # [calibrated] s of illumination between read starts\n"
     << "n_reads = " << c.n_reads << "  # [reference]\n\n";
  os << "[sweep]\n"
     << "mean_counts = [";
  for (std::size_t i = 0; i < c.mean_counts.size(); ++i) {
    os << (i ? ", " : "") << c.mean_counts[i];
  }
  os << "]  # [reference]\n"
     << "trials = " << c.trials << "  # [choice]\n"
     << "spectrum_min_hz = " << fmt(c.spectrum_min_hz) << "  # [choice]\n"
     << "spectrum_max_hz = " << fmt(c.spectrum_max_hz) << "  # [choice]\n"
     << "spectrum_points = " << c.spectrum_points << "  # [choice]\n\n";
  os << "[seed]\n"
     << "label = " << c.label_seed << "\n"
     << "sweep = " << c.sweep_seed << "\n";
  return os.str();
}

}  // namespace smqc
