// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#include "smqc/label_io.hpp"

#include <openssl/sha.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "smqc/error.hpp"

namespace smqc {
namespace {

using json = nlohmann::ordered_json;

json payload(const LabelState& s) {
  json j;
  j["format"] = kLabelFormat;
  j["version"] = kLabelFormatVersion;
  j["glyph_text"] = s.glyph_text;
  j["canvas"] = {{"width", s.canvas.width},
                 {"height", s.canvas.height},
                 {"extent_um", s.canvas.extent_um}};
  j["font"] = {{"name", s.font.name}, {"cell_size", s.font.cell_size}};
  j["mask_area"] = s.mask_area;
  j["layer_stack"] = to_string(s.layer_stack);
  j["read_count"] = s.read_count;
  j["rng_seed"] = s.rng_seed;
  j["illumination_time"] = s.illumination_time;
  j["bleach_model"] = {{"alpha", s.bleach_model.alpha},
                       {"power", s.bleach_model.power},
                       {"qd_rate", s.bleach_model.qd_rate}};
  json emitters = json::array();
  for (const auto& e : s.emitters) {
    emitters.push_back({{"x", e.x},
                        {"y", e.y},
                        {"spot_radius", e.spot_radius},
                        {"kind", to_string(e.kind)},
                        {"peak_rate", e.peak_rate},
                        {"visibility", e.visibility},
                        {"alive", e.alive},
                        {"bleach_susceptible", e.bleach_susceptible}});
  }
  j["emitters"] = std::move(emitters);
  return j;
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    fail(ErrorKind::kValidation, std::string("label file lacks field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    fail(ErrorKind::kValidation, std::string("label field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
  std::string hex;
  hex.reserve(2 * SHA256_DIGEST_LENGTH);
  char buf[3];
  for (unsigned char b : digest) {
    std::snprintf(buf, sizeof(buf), "%02x", b);
    hex += buf;
  }
  return hex;
}

std::string label_to_json(const LabelState& state) {
  json j = payload(state);
  const std::string digest = "sha256:" + sha256_hex(j.dump());
  j["checksum"] = digest;
  return j.dump(1) + "\n";
}

LabelState label_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::kValidation, std::string("label file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail(ErrorKind::kValidation, "label file must hold a JSON object");
  const auto checksum = field<std::string>(j, "checksum");
  j.erase("checksum");
  if (checksum != "sha256:" + sha256_hex(j.dump())) {
    fail(ErrorKind::kValidation, "label checksum mismatch: file was modified");
  }
  if (field<std::string>(j, "format") != kLabelFormat ||
      field<int>(j, "version") != kLabelFormatVersion) {
    fail(ErrorKind::kValidation, "unsupported label format");
  }

  LabelState s;
  try {
    s.glyph_text = field<std::string>(j, "glyph_text");
    const auto& canvas = j.at("canvas");
    s.canvas.width = field<int>(canvas, "width");
    s.canvas.height = field<int>(canvas, "height");
    s.canvas.extent_um = field<double>(canvas, "extent_um");
    const auto& font = j.at("font");
    s.font.name = field<std::string>(font, "name");
    s.font.cell_size = field<int>(font, "cell_size");
    s.mask_area = field<std::size_t>(j, "mask_area");
    s.layer_stack = layer_stack_from_string(field<std::string>(j, "layer_stack"));
    s.read_count = field<int>(j, "read_count");
    s.rng_seed = field<std::uint64_t>(j, "rng_seed");
    s.illumination_time = field<double>(j, "illumination_time");
    const auto& bleach = j.at("bleach_model");
    s.bleach_model.alpha = field<double>(bleach, "alpha");
    s.bleach_model.power = field<double>(bleach, "power");
    s.bleach_model.qd_rate = field<double>(bleach, "qd_rate");
    const auto& emitters = j.at("emitters");
    if (!emitters.is_array()) fail(ErrorKind::kValidation, "emitters must be an array");
    for (const auto& je : emitters) {
      Emitter e;
      e.x = field<int>(je, "x");
      e.y = field<int>(je, "y");
      e.spot_radius = field<int>(je, "spot_radius");
      e.kind = emitter_kind_from_string(field<std::string>(je, "kind"));
      e.peak_rate = field<double>(je, "peak_rate");
      e.visibility = field<double>(je, "visibility");
      e.alive = field<bool>(je, "alive");
      e.bleach_susceptible = field<bool>(je, "bleach_susceptible");
      if (!s.canvas.contains(e.x, e.y) || e.spot_radius < 0 || e.peak_rate < 0.0 ||
          e.visibility < 0.0 || e.visibility > 1.0) {
        fail(ErrorKind::kValidation, "label holds an out-of-range emitter");
      }
      s.emitters.push_back(e);
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::kValidation, std::string("malformed label file: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kValidation) throw;
    fail(ErrorKind::kValidation, e.what());
  }
  if (s.read_count < 0 || s.canvas.width < 1 || s.canvas.height < 1 ||
      s.illumination_time < 0.0) {
    fail(ErrorKind::kValidation, "label holds out-of-range state");
  }
  return s;
}

void save_label(const std::filesystem::path& path, const LabelState& state) {
  const std::string text = label_to_json(state);
  // Write beside the target and rename so a failed write never leaves a
  // half-written label behind.
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) fail(ErrorKind::kIo, "cannot open " + tmp.string() + " for writing");
    os << text;
    if (!os) fail(ErrorKind::kIo, "failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(ErrorKind::kIo, "cannot replace " + path.string() + ": " + ec.message());
}

LabelState load_label(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) fail(ErrorKind::kIo, "cannot open label " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return label_from_json(ss.str());
}

}  // namespace smqc
