// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Label files: JSON with every LabelState field and a SHA-256 checksum over
// the canonical (compact) dump of everything else. A file whose checksum
// does not match is rejected as tampered.
#pragma once

#include <filesystem>
#include <string>

#include "smqc/label.hpp"

namespace smqc {

inline constexpr const char* kLabelFormat = "smqc-label";
inline constexpr int kLabelFormatVersion = 1;

std::string label_to_json(const LabelState& state);
/// Throws Error(kValidation) on schema errors or a checksum mismatch.
LabelState label_from_json(const std::string& text);

void save_label(const std::filesystem::path& path, const LabelState& state);
LabelState load_label(const std::filesystem::path& path);

/// Lower-case hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace smqc
