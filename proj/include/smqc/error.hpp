// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace smqc {

/// Failure categories shared by the C++ core and the C API status codes.
enum class ErrorKind {
  kDomain,        // argument outside its physical range
  kInvalidInput,  // malformed request (bad glyph, empty mask, ...)
  kIo,            // file could not be read or written
  kValidation,    // corrupt or tampered file
  kNonConvergence,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace smqc
