// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Unit phasor e^{-2 pi i c} for the per-photon DFT. A 1024-entry table of
// exact roots of unity is combined with short Taylor series on the residual
// angle (< 2 pi / 1024), which keeps the result within a few ulp of
// std::polar at a fraction of the cost of a libm sin/cos pair.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>

namespace smqc::dsp {

namespace detail {

inline constexpr int kTableBits = 10;
inline constexpr int kTableSize = 1 << kTableBits;

struct RootTable {
  std::array<double, kTableSize> cos;
  std::array<double, kTableSize> sin;
};

inline const RootTable& root_table() {
  static const RootTable table = [] {
    RootTable t{};
    for (int k = 0; k < kTableSize; ++k) {
      const double a = 2.0 * std::numbers::pi * k / kTableSize;
      t.cos[k] = std::cos(a);
      t.sin[k] = std::sin(a);
    }
    return t;
  }();
  return table;
}

}  // namespace detail

/// e^{-2 pi i cycles}. Only the fractional part of `cycles` matters.
inline std::complex<double> unit_phasor(double cycles,
                                        const detail::RootTable& table) {
  using namespace detail;
  // Truncating conversion instead of std::floor, which is a libm call on
  // baseline x86-64.
  double whole = static_cast<double>(static_cast<long long>(cycles));
  if (whole > cycles) whole -= 1.0;
  const double frac = cycles - whole;
  const double x = frac * kTableSize;
  int k = static_cast<int>(x);
  if (k >= kTableSize) k = kTableSize - 1;
  const double r = (x - k) * (2.0 * std::numbers::pi / kTableSize);
  const double r2 = r * r;
  const double cr = 1.0 - r2 * (0.5 - r2 * (1.0 / 24.0 - r2 * (1.0 / 720.0)));
  const double sr =
      r * (1.0 - r2 * (1.0 / 6.0 - r2 * (1.0 / 120.0 - r2 * (1.0 / 5040.0))));
  const double c = table.cos[k] * cr - table.sin[k] * sr;
  const double s = table.sin[k] * cr + table.cos[k] * sr;
  return {c, -s};
}

inline std::complex<double> unit_phasor(double cycles) {
  return unit_phasor(cycles, detail::root_table());
}

/// Adds sum_n e^{-2 pi i t_n cycles_per_second} to (re, im).
inline void accumulate_phasors(std::span<const double> times,
                               double cycles_per_second, double& re,
                               double& im) {
  const auto& table = detail::root_table();
  double sr = 0.0;
  double si = 0.0;
  for (double t : times) {
    const auto z = unit_phasor(t * cycles_per_second, table);
    sr += z.real();
    si += z.imag();
  }
  re += sr;
  im += si;
}

}  // namespace smqc::dsp
