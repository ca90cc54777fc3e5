// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
//
// Closed-form physics of a two-level emitter driven by phase-locked pulse
// pairs. Pulses are treated in the impulsive limit: each one is an
// instantaneous rotation of the Bloch vector by its pulse area.
#pragma once

#include <numbers>

namespace smqc::coherence {

struct PulsePairDrive {
  double theta1 = std::numbers::pi / 2;  // rad
  double theta2 = std::numbers::pi / 2;  // rad
  double inter_pulse_delay = 100e-12;    // s
  double mod_frequency = 1000.0;         // Hz, sawtooth repetition rate

  /// Throws Error(kDomain) when a field is out of range.
  void validate() const;
};

struct CoherenceParams {
  double dephasing_time = 1e-9;  // s
  double visibility = 1.0;
};

enum class DephasingGeometry { kSingleAxis, kIsotropicThreeAxis };

/// White-noise environment: every coupled dipole axis sees the same
/// spectral density S (1/s).
struct DephasingEnvironment {
  DephasingGeometry geometry = DephasingGeometry::kSingleAxis;
  double noise_density = 1e9;
};

/// Sawtooth relative phase, -pi at the start of every period.
/// Range is [-pi, pi).
double relative_phase(double t, const PulsePairDrive& drive);

/// Excited-state population after two undamped pulses of areas theta1 and
/// theta2 with relative phase delta_phi.
double excited_population_general(double theta1, double theta2,
                                  double delta_phi);

/// Excited-state population for equal pulse areas with coherence
/// visibility V: 0.5 * sin^2(theta) * (1 + V cos(delta_phi)).
double excited_population(double theta, double delta_phi, double visibility);

/// Largest population reachable over all phases for (theta, V).
double peak_population(double theta, double visibility);

/// V = exp(-delta_t / T2*).
double visibility(double delta_t, double dephasing_time);

/// T2* from the white-noise environment: 1/S for a rigid single-axis
/// dipole, 1/(3S) when three independent axes couple. S is taken as a rate
/// in 1/s so that 1/S is a time.
double dephasing_time(const DephasingEnvironment& env);

/// Convenience bundle of dephasing_time() and visibility() for a drive.
CoherenceParams coherence_for(const DephasingEnvironment& env,
                              const PulsePairDrive& drive);

}  // namespace smqc::coherence
