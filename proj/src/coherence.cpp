// Copyright 2026 The smqc Authors
// SPDX-License-Identifier: Apache-2.0
#include "smqc/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smqc/error.hpp"

namespace smqc::coherence {
namespace {

constexpr double kPi = std::numbers::pi;

void require_pulse_area(double theta, const char* name) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    fail(ErrorKind::kDomain,
         std::string(name) + " must lie in [0, pi], got " + std::to_string(theta));
  }
}

void require_visibility(double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    fail(ErrorKind::kDomain,
         "visibility must lie in [0, 1], got " + std::to_string(v));
  }
}

}  // namespace

void PulsePairDrive::validate() const {
  require_pulse_area(theta1, "theta1");
  require_pulse_area(theta2, "theta2");
  if (!(mod_frequency > 0.0)) {
    fail(ErrorKind::kDomain, "mod_frequency must be positive");
  }
  if (!(inter_pulse_delay >= 0.0)) {
    fail(ErrorKind::kDomain, "inter_pulse_delay must be non-negative");
  }
}

double relative_phase(double t, const PulsePairDrive& drive) {
  const double cycles = t * drive.mod_frequency;
  return -kPi + 2.0 * kPi * (cycles - std::floor(cycles));
}

double excited_population_general(double theta1, double theta2,
                                  double delta_phi) {
  require_pulse_area(theta1, "theta1");
  require_pulse_area(theta2, "theta2");
  const double p = 0.5 * (1.0 - std::cos(theta1) * std::cos(theta2) +
                          std::sin(theta1) * std::sin(theta2) *
                              std::cos(delta_phi));
  // cos(pi) is not exactly -1 in floating point.
  return std::clamp(p, 0.0, 1.0);
}

double excited_population(double theta, double delta_phi, double visibility) {
  require_pulse_area(theta, "theta");
  require_visibility(visibility);
  const double s = std::sin(theta);
  return 0.5 * s * s * (1.0 + visibility * std::cos(delta_phi));
}

double peak_population(double theta, double visibility) {
  return excited_population(theta, 0.0, visibility);
}

double visibility(double delta_t, double dephasing_time) {
  if (!(dephasing_time > 0.0)) {
    fail(ErrorKind::kDomain, "dephasing time must be positive");
  }
  if (!(delta_t >= 0.0)) {
    fail(ErrorKind::kDomain, "inter-pulse delay must be non-negative");
  }
  return std::exp(-delta_t / dephasing_time);
}

double dephasing_time(const DephasingEnvironment& env) {
  if (!(env.noise_density > 0.0)) {
    fail(ErrorKind::kDomain, "noise density must be positive");
  }
  switch (env.geometry) {
    case DephasingGeometry::kSingleAxis:
      return 1.0 / env.noise_density;
    case DephasingGeometry::kIsotropicThreeAxis:
      return 1.0 / (3.0 * env.noise_density);
  }
  return 0.0;
}

CoherenceParams coherence_for(const DephasingEnvironment& env,
                              const PulsePairDrive& drive) {
  CoherenceParams p;
  p.dephasing_time = dephasing_time(env);
  p.visibility = visibility(drive.inter_pulse_delay, p.dephasing_time);
  return p;
}

}  // namespace smqc::coherence
