#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resusrl/hemodynamics.hpp"

namespace resusrl {

// Constant-rate blood loss over [start, end).
struct HemorrhageSegment {
  double start_min = 0.0;
  double end_min = 0.0;
  double rate_ml_min = 0.0;
};

// One closed-loop experiment. The patient's v_b0_ml is re-anchored to
// bv_initial_ml when a run starts, so every run begins in equilibrium at
// its initial volume.
struct ScenarioConfig {
  double bv_initial_ml = 3940.0;
  double bv_target_ml = 5000.0;
  double duration_min = 100.0;
  double control_period_min = 1.0;
  PatientParams patient{};
  NoiseModel noise{};
  std::vector<HemorrhageSegment> hemorrhage;
  std::uint64_t seed = 42;

  long control_steps() const;

  // Loss rate active at time t (segments are half-open on the right).
  double loss_rate_at(double t_min) const;

  // Identity string; reports from the same scenario carry equal values.
  std::string fingerprint() const;

  // Throws ConfigError naming the offending key.
  void validate() const;
};

} // namespace resusrl
