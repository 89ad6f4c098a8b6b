#pragma once

#include <limits>
#include <vector>

#include "resusrl/scenario.hpp"

namespace resusrl {

// Dose saturation shared with the discrete action set.
inline constexpr double kDoseFloorMlKgH = 0.0;
inline constexpr double kDoseCeilMlKgH = 25.0;

// Gains act on errors in liters and emit doses in mL/kg/h.
struct PidGains {
  double kp = 0.0;
  double ki = 0.0;
  double kd = 0.0;
  double derivative_filter_tau_min = 1.0;

  bool valid() const {
    return kp >= 0.0 && ki >= 0.0 && kd >= 0.0 && derivative_filter_tau_min >= 0.0;
  }
};

// Controller memory between steps. last_measurement_ml stays NaN until the
// first step seeds it; the first derivative is then zero.
struct PidState {
  double integral_l_min = 0.0;
  double last_measurement_ml = std::numeric_limits<double>::quiet_NaN();
  double filtered_derivative_l_min = 0.0;
};

struct PidStepResult {
  double dose_ml_kg_h = 0.0;
  PidState state;
};

// One control update: saturated PID with the derivative taken on the
// (low-pass filtered) measurement and clamping anti-windup — the integral
// is frozen whenever the raw output exceeds the active bound in the same
// direction as the current error. Throws ControllerFault on a non-finite
// output.
PidStepResult pid_step(const PidGains& gains, const PidState& state,
                       double setpoint_ml, double measurement_ml, double dt_min);

struct PidCandidateScore {
  PidGains gains;
  double rmse_l = 0.0;
  double overshoot_ml = 0.0; // peak of BV above target, floored at zero
};

struct TuneResult {
  PidGains best;
  std::vector<PidCandidateScore> scores; // grid order
};

// Score every candidate on the noise-free version of the scenario and keep
// the lowest RMSE; exact ties fall back to lower overshoot, then lower ki.
// Throws ConfigError on an empty grid. Deterministic for any worker count.
TuneResult tune_grid(const ScenarioConfig& scenario,
                     const std::vector<PidGains>& grid, int workers = 1);

// Logarithmic default grid: kp {1,3,10,30,100} x ki {0.01,0.03,0.1,0.3,1}
// x kd {0,1,3,10}, derivative filter tau 1 min.
std::vector<PidGains> default_pid_grid();

} // namespace resusrl
