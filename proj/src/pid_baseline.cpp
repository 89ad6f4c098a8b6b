#include "resusrl/pid_baseline.hpp"

#include <algorithm>
#include <cmath>

#include "resusrl/errors.hpp"
#include "resusrl/harness.hpp"
#include "resusrl/rng.hpp"

namespace resusrl {

PidStepResult pid_step(const PidGains& gains, const PidState& state,
                       double setpoint_ml, double measurement_ml, double dt_min) {
  if (!(dt_min > 0.0)) {
    throw ControllerFault("pid_step requires dt > 0");
  }
  const double error_l = (setpoint_ml - measurement_ml) / 1000.0;

  PidState next = state;

  // Derivative acts on the measurement so setpoint changes cannot kick the
  // output; a one-pole filter with time constant tau tames measurement noise.
  double slope_l_min = 0.0;
  if (std::isfinite(state.last_measurement_ml)) {
    slope_l_min = (measurement_ml - state.last_measurement_ml) / 1000.0 / dt_min;
  }
  const double tau = gains.derivative_filter_tau_min;
  if (tau > 0.0) {
    next.filtered_derivative_l_min =
        state.filtered_derivative_l_min +
        dt_min / (tau + dt_min) * (slope_l_min - state.filtered_derivative_l_min);
  } else {
    next.filtered_derivative_l_min = slope_l_min;
  }
  next.last_measurement_ml = measurement_ml;

  const double integral_cand = state.integral_l_min + error_l * dt_min;
  const double raw = gains.kp * error_l + gains.ki * integral_cand -
                     gains.kd * next.filtered_derivative_l_min;
  if (!std::isfinite(raw)) {
    throw ControllerFault("non-finite PID output");
  }
  const double dose = std::clamp(raw, kDoseFloorMlKgH, kDoseCeilMlKgH);

  const bool windup_high = raw > kDoseCeilMlKgH && error_l > 0.0;
  const bool windup_low = raw < kDoseFloorMlKgH && error_l < 0.0;
  next.integral_l_min = (windup_high || windup_low) ? state.integral_l_min : integral_cand;

  return {dose, next};
}

TuneResult tune_grid(const ScenarioConfig& scenario,
                     const std::vector<PidGains>& grid, int workers) {
  if (grid.empty()) {
    throw ConfigError("pid.grid", "PID tuning grid must not be empty");
  }

  ScenarioConfig nominal = scenario;
  nominal.noise = NoiseModel{}; // tuning is always noise-free

  TuneResult result;
  result.scores.resize(grid.size());

  parallel_for(grid.size(), workers, [&](std::size_t i) {
    RandomStream rng(derive_seed(scenario.seed, stream::kTuneBase + i));
    const EvalResult run = evaluate(grid[i], nominal, rng);
    double overshoot = 0.0;
    for (const auto& rec : run.log.records) {
      overshoot = std::max(overshoot, rec.bv_true_ml - nominal.bv_target_ml);
    }
    result.scores[i] = {grid[i], run.report.rmse_l, overshoot};
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < result.scores.size(); ++i) {
    const auto& a = result.scores[i];
    const auto& b = result.scores[best];
    const bool better =
        a.rmse_l < b.rmse_l ||
        (a.rmse_l == b.rmse_l && (a.overshoot_ml < b.overshoot_ml ||
                                  (a.overshoot_ml == b.overshoot_ml &&
                                   a.gains.ki < b.gains.ki)));
    if (better) {
      best = i;
    }
  }
  result.best = result.scores[best].gains;
  return result;
}

std::vector<PidGains> default_pid_grid() {
  const double kps[] = {1.0, 3.0, 10.0, 30.0, 100.0};
  const double kis[] = {0.01, 0.03, 0.1, 0.3, 1.0};
  const double kds[] = {0.0, 1.0, 3.0, 10.0};
  std::vector<PidGains> grid;
  grid.reserve(100);
  for (const double kp : kps) {
    for (const double ki : kis) {
      for (const double kd : kds) {
        grid.push_back(PidGains{kp, ki, kd, 1.0});
      }
    }
  }
  return grid;
}

} // namespace resusrl
