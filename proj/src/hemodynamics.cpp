#include "resusrl/hemodynamics.hpp"

#include <cmath>

#include "resusrl/errors.hpp"

namespace resusrl {

HemoDerivatives derivatives(const PatientParams& params, const HemoState& state,
                            const FlowInputs& inputs) {
  const double w = inputs.infusion_ml_min - inputs.loss_ml_min;
  return {state.z2, -params.k_per_min * state.z2 + w};
}

HemoState step_rk4(const PatientParams& params, const HemoState& state,
                   const FlowInputs& inputs, double dt_min) {
  const auto eval = [&](double z1, double z2) {
    return derivatives(params, HemoState{z1, z2, state.t_min}, inputs);
  };

  const HemoDerivatives k1 = eval(state.z1, state.z2);
  const HemoDerivatives k2 =
      eval(state.z1 + 0.5 * dt_min * k1.dz1, state.z2 + 0.5 * dt_min * k1.dz2);
  const HemoDerivatives k3 =
      eval(state.z1 + 0.5 * dt_min * k2.dz1, state.z2 + 0.5 * dt_min * k2.dz2);
  const HemoDerivatives k4 =
      eval(state.z1 + dt_min * k3.dz1, state.z2 + dt_min * k3.dz2);

  HemoState next;
  next.z1 = state.z1 + dt_min / 6.0 * (k1.dz1 + 2.0 * k2.dz1 + 2.0 * k3.dz1 + k4.dz1);
  next.z2 = state.z2 + dt_min / 6.0 * (k1.dz2 + 2.0 * k2.dz2 + 2.0 * k3.dz2 + k4.dz2);
  next.t_min = state.t_min + dt_min;

  if (!std::isfinite(next.z1) || !std::isfinite(next.z2)) {
    throw SimulationFault("non-finite hemodynamic state after integration step");
  }
  return next;
}

HemoState advance_held(const PatientParams& params, HemoState state,
                       const FlowInputs& inputs, double span_min,
                       double max_dt_min) {
  if (span_min <= 0.0) {
    return state;
  }
  int substeps = static_cast<int>(std::ceil(span_min / max_dt_min - 1e-9));
  if (substeps < 1) {
    substeps = 1;
  }
  const double dt = span_min / substeps;
  for (int i = 0; i < substeps; ++i) {
    state = step_rk4(params, state, inputs, dt);
  }
  return state;
}

double blood_volume(const PatientParams& params, const HemoState& state) {
  // Output map of the realization: BV = v_b0 * (1 + c1*z1 + c2*z2).
  const double c1 = params.k_per_min / (params.v_b0_ml * (1.0 + params.alpha));
  const double c2 = 1.0 / params.v_b0_ml;
  return params.v_b0_ml * (1.0 + c1 * state.z1 + c2 * state.z2);
}

double measure(double bv_true_ml, const NoiseModel& noise, RandomStream& rng) {
  if (noise.kind == NoiseKind::none) {
    return bv_true_ml;
  }
  const double a = noise.amplitude_ml;
  return bv_true_ml + rng.uniform(-a, a);
}

} // namespace resusrl
