#pragma once

#include "resusrl/rng.hpp"

namespace resusrl {

// Physiological constants of the two-compartment blood-volume response.
struct PatientParams {
  double v_b0_ml = 3940.0; // rest-point blood volume
  double alpha = 0.5;      // extravascular/intravascular shift ratio
  double k_per_min = 0.1;  // fluid-shift rate between compartments
  double weight_kg = 70.0; // converts mL/kg/h doses to mL/min

  bool valid() const {
    return v_b0_ml > 0.0 && alpha > 0.0 && k_per_min > 0.0 && weight_kg > 0.0;
  }
};

// Internal state of the volume response. z2 tracks fluid in transit
// between compartments (mL), z1 is its running integral (mL*min).
// z1 = z2 = 0 is the rest state: BV == v_b0 with zero slope, so a run
// started from {} begins in equilibrium at the anchor volume.
struct HemoState {
  double z1 = 0.0;
  double z2 = 0.0;
  double t_min = 0.0;
};

struct FlowInputs {
  double infusion_ml_min = 0.0; // u, fluid gain
  double loss_ml_min = 0.0;     // v, hemorrhage
};

enum class NoiseKind { none, uniform };

// Bounded observational error on the volume measurement.
struct NoiseModel {
  NoiseKind kind = NoiseKind::none;
  double amplitude_ml = 0.0;
};

struct HemoDerivatives {
  double dz1 = 0.0;
  double dz2 = 0.0;
};

// Integration grain. One control period is split into substeps no longer
// than this; well below the error floor for the slow pole of this plant.
inline constexpr double kInternalDtMin = 0.1;

// Exact time derivatives of (z1, z2) under the held inputs. Pure.
HemoDerivatives derivatives(const PatientParams& params, const HemoState& state,
                            const FlowInputs& inputs);

// One classical RK4 step of length dt_min with inputs held constant.
// Throws SimulationFault if the next state is non-finite.
HemoState step_rk4(const PatientParams& params, const HemoState& state,
                   const FlowInputs& inputs, double dt_min);

// Advance by span_min holding the inputs constant, splitting the span into
// RK4 substeps no longer than max_dt_min.
HemoState advance_held(const PatientParams& params, HemoState state,
                       const FlowInputs& inputs, double span_min,
                       double max_dt_min = kInternalDtMin);

// Absolute blood volume in mL for the given state.
double blood_volume(const PatientParams& params, const HemoState& state);

// Observed volume. kind == uniform adds one draw from [-A, +A); kind == none
// returns the input unchanged and consumes nothing from the stream.
double measure(double bv_true_ml, const NoiseModel& noise, RandomStream& rng);

} // namespace resusrl
