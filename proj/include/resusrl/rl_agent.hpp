#pragma once

#include <array>
#include <cstdint>

#include "resusrl/rng.hpp"

namespace resusrl {

// Infusion dose choices in mL/kg/h, lowest first.
inline constexpr std::array<double, 6> kDoseActions{0.0, 5.0, 10.0, 15.0, 20.0, 25.0};
inline constexpr int kNumActions = 6;
inline constexpr int kNumStates = 18;

// Discrete volume-error state. Ids 1-10 cover signed error < 0 (volume
// below target), 11-18 signed error >= 0; within each side the bins widen
// away from the target. Ids 1 and 11 are the sub-10-mL band around it.
struct StateId {
  int id = 11;

  int row() const { return id - 1; }
  bool below_target() const { return id <= 10; }
  bool at_target() const { return id == 1 || id == 11; }
};

// Action-value table. Values start at zero; visit counts only increment.
struct QTable {
  std::array<std::array<double, kNumActions>, kNumStates> values{};
  std::array<std::array<std::uint64_t, kNumActions>, kNumStates> visit_counts{};

  double max_value(const StateId& s) const {
    const auto& row = values[s.row()];
    double best = row[0];
    for (int a = 1; a < kNumActions; ++a) {
      if (row[a] > best) {
        best = row[a];
      }
    }
    return best;
  }

  std::uint64_t row_visits(int row) const {
    std::uint64_t total = 0;
    for (int a = 0; a < kNumActions; ++a) {
      total += visit_counts[row][a];
    }
    return total;
  }
};

struct LearningParams {
  double gamma = 0.69;       // blend weight between old value and new target
  double epsilon = 0.5;      // exploration probability
  double mu0 = 0.2;          // initial discount on the bootstrap term
  long mu_half_every = 1000; // episodes per discount halving
};

// Map a measured volume against the target into exactly one of the 18
// states. Zero error lands on the non-negative side (state 11).
StateId discretize(double bv_measured_ml, double bv_target_ml);

// Fractional error improvement in [0, 1]; zero when the error did not
// shrink. The no-improvement branch is taken before any division, so a
// zero previous error is safe.
double reward(double e_k_l, double e_k1_l);

// Blended value update; touches exactly the (s, action) cell and bumps its
// visit count. Throws TrainingFault on a non-finite result.
void q_update(QTable& q, const StateId& s, int action, double r,
              const StateId& s_next, double gamma, double mu);

// Epsilon-greedy: one draw decides explore-vs-exploit; exploring consumes a
// second draw for the action index, exploiting consumes nothing further.
int select_action(const QTable& q, const StateId& s, double epsilon,
                  RandomStream& rng);

// Argmax over the state's row; ties go to the lowest dose index.
int greedy_action(const QTable& q, const StateId& s);

// Discount in effect for the given zero-based episode index: mu0 halved
// once per mu_half_every finished episodes.
double mu_at(long episode, const LearningParams& params);

} // namespace resusrl
