#include "resusrl/rl_agent.hpp"

#include <cmath>

#include "resusrl/errors.hpp"

namespace resusrl {

namespace {

// Bin edges in liters, shared by both error signs. The negative side uses
// all nine edges (states 1-10), the positive side the first seven
// (states 11-18, last bin open-ended from 1.1 L).
constexpr std::array<double, 9> kBinEdgesL{0.01, 0.03, 0.06, 0.150, 0.400,
                                           0.700, 1.100, 1.500, 2.000};

int bin_index(double e_l, int edges_used) {
  int b = 0;
  while (b < edges_used && e_l >= kBinEdgesL[b]) {
    ++b;
  }
  return b;
}

} // namespace

StateId discretize(double bv_measured_ml, double bv_target_ml) {
  const double d_l = (bv_measured_ml - bv_target_ml) / 1000.0;
  if (d_l < 0.0) {
    return StateId{1 + bin_index(-d_l, 9)};
  }
  return StateId{11 + bin_index(d_l, 7)};
}

double reward(double e_k_l, double e_k1_l) {
  if (e_k1_l < e_k_l) {
    return (e_k_l - e_k1_l) / e_k_l;
  }
  return 0.0;
}

void q_update(QTable& q, const StateId& s, int action, double r,
              const StateId& s_next, double gamma, double mu) {
  double& cell = q.values[s.row()][action];
  const double target = r + mu * q.max_value(s_next);
  const double updated = (1.0 - gamma) * cell + gamma * target;
  if (!std::isfinite(updated)) {
    throw TrainingFault("non-finite Q-value in update");
  }
  cell = updated;
  q.visit_counts[s.row()][action] += 1;
}

int select_action(const QTable& q, const StateId& s, double epsilon,
                  RandomStream& rng) {
  const double branch = rng.uniform01();
  if (branch < epsilon) {
    return rng.uniform_int(kNumActions);
  }
  return greedy_action(q, s);
}

int greedy_action(const QTable& q, const StateId& s) {
  const auto& row = q.values[s.row()];
  int best = 0;
  for (int a = 1; a < kNumActions; ++a) {
    if (row[a] > row[best]) {
      best = a;
    }
  }
  return best;
}

double mu_at(long episode, const LearningParams& params) {
  const long halvings = episode / params.mu_half_every;
  return std::ldexp(params.mu0, -static_cast<int>(halvings));
}

} // namespace resusrl
