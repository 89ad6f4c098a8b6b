#pragma once

#include <functional>
#include <string>
#include <vector>

#include "resusrl/metrics.hpp"
#include "resusrl/pid_baseline.hpp"
#include "resusrl/rl_agent.hpp"
#include "resusrl/scenario.hpp"

namespace resusrl {

struct TrainingConfig {
  long episodes = 30000;
  LearningParams learning{};
  double init_bv_min_ml = 2800.0;
  double init_bv_max_ml = 6200.0;
  long max_steps_per_episode = 100;

  // Throws ConfigError naming the offending key. The initial-volume range
  // must span every error state on both sides of the target.
  void validate(double bv_target_ml) const;
};

struct StepRecord {
  double t_min = 0.0;
  double bv_true_ml = 0.0;
  double bv_measured_ml = 0.0;
  int state_id = 0;
  int action_idx = -1; // -1 for continuous (PID) doses
  double dose_ml_kg_h = 0.0;
  double u_ml_min = 0.0;
  double reward = 0.0;
};

struct EpisodeLog {
  std::vector<StepRecord> records;
  bool terminal = false; // training run ended inside the target band
  long episode_index = 0;
  double control_period_min = 1.0;
  double bv_target_ml = 5000.0;
  std::string scenario_id;
};

enum class RunMode { train, eval };

// Unit bridge between dose commands (mL/kg/h) and infusion rates (mL/min).
double dose_to_rate(double dose_ml_kg_h, double weight_kg);

// Closed-loop episode with the tabular agent. In train mode the table is
// updated in place, noise is disabled, and the run stops once a
// post-transition state lands in the target band (every episode takes at
// least one action); eval mode freezes the table, follows the greedy
// policy, and always runs the full horizon.
EpisodeLog run_episode_rl(const ScenarioConfig& scenario, QTable& q,
                          const LearningParams& learning, RunMode mode,
                          long episode_index, long max_steps, RandomStream& rng);

// Closed-loop episode with the PID baseline; always runs the full horizon.
EpisodeLog run_episode_pid(const ScenarioConfig& scenario, const PidGains& gains,
                           RandomStream& rng);

struct TrainResult {
  QTable q;
  std::vector<int> unvisited_states; // state ids with zero total visits
};

// Runs config.episodes training episodes on copies of the template whose
// initial volume is drawn uniformly from the configured range (one draw per
// episode). Warns on stderr about states that were never updated. After
// every episode the table is checked against the discounted-sum value bound.
TrainResult train(const TrainingConfig& config,
                  const ScenarioConfig& scenario_template, RandomStream& rng);

struct EvalResult {
  EpisodeLog log;
  MetricsReport report;
};

// Full-horizon evaluation; metrics cover every control-step sample of the
// achieved (true) volume.
EvalResult evaluate(const QTable& q, const ScenarioConfig& scenario,
                    RandomStream& rng);
EvalResult evaluate(const PidGains& gains, const ScenarioConfig& scenario,
                    RandomStream& rng);

MetricsReport metrics_from_log(const EpisodeLog& log);

// Side-by-side metric rows; deltas are rl minus pid.
struct Comparison {
  std::string scenario_id;
  MetricsReport rl;
  MetricsReport pid;
  double mdpe_delta_pct = 0.0;
  double mdape_delta_pct = 0.0;
  double rmse_delta_l = 0.0;
};

// Throws ComparisonError when the reports come from different scenarios.
Comparison compare(const MetricsReport& rl_report, const MetricsReport& pid_report);

// Percentage of control steps whose commanded dose matches exactly.
// Throws ComparisonError when the traces have different lengths.
double dose_agreement_pct(const EpisodeLog& a, const EpisodeLog& b);

// Deterministic fan-out: body(i) runs once per index, results must be
// written by index, so the outcome is identical for any worker count.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& body);

} // namespace resusrl
