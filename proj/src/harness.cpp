#include "resusrl/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "resusrl/errors.hpp"

namespace resusrl {

void TrainingConfig::validate(double bv_target_ml) const {
  if (episodes < 1) {
    throw ConfigError("training.episodes", "training.episodes must be >= 1");
  }
  if (!(learning.gamma >= 0.0) || !(learning.gamma < 1.0)) {
    throw ConfigError("training.gamma", "training.gamma must lie in [0, 1)");
  }
  if (!(learning.epsilon >= 0.0) || !(learning.epsilon <= 1.0)) {
    throw ConfigError("training.epsilon", "training.epsilon must lie in [0, 1]");
  }
  if (!(learning.mu0 > 0.0) || !(learning.mu0 < 1.0)) {
    throw ConfigError("training.mu0", "training.mu0 must lie in (0, 1)");
  }
  if (learning.mu_half_every < 1) {
    throw ConfigError("training.mu_half_every", "training.mu_half_every must be >= 1");
  }
  if (!(init_bv_min_ml > 0.0) || !(init_bv_min_ml < init_bv_max_ml)) {
    throw ConfigError("training.init_bv_min_ml",
                      "training initial-volume range must satisfy 0 < min < max");
  }
  // The range has to reach past the outermost bin edges (2.0 L below the
  // target, 1.1 L above) or some states can never be sampled.
  if (!(init_bv_min_ml < bv_target_ml - 2000.0)) {
    throw ConfigError("training.init_bv_min_ml",
                      "training.init_bv_min_ml must lie below target - 2000 mL "
                      "to reach every error state");
  }
  if (!(init_bv_max_ml > bv_target_ml + 1100.0)) {
    throw ConfigError("training.init_bv_max_ml",
                      "training.init_bv_max_ml must lie above target + 1100 mL "
                      "to reach every error state");
  }
  if (max_steps_per_episode < 1) {
    throw ConfigError("training.max_steps_per_episode",
                      "training.max_steps_per_episode must be >= 1");
  }
}

double dose_to_rate(double dose_ml_kg_h, double weight_kg) {
  return dose_ml_kg_h * weight_kg / 60.0;
}

namespace {

// Advance the plant across one control period with the infusion rate held
// constant, splitting the period at hemorrhage segment edges so the loss
// rate is exact piecewise-constant.
void advance_control_period(const ScenarioConfig& scenario, const PatientParams& params,
                            HemoState& state, double u_ml_min) {
  const double t_end = state.t_min + scenario.control_period_min;
  while (state.t_min < t_end - 1e-12) {
    double boundary = t_end;
    for (const auto& seg : scenario.hemorrhage) {
      if (seg.start_min > state.t_min + 1e-12 && seg.start_min < boundary) {
        boundary = seg.start_min;
      }
      if (seg.end_min > state.t_min + 1e-12 && seg.end_min < boundary) {
        boundary = seg.end_min;
      }
    }
    const FlowInputs inputs{u_ml_min, scenario.loss_rate_at(state.t_min)};
    state = advance_held(params, state, inputs, boundary - state.t_min);
  }
}

PatientParams anchored_patient(const ScenarioConfig& scenario) {
  PatientParams p = scenario.patient;
  p.v_b0_ml = scenario.bv_initial_ml;
  if (!p.valid()) {
    throw ConfigError("patient", "invalid patient parameters");
  }
  return p;
}

// Shared closed-loop skeleton. decide(k, bv_measured) returns the dose and
// fills the record's state/action fields; on_transition is the training hook.
template <typename DecideFn, typename TransitionFn>
EpisodeLog run_loop(const ScenarioConfig& scenario, const NoiseModel& noise,
                    long steps, bool stop_at_target, long episode_index,
                    RandomStream& rng, DecideFn&& decide,
                    TransitionFn&& on_transition) {
  const PatientParams params = anchored_patient(scenario);
  HemoState state{};

  EpisodeLog log;
  log.episode_index = episode_index;
  log.control_period_min = scenario.control_period_min;
  log.bv_target_ml = scenario.bv_target_ml;
  log.scenario_id = scenario.fingerprint();

  double bv_true = blood_volume(params, state);
  double bv_measured = measure(bv_true, noise, rng);

  for (long k = 0; k < steps; ++k) {
    const StateId s = discretize(bv_measured, scenario.bv_target_ml);
    if (stop_at_target && k > 0 && s.at_target()) {
      log.terminal = true;
      break;
    }

    StepRecord rec;
    rec.t_min = state.t_min;
    rec.bv_true_ml = bv_true;
    rec.bv_measured_ml = bv_measured;
    rec.state_id = s.id;
    rec.dose_ml_kg_h = decide(s, bv_measured, rec.action_idx);
    rec.u_ml_min = dose_to_rate(rec.dose_ml_kg_h, params.weight_kg);

    advance_control_period(scenario, params, state, rec.u_ml_min);
    const double bv_true_next = blood_volume(params, state);
    if (!(bv_true_next > 0.0)) {
      throw SimulationFault("blood volume left the physical range");
    }
    const double bv_measured_next = measure(bv_true_next, noise, rng);

    const double e_k = std::fabs(bv_measured - scenario.bv_target_ml) / 1000.0;
    const double e_k1 = std::fabs(bv_measured_next - scenario.bv_target_ml) / 1000.0;
    rec.reward = reward(e_k, e_k1);

    on_transition(s, rec.action_idx, rec.reward,
                  discretize(bv_measured_next, scenario.bv_target_ml));

    log.records.push_back(rec);
    bv_true = bv_true_next;
    bv_measured = bv_measured_next;
  }
  return log;
}

} // namespace

EpisodeLog run_episode_rl(const ScenarioConfig& scenario, QTable& q,
                          const LearningParams& learning, RunMode mode,
                          long episode_index, long max_steps, RandomStream& rng) {
  const bool training = mode == RunMode::train;
  const NoiseModel noise = training ? NoiseModel{} : scenario.noise;
  const long steps = training ? max_steps : scenario.control_steps();
  const double mu = mu_at(episode_index, learning);

  return run_loop(
      scenario, noise, steps, training, episode_index, rng,
      [&](const StateId& s, double, int& action_idx) {
        action_idx = training ? select_action(q, s, learning.epsilon, rng)
                              : greedy_action(q, s);
        return kDoseActions[action_idx];
      },
      [&](const StateId& s, int action_idx, double r, const StateId& s_next) {
        if (training) {
          q_update(q, s, action_idx, r, s_next, learning.gamma, mu);
        }
      });
}

EpisodeLog run_episode_pid(const ScenarioConfig& scenario, const PidGains& gains,
                           RandomStream& rng) {
  PidState pid;
  return run_loop(
      scenario, scenario.noise, scenario.control_steps(), false, 0, rng,
      [&](const StateId&, double bv_measured, int& action_idx) {
        action_idx = -1;
        const PidStepResult step = pid_step(gains, pid, scenario.bv_target_ml,
                                            bv_measured, scenario.control_period_min);
        pid = step.state;
        return step.dose_ml_kg_h;
      },
      [](const StateId&, int, double, const StateId&) {});
}

TrainResult train(const TrainingConfig& config,
                  const ScenarioConfig& scenario_template, RandomStream& rng) {
  TrainResult result;
  // Rewards sit in [0, 1] and the discount never exceeds mu0, so values
  // must stay within the discounted-sum bound for the whole run.
  const double value_bound = 1.0 / (1.0 - config.learning.mu0);

  for (long ep = 0; ep < config.episodes; ++ep) {
    ScenarioConfig scenario = scenario_template;
    scenario.bv_initial_ml = rng.uniform(config.init_bv_min_ml, config.init_bv_max_ml);
    run_episode_rl(scenario, result.q, config.learning, RunMode::train, ep,
                   config.max_steps_per_episode, rng);

    for (const auto& row : result.q.values) {
      for (const double v : row) {
        if (!std::isfinite(v) || v < -1e-12 || v > value_bound + 1e-9) {
          throw TrainingFault("Q-value left the [0, 1/(1-mu0)] bound during training");
        }
      }
    }
  }

  for (int row = 0; row < kNumStates; ++row) {
    if (result.q.row_visits(row) == 0) {
      result.unvisited_states.push_back(row + 1);
    }
  }
  if (!result.unvisited_states.empty()) {
    std::fprintf(stderr, "warning: states never visited during training:");
    for (const int id : result.unvisited_states) {
      std::fprintf(stderr, " %d", id);
    }
    std::fprintf(stderr, "\n");
  }
  return result;
}

MetricsReport metrics_from_log(const EpisodeLog& log) {
  std::vector<double> bv_series;
  bv_series.reserve(log.records.size());
  for (const auto& rec : log.records) {
    bv_series.push_back(rec.bv_true_ml);
  }
  return compute_metrics(bv_series, log.bv_target_ml, log.scenario_id);
}

EvalResult evaluate(const QTable& q, const ScenarioConfig& scenario,
                    RandomStream& rng) {
  QTable frozen = q;
  LearningParams unused;
  EpisodeLog log = run_episode_rl(scenario, frozen, unused, RunMode::eval, 0,
                                  scenario.control_steps(), rng);
  MetricsReport report = metrics_from_log(log);
  return {std::move(log), std::move(report)};
}

EvalResult evaluate(const PidGains& gains, const ScenarioConfig& scenario,
                    RandomStream& rng) {
  EpisodeLog log = run_episode_pid(scenario, gains, rng);
  MetricsReport report = metrics_from_log(log);
  return {std::move(log), std::move(report)};
}

Comparison compare(const MetricsReport& rl_report, const MetricsReport& pid_report) {
  if (rl_report.scenario_id != pid_report.scenario_id) {
    throw ComparisonError("reports come from different scenarios: '" +
                          rl_report.scenario_id + "' vs '" +
                          pid_report.scenario_id + "'");
  }
  Comparison c;
  c.scenario_id = rl_report.scenario_id;
  c.rl = rl_report;
  c.pid = pid_report;
  c.mdpe_delta_pct = rl_report.mdpe_pct - pid_report.mdpe_pct;
  c.mdape_delta_pct = rl_report.mdape_pct - pid_report.mdape_pct;
  c.rmse_delta_l = rl_report.rmse_l - pid_report.rmse_l;
  return c;
}

double dose_agreement_pct(const EpisodeLog& a, const EpisodeLog& b) {
  if (a.records.size() != b.records.size() || a.records.empty()) {
    throw ComparisonError("dose traces must be non-empty and equally long");
  }
  std::size_t matches = 0;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    if (a.records[i].dose_ml_kg_h == b.records[i].dose_ml_kg_h) {
      ++matches;
    }
  }
  return 100.0 * static_cast<double>(matches) / static_cast<double>(a.records.size());
}

void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& body) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int n_threads = std::min<std::size_t>(workers, count);
  pool.reserve(n_threads);
  for (int t = 0; t < n_threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        body(i);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
}

} // namespace resusrl
