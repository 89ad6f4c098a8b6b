#include "resusrl/scenario.hpp"

#include <cmath>
#include <cstdio>

#include "resusrl/errors.hpp"

namespace resusrl {

long ScenarioConfig::control_steps() const {
  return std::lround(duration_min / control_period_min);
}

double ScenarioConfig::loss_rate_at(double t_min) const {
  for (const auto& seg : hemorrhage) {
    if (t_min >= seg.start_min && t_min < seg.end_min) {
      return seg.rate_ml_min;
    }
  }
  return 0.0;
}

std::string ScenarioConfig::fingerprint() const {
  char buf[320];
  const char* noise_tag = noise.kind == NoiseKind::uniform ? "uniform" : "none";
  const double noise_amp = noise.kind == NoiseKind::uniform ? noise.amplitude_ml : 0.0;
  double hem_total = 0.0;
  for (const auto& seg : hemorrhage) {
    hem_total += (seg.end_min - seg.start_min) * seg.rate_ml_min;
  }
  std::snprintf(buf, sizeof(buf),
                "bvi=%.6g;tgt=%.6g;dur=%.6g;T=%.6g;alpha=%.6g;k=%.6g;w=%.6g;"
                "noise=%s:%.6g;hem_n=%zu;hem_ml=%.6g;seed=%llu",
                bv_initial_ml, bv_target_ml, duration_min, control_period_min,
                patient.alpha, patient.k_per_min, patient.weight_kg, noise_tag,
                noise_amp, hemorrhage.size(), hem_total,
                static_cast<unsigned long long>(seed));
  return buf;
}

void ScenarioConfig::validate() const {
  if (!(bv_initial_ml > 0.0)) {
    throw ConfigError("scenario.bv_initial_ml", "scenario.bv_initial_ml must be > 0");
  }
  if (!(bv_target_ml > 0.0)) {
    throw ConfigError("scenario.bv_target_ml", "scenario.bv_target_ml must be > 0");
  }
  if (!(duration_min > 0.0)) {
    throw ConfigError("scenario.duration_min", "scenario.duration_min must be > 0");
  }
  if (!(control_period_min > 0.0)) {
    throw ConfigError("scenario.control_period_min",
                      "scenario.control_period_min must be > 0");
  }
  const double steps = duration_min / control_period_min;
  if (std::fabs(steps - std::round(steps)) > 1e-9 || steps < 0.5) {
    throw ConfigError("scenario.duration_min",
                      "scenario.duration_min must be an integer multiple of "
                      "scenario.control_period_min");
  }
  if (!(patient.alpha > 0.0)) {
    throw ConfigError("patient.alpha", "patient.alpha must be > 0");
  }
  if (!(patient.k_per_min > 0.0)) {
    throw ConfigError("patient.k_per_min", "patient.k_per_min must be > 0");
  }
  if (!(patient.weight_kg > 0.0)) {
    throw ConfigError("patient.weight_kg", "patient.weight_kg must be > 0");
  }
  if (noise.amplitude_ml < 0.0) {
    throw ConfigError("scenario.noise_amplitude_ml",
                      "scenario.noise_amplitude_ml must be >= 0");
  }
  for (std::size_t i = 0; i < hemorrhage.size(); ++i) {
    const auto& seg = hemorrhage[i];
    if (!(seg.start_min >= 0.0) || !(seg.end_min <= duration_min) ||
        !(seg.start_min < seg.end_min)) {
      throw ConfigError("scenario.hemorrhage",
                        "hemorrhage segments must satisfy 0 <= start < end <= duration");
    }
    if (seg.rate_ml_min < 0.0) {
      throw ConfigError("scenario.hemorrhage", "hemorrhage rates must be >= 0");
    }
    for (std::size_t j = i + 1; j < hemorrhage.size(); ++j) {
      const auto& other = hemorrhage[j];
      if (seg.start_min < other.end_min && other.start_min < seg.end_min) {
        throw ConfigError("scenario.hemorrhage", "hemorrhage segments must not overlap");
      }
    }
  }
}

} // namespace resusrl
