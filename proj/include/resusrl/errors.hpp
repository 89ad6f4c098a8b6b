#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace resusrl {

// Non-finite or impossible plant state during integration.
struct SimulationFault : std::runtime_error {
  explicit SimulationFault(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite Q-value or violated value bound while learning.
struct TrainingFault : std::runtime_error {
  explicit TrainingFault(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite PID output.
struct ControllerFault : std::runtime_error {
  explicit ControllerFault(const std::string& what) : std::runtime_error(what) {}
};

// Invalid or inconsistent configuration; `key` names the offending entry.
struct ConfigError : std::runtime_error {
  ConfigError(std::string key_, const std::string& what)
      : std::runtime_error(what), key(std::move(key_)) {}
  std::string key;
};

struct ConfigFileMissing : std::runtime_error {
  explicit ConfigFileMissing(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigParseError : std::runtime_error {
  explicit ConfigParseError(const std::string& what) : std::runtime_error(what) {}
};

struct MetricsError : std::runtime_error {
  explicit MetricsError(const std::string& what) : std::runtime_error(what) {}
};

struct ComparisonError : std::runtime_error {
  explicit ComparisonError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace resusrl
