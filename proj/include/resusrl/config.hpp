#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resusrl/harness.hpp"
#include "resusrl/pid_baseline.hpp"
#include "resusrl/scenario.hpp"

namespace resusrl {

// Flat view of a TOML document: "section.key" -> typed scalar or numeric
// array. Supports the subset this tool needs: [section] headers, string /
// bool / number scalars, arrays of numbers, and # comments.
class TomlTable {
public:
  // Throws ConfigFileMissing / ConfigParseError.
  static TomlTable parse_file(const std::string& path);
  static TomlTable parse_string(const std::string& text, const std::string& origin = "<string>");

  bool has(const std::string& key) const;

  // Typed getters; a present key of the wrong type throws ConfigError.
  // Reading a key marks it consumed for unknown-key detection.
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::vector<double> get_double_array(const std::string& key) const;

  // Keys present in the document but never read.
  std::vector<std::string> unconsumed_keys() const;

private:
  enum class Kind { number, integer, boolean, string, number_array };
  struct Value {
    Kind kind;
    double num = 0.0;
    long long int_num = 0;
    bool boolean = false;
    std::string str;
    std::vector<double> array;
  };
  const Value* find(const std::string& key) const;

  std::map<std::string, Value> values_;
  mutable std::map<std::string, bool> consumed_;
};

struct AppConfig {
  ScenarioConfig scenario;
  TrainingConfig training;
  std::optional<PidGains> pid_gains; // explicit gains skip grid tuning
};

// Built-in defaults: 3940 -> 5000 mL over 100 min at T = 1 min, epsilon
// 0.5, gamma 0.69, mu0 0.2 halved every 1000 episodes, 30000 episodes,
// noise off with 250 mL amplitude armed for when it is switched on.
AppConfig default_config();

// Load, fill defaults, validate. Unknown keys are rejected; invariant
// violations throw ConfigError naming the key.
AppConfig parse_config(const std::string& path);

// Same, from an in-memory document (empty text -> full defaults).
AppConfig config_from_toml(const TomlTable& toml);

} // namespace resusrl
