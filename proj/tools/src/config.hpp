#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "nperiod/registry.hpp"

namespace nperiod::cli {

/// A rejected configuration. line() is 0 when the problem is not tied to a
/// line of the config file (e.g. a command-line override).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class InitialGuess { Zero, Random };
enum class HistorySource { Zero, Unit, Periodic, Exact };

struct RunConfig {
  ProblemParams problem;

  // [solve]
  double tol = 1e-10;
  std::size_t max_iter = 100;
  double damping = 1.0;
  InitialGuess initial = InitialGuess::Zero;
  std::uint64_t seed = 0;

  // [simulate]
  double horizon = 1.0;
  double dt = 1e-3;
  HistorySource history = HistorySource::Zero;
  std::size_t output_every = 1;

  // [compare]
  double threshold = 1e-4;
  std::string periodic_solution;  ///< CSV from a previous solve; empty = solve in-run
};

/// Parses "key = value" lines grouped under [section] headers. '#' starts a
/// comment. Unknown sections or keys and malformed values throw ConfigError
/// with the line number.
RunConfig parse_config(const std::string& text, RunConfig base = {});
RunConfig load_config(const std::string& path);

/// Every key with its current value, in a form parse_config accepts.
std::string render_config(const RunConfig& config);

/// Applies a single "section.key" = value assignment (used for overrides).
void set_value(RunConfig& config, const std::string& dotted_key, const std::string& value);

/// Documented key list: one "section.key  description" line per key.
std::string describe_keys();

}  // namespace nperiod::cli
