#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "config.hpp"

namespace nperiod::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFail = 1,     ///< a condition failed, a solve did not converge, a threshold was missed
  kExitUnknown = 2,  ///< check: the mild-solution condition could not be decided
  kExitConfig = 3,   ///< invalid configuration
  kExitRuntime = 4,  ///< evaluation or I/O failure
};

/// Runs one subcommand, writing its files into `out`. Never throws; errors are
/// printed to `err` and mapped to an exit code.
int run_command(const std::string& command, const RunConfig& config,
                const std::filesystem::path& out, std::ostream& err);

int run_check(const RunConfig& config, const std::filesystem::path& out);
int run_solve(const RunConfig& config, const std::filesystem::path& out);
int run_simulate(const RunConfig& config, const std::filesystem::path& out);
int run_compare(const RunConfig& config, const std::filesystem::path& out);
int run_manufacture(const RunConfig& config, const std::filesystem::path& out);

}  // namespace nperiod::cli
