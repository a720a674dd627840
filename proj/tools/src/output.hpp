#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "nperiod/ivp.hpp"
#include "nperiod/trajectory.hpp"

namespace nperiod::cli {

/// Writes `content` to a temporary sibling file and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Flat "key: value" report in insertion order.
class Report {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, double value);
  void add(const std::string& key, std::size_t value);
  void add(const std::string& key, bool value);
  void add(const std::string& key, const std::vector<double>& values);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::string format_double(double v);

/// "t,x,u" rows, t-major, over interior nodes x_i = i/M_x.
std::string trajectory_csv(const PeriodicTrajectory& u, std::size_t space_intervals);
/// Same for every `every`-th state of an IVP run (the final state is always included).
std::string trajectory_csv(const IvpTrajectory& u, std::size_t space_intervals, std::size_t every);
/// "period_index,distance"
std::string distance_csv(const std::vector<double>& distances);

/// Reads a "t,x,u" CSV written by trajectory_csv back onto the given grid.
PeriodicTrajectory read_trajectory_csv(const std::filesystem::path& path, double period,
                                       std::size_t time_points, std::size_t space_intervals,
                                       std::size_t modes);

}  // namespace nperiod::cli
