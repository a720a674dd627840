#include "output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include <fmt/format.h>

namespace nperiod::cli {

namespace fs = std::filesystem;

void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += fmt::format(".tmp.{}", ::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

void Report::add(const std::string& key, const std::string& value) {
  lines_.emplace_back(key, value);
}
void Report::add(const std::string& key, double value) { add(key, format_double(value)); }
void Report::add(const std::string& key, std::size_t value) { add(key, std::to_string(value)); }
void Report::add(const std::string& key, bool value) {
  add(key, std::string(value ? "true" : "false"));
}
void Report::add(const std::string& key, const std::vector<double>& values) {
  std::string joined;
  for (double v : values) {
    if (!joined.empty()) joined += ' ';
    joined += format_double(v);
  }
  add(key, joined);
}

std::string Report::str() const {
  std::string out;
  for (const auto& [k, v] : lines_) {
    out += k;
    out += ": ";
    out += v;
    out += '\n';
  }
  return out;
}

namespace {

void append_rows(fmt::memory_buffer& buf, double t, const SpectralField& u,
                 std::size_t space_intervals) {
  const GridFunction g = inverse_transform(u, space_intervals);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    fmt::format_to(std::back_inserter(buf), "{:.17g},{:.17g},{:.17g}\n", t, g.node(i),
                   g.values[i]);
  }
}

}  // namespace

std::string trajectory_csv(const PeriodicTrajectory& u, std::size_t space_intervals) {
  fmt::memory_buffer buf;
  fmt::format_to(std::back_inserter(buf), "t,x,u\n");
  for (std::size_t j = 0; j < u.size(); ++j) append_rows(buf, u.time(j), u[j], space_intervals);
  return fmt::to_string(buf);
}

std::string trajectory_csv(const IvpTrajectory& u, std::size_t space_intervals, std::size_t every) {
  if (every == 0) every = 1;
  fmt::memory_buffer buf;
  fmt::format_to(std::back_inserter(buf), "t,x,u\n");
  for (std::size_t n = 0; n < u.size(); ++n) {
    if (n % every == 0 || n + 1 == u.size()) append_rows(buf, u.time(n), u[n], space_intervals);
  }
  return fmt::to_string(buf);
}

std::string distance_csv(const std::vector<double>& distances) {
  fmt::memory_buffer buf;
  fmt::format_to(std::back_inserter(buf), "period_index,distance\n");
  for (std::size_t p = 0; p < distances.size(); ++p) {
    fmt::format_to(std::back_inserter(buf), "{},{:.17g}\n", p, distances[p]);
  }
  return fmt::to_string(buf);
}

PeriodicTrajectory read_trajectory_csv(const fs::path& path, double period,
                                       std::size_t time_points, std::size_t space_intervals,
                                       std::size_t modes) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != "t,x,u") {
    throw std::runtime_error(path.string() + ": expected header 't,x,u'");
  }
  const std::size_t nodes = space_intervals - 1;
  PeriodicTrajectory out(period, time_points, modes);
  GridFunction g(space_intervals);
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double cols[3];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int c = 0; c < 3; ++c) {
      const auto [ptr, ec] = std::from_chars(p, end, cols[c]);
      if (ec != std::errc() || (c < 2 && (ptr == end || *ptr != ','))) {
        throw std::runtime_error(fmt::format("{}: malformed row {}", path.string(), row + 2));
      }
      p = ptr + (c < 2 ? 1 : 0);
    }
    const std::size_t j = row / nodes;
    const std::size_t i = row % nodes;
    if (j >= time_points || std::abs(cols[0] - out.time(j)) > 1e-9 * period ||
        std::abs(cols[1] - g.node(i)) > 1e-12) {
      throw std::runtime_error(
          fmt::format("{}: row {} does not match the configured grid", path.string(), row + 2));
    }
    g.values[i] = cols[2];
    if (i + 1 == nodes) out[j] = forward_transform(g, modes);
    ++row;
  }
  if (row != time_points * nodes) {
    throw std::runtime_error(fmt::format("{}: expected {} rows, found {}", path.string(),
                                         time_points * nodes, row));
  }
  return out;
}

}  // namespace nperiod::cli
