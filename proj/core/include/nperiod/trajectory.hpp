#pragma once

#include <cstddef>
#include <vector>

#include "nperiod/spectral.hpp"

namespace nperiod {

/// Rule for evaluating a sampled periodic trajectory between grid points.
enum class Interpolation {
  Trigonometric,  ///< band-limited periodic interpolant (exact for trig polynomials)
  Linear,         ///< piecewise linear in coefficient space, periodic wrap
  Strict,         ///< only grid times are allowed
};

/// One period of SpectralFields on the uniform grid t_j = j*omega/M,
/// j = 0..M-1. Indexing through at() wraps periodically.
class PeriodicTrajectory {
 public:
  PeriodicTrajectory() = default;
  PeriodicTrajectory(double period, std::size_t time_points, std::size_t modes);
  PeriodicTrajectory(double period, std::vector<SpectralField> fields);

  double period() const noexcept { return period_; }
  std::size_t size() const noexcept { return fields_.size(); }
  std::size_t modes() const noexcept { return fields_.empty() ? 0 : fields_.front().modes(); }
  double step() const noexcept { return period_ / static_cast<double>(fields_.size()); }
  double time(std::size_t j) const noexcept { return static_cast<double>(j) * step(); }

  SpectralField& operator[](std::size_t j) { return fields_[j]; }
  const SpectralField& operator[](std::size_t j) const { return fields_[j]; }
  /// Periodic access: at(-1) is the last grid field.
  const SpectralField& at(long long j) const;

  const std::vector<SpectralField>& fields() const noexcept { return fields_; }

  PeriodicTrajectory& operator+=(const PeriodicTrajectory& other);
  PeriodicTrajectory& operator-=(const PeriodicTrajectory& other);
  PeriodicTrajectory& operator*=(double s);

  /// Throws std::invalid_argument unless both trajectories share period,
  /// grid size and mode count.
  void require_compatible(const PeriodicTrajectory& other) const;

 private:
  double period_ = 0.0;
  std::vector<SpectralField> fields_;
};

PeriodicTrajectory operator+(PeriodicTrajectory a, const PeriodicTrajectory& b);
PeriodicTrajectory operator-(PeriodicTrajectory a, const PeriodicTrajectory& b);
PeriodicTrajectory operator*(double s, PeriodicTrajectory a);

/// max_j ||u(t_j)||_alpha
double trajectory_norm(const PeriodicTrajectory& u, double alpha,
                       Convention convention = Convention::EigenConsistent);
/// max_j ||u(t_j) - v(t_j)||_alpha
double trajectory_distance(const PeriodicTrajectory& u, const PeriodicTrajectory& v, double alpha,
                           Convention convention = Convention::EigenConsistent);

/// Field at index j becomes u(t_{j-k}); exact for every k.
PeriodicTrajectory shift_steps(const PeriodicTrajectory& u, long long k);

/// u(t) for arbitrary real t (taken modulo the period).
SpectralField evaluate(const PeriodicTrajectory& u, double t,
                       Interpolation rule = Interpolation::Trigonometric);

/// The trajectory t_j -> u(t_j - delay) on the same grid.
PeriodicTrajectory delayed(const PeriodicTrajectory& u, double delay,
                           Interpolation rule = Interpolation::Trigonometric);

/// u(t_j - delay) for a single grid index.
SpectralField delayed_state(const PeriodicTrajectory& u, double t, double delay,
                            Interpolation rule = Interpolation::Trigonometric);

/// Trigonometric resampling onto a grid with `time_points` points.
PeriodicTrajectory resample(const PeriodicTrajectory& u, std::size_t time_points);

/// Sample a function of time on the grid of `time_points` points.
template <typename Fn>
PeriodicTrajectory sample_trajectory(double period, std::size_t time_points, Fn&& fn) {
  std::vector<SpectralField> fields;
  fields.reserve(time_points);
  for (std::size_t j = 0; j < time_points; ++j) {
    fields.push_back(fn(static_cast<double>(j) * period / static_cast<double>(time_points)));
  }
  return PeriodicTrajectory(period, std::move(fields));
}

}  // namespace nperiod
