#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "nperiod/trajectory.hpp"

namespace nperiod::detail {

// Per-mode real DFT along the time axis of a PeriodicTrajectory.
// bins = M/2 + 1; entry (k, n) is sum_j h_n(t_j) exp(-2 pi i j k / M).
class TimeSpectrum {
 public:
  explicit TimeSpectrum(const PeriodicTrajectory& u);

  std::size_t time_points() const noexcept { return time_points_; }
  std::size_t modes() const noexcept { return modes_; }
  std::size_t bins() const noexcept { return time_points_ / 2 + 1; }
  double period() const noexcept { return period_; }

  std::complex<double>& at(std::size_t bin, std::size_t mode) { return data_[bin * modes_ + mode]; }
  const std::complex<double>& at(std::size_t bin, std::size_t mode) const {
    return data_[bin * modes_ + mode];
  }

  /// True when `bin` is the unpaired Nyquist bin of an even-length grid.
  bool is_nyquist(std::size_t bin) const noexcept {
    return time_points_ % 2 == 0 && bin == time_points_ / 2;
  }

  /// Inverse transform (normalized) back to a trajectory on the same grid.
  PeriodicTrajectory synthesize() const;

  /// Value of the trigonometric interpolant at time t.
  SpectralField evaluate(double t) const;

 private:
  double period_;
  std::size_t time_points_;
  std::size_t modes_;
  std::vector<std::complex<double>> data_;
};

}  // namespace nperiod::detail
