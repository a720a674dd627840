#pragma once

#include <cstddef>
#include <vector>

#include "nperiod/problem.hpp"

namespace nperiod {

/// One term of a prescribed solution:
///   (mean + sin_amp sin(k nu t) + cos_amp cos(k nu t)) e_mode,  nu = 2 pi / omega.
struct ManufacturedTerm {
  std::size_t mode = 1;
  double mean = 0.0;
  unsigned harmonic = 1;
  double sin_amp = 0.0;
  double cos_amp = 0.0;
};

/// A finite sine-in-space, Fourier-in-time recipe for u*(t).
class ManufacturedSolution {
 public:
  ManufacturedSolution(std::vector<ManufacturedTerm> terms, double period);

  double period() const noexcept { return period_; }
  const std::vector<ManufacturedTerm>& terms() const noexcept { return terms_; }
  std::size_t max_mode() const noexcept;

  SpectralField value(double t, std::size_t modes) const;
  SpectralField time_derivative(double t, std::size_t modes) const;
  PeriodicTrajectory sample(std::size_t time_points, std::size_t modes) const;

 private:
  std::vector<ManufacturedTerm> terms_;
  double period_;
};

/// Replaces the problem's F by the state-independent forcing
///   F(t) = d/dt [u*(t) - G(t, u*(t - xi))] + A u*(t),
/// so that u* solves the neutral equation exactly. The G-part is formed with
/// the problem's own sine transform, so u* is also an exact fixed point of
/// the discrete operator. Any pointwise f is dropped; g is kept. When g
/// depends on t, g_t must be supplied (an empty g_t means g is constant in t).
/// Throws std::invalid_argument if the recipe uses a mode above N or a
/// period different from omega.
ProblemSpec manufacture(ProblemSpec base, const ManufacturedSolution& exact);

}  // namespace nperiod
