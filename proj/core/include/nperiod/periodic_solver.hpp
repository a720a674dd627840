#pragma once

// Periodic solution operator for u' + Au = h: the unique omega-periodic mild
// solution u(t) = (I - T(omega))^{-1} int_{t-omega}^{t} T(t-s) h(s) ds.
//
// Each mode is an independent scalar recurrence
//   u_n(t_{j+1}) = rho_n u_n(t_j) + b_{n,j},   rho_n = exp(-lambda_n dt),
// where b_{n,j} integrates exp(-lambda_n (t_{j+1} - s)) against an
// interpolant of the samples h_n(t_j). The interpolant is the source model.

#include <cstddef>

#include "nperiod/trajectory.hpp"

namespace nperiod {

enum class SourceModel {
  Trigonometric,    ///< periodic trig interpolant of h; exact for band-limited forcing
  PiecewiseLinear,  ///< linear between samples (phi-function weights)
};

/// Weights of exact exponential integration of a linear source over one step:
///   int_0^dt exp(-lambda (dt - s)) [h0 + (h1 - h0) s/dt] ds = left*h0 + right*h1.
struct StepWeights {
  double decay;  ///< exp(-lambda dt)
  double left;
  double right;
};

/// phi_1(z) = (1 - e^{-z})/z, power series for |z| < 1.
double phi1(double z) noexcept;
/// psi(z) = (1 - e^{-z}(1 + z))/z^2 = int_0^1 e^{-z s} s ds, power series for |z| < 1.
double psi(double z) noexcept;

StepWeights linear_step_weights(double lambda, double dt) noexcept;

/// Unique periodic solution on the forcing's own grid.
PeriodicTrajectory periodic_solve(const PeriodicTrajectory& h,
                                  SourceModel model = SourceModel::Trigonometric);

/// Same, but first checks that h lives on the requested grid.
PeriodicTrajectory periodic_solve(const PeriodicTrajectory& h, double period,
                                  std::size_t time_points,
                                  SourceModel model = SourceModel::Trigonometric);

/// The one-step source integrals b_j (field j holds b_{., j}).
PeriodicTrajectory step_source_integrals(const PeriodicTrajectory& h,
                                         SourceModel model = SourceModel::Trigonometric);

/// max_j || u(t_{j+1}) - T(dt) u(t_j) - b_j ||_{L^2}.
double mild_identity_residual(const PeriodicTrajectory& u, const PeriodicTrajectory& h,
                              SourceModel model = SourceModel::Trigonometric);

}  // namespace nperiod
