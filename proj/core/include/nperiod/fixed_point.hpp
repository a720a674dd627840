#pragma once
// The operator Q whose fixed points are the periodic mild solutions,
//   Qu = P[F(., u, u_tau) - AG(., u_xi)] + G(., u_xi),
// where P is the periodic solution operator, and Picard iteration on it.

#include <cstddef>
#include <vector>

#include "nperiod/problem.hpp"

namespace nperiod {

/// Qu on the problem's time grid. EvaluationError from a handle is rethrown
/// with the offending time index attached.
PeriodicTrajectory apply_Q(const NeutralProblem& problem, const PeriodicTrajectory& u);
/// Q1 u = P[F(., u, u_tau)]
PeriodicTrajectory apply_Q1(const NeutralProblem& problem, const PeriodicTrajectory& u);
/// Q2 u = G(., u_xi) - P[AG(., u_xi)]
PeriodicTrajectory apply_Q2(const NeutralProblem& problem, const PeriodicTrajectory& u);

/// ||Qu - u||_{C, alpha}
double fixed_point_residual(const NeutralProblem& problem, const PeriodicTrajectory& u);

struct PicardOptions {
  double tol = 1e-10;
  std::size_t max_iter = 100;
  double damping = 1.0;  ///< u_{k+1} = (1 - damping) u_k + damping Q u_k, damping in (0, 1]
  double overflow_guard = 1e100;
};

enum class SolveStatus { Converged, MaxIterations, Diverged };

const char* to_string(SolveStatus s) noexcept;

struct SolveResult {
  PeriodicTrajectory solution;
  double residual = 0.0;  ///< ||Q solution - solution||_{C, alpha}
  std::size_t iterations = 0;
  std::vector<double> step_norms;          ///< ||u_{k+1} - u_k||_{C, alpha}
  std::vector<double> contraction_ratios;  ///< step_norms[k] / step_norms[k-1]
  bool converged = false;
  SolveStatus status = SolveStatus::MaxIterations;
  /// The declared constants certify a unique fixed point and a contraction.
  bool convergence_guaranteed = false;
};

/// Picard iteration from `initial`. Stops when a step is at most tol and the
/// residual of the new iterate is at most tol. Never throws for
/// non-convergence; inspect `status`.
SolveResult picard_solve(const NeutralProblem& problem, PeriodicTrajectory initial,
                         const PicardOptions& options = {});
/// Same, starting from the zero trajectory.
SolveResult picard_solve(const NeutralProblem& problem, const PicardOptions& options = {});

}  // namespace nperiod
