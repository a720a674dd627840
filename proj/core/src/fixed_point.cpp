#include "nperiod/fixed_point.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "nperiod/detail/parallel.hpp"
#include "nperiod/errors.hpp"
#include "nperiod/hypotheses.hpp"

namespace nperiod {

namespace {

struct Forcing {
  PeriodicTrajectory F;
  PeriodicTrajectory G;
  PeriodicTrajectory AG;
};

enum Parts : unsigned { kF = 1, kG = 2 };

Forcing build_forcing(const NeutralProblem& problem, const PeriodicTrajectory& u, unsigned parts) {
  const ProblemSpec& spec = problem.spec();
  if (u.size() != spec.grid.time_points || u.modes() != spec.grid.modes ||
      std::abs(u.period() - spec.omega) > 1e-12 * spec.omega) {
    throw std::invalid_argument("trajectory does not match the problem grid");
  }
  const std::size_t M = u.size();
  const std::size_t N = u.modes();
  Forcing out{PeriodicTrajectory(spec.omega, M, N), PeriodicTrajectory(spec.omega, M, N),
              PeriodicTrajectory(spec.omega, M, N)};
  PeriodicTrajectory u_tau;
  PeriodicTrajectory u_xi;
  if (parts & kF) u_tau = delayed(u, spec.tau, spec.interpolation);
  if (parts & kG) u_xi = delayed(u, spec.xi, spec.interpolation);

  detail::parallel_for(M, [&](std::size_t j) {
    const double t = u.time(j);
    try {
      if (parts & kF) out.F[j] = problem.eval_F(u[j], u_tau[j], t);
      if (parts & kG) {
        out.G[j] = problem.eval_G(u_xi[j], t);
        out.AG[j] = problem.eval_AG(u_xi[j], t);
      }
    } catch (const EvaluationError& e) {
      throw EvaluationError(std::string(e.what()) + " (time index " + std::to_string(j) + ")", j);
    }
  });
  return out;
}

}  // namespace

PeriodicTrajectory apply_Q(const NeutralProblem& problem, const PeriodicTrajectory& u) {
  Forcing f = build_forcing(problem, u, kF | kG);
  f.F -= f.AG;
  PeriodicTrajectory q = periodic_solve(f.F, problem.spec().source_model);
  q += f.G;
  return q;
}

PeriodicTrajectory apply_Q1(const NeutralProblem& problem, const PeriodicTrajectory& u) {
  const Forcing f = build_forcing(problem, u, kF);
  return periodic_solve(f.F, problem.spec().source_model);
}

PeriodicTrajectory apply_Q2(const NeutralProblem& problem, const PeriodicTrajectory& u) {
  const Forcing f = build_forcing(problem, u, kG);
  return f.G - periodic_solve(f.AG, problem.spec().source_model);
}

double fixed_point_residual(const NeutralProblem& problem, const PeriodicTrajectory& u) {
  const ProblemSpec& spec = problem.spec();
  return trajectory_distance(apply_Q(problem, u), u, spec.alpha, spec.convention);
}

const char* to_string(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::Converged:
      return "converged";
    case SolveStatus::MaxIterations:
      return "max_iterations";
    case SolveStatus::Diverged:
      return "diverged";
  }
  return "unknown";
}

SolveResult picard_solve(const NeutralProblem& problem, PeriodicTrajectory initial,
                         const PicardOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (!(options.damping > 0.0 && options.damping <= 1.0)) {
    throw std::invalid_argument("damping must lie in (0, 1]");
  }
  const ProblemSpec& spec = problem.spec();
  const double alpha = spec.alpha;
  const Convention conv = spec.convention;

  SolveResult result;
  try {
    result.convergence_guaranteed =
        check_mild(spec).theorem("3.3").verdict == Verdict::Pass;
  } catch (const std::invalid_argument&) {
    result.convergence_guaranteed = false;  // alpha = 0 has no smoothing constant
  }

  PeriodicTrajectory u = std::move(initial);
  PeriodicTrajectory q = apply_Q(problem, u);
  result.residual = trajectory_distance(q, u, alpha, conv);

  for (std::size_t k = 1; k <= options.max_iter; ++k) {
    PeriodicTrajectory next =
        options.damping == 1.0 ? std::move(q) : (1.0 - options.damping) * u + options.damping * q;
    const double step = trajectory_distance(next, u, alpha, conv);
    if (!result.step_norms.empty() && result.step_norms.back() > 0.0) {
      result.contraction_ratios.push_back(step / result.step_norms.back());
    }
    result.step_norms.push_back(step);
    u = std::move(next);
    result.iterations = k;

    const double size = trajectory_norm(u, alpha, conv);
    if (!std::isfinite(size) || size > options.overflow_guard) {
      result.status = SolveStatus::Diverged;
      result.residual = std::numeric_limits<double>::infinity();
      break;
    }
    q = apply_Q(problem, u);
    result.residual = trajectory_distance(q, u, alpha, conv);
    if (step <= options.tol && result.residual <= options.tol) {
      result.status = SolveStatus::Converged;
      result.converged = true;
      break;
    }
  }
  result.solution = std::move(u);
  return result;
}

SolveResult picard_solve(const NeutralProblem& problem, const PicardOptions& options) {
  return picard_solve(problem, problem.zero_trajectory(), options);
}

}  // namespace nperiod
