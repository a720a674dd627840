#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>

#include "nperiod/errors.hpp"
#include "nperiod/fixed_point.hpp"
#include "nperiod/hypotheses.hpp"
#include "nperiod/ivp.hpp"
#include "nperiod/manufactured.hpp"
#include "output.hpp"

namespace nperiod::cli {

namespace fs = std::filesystem;

namespace {

ProblemSpec build_spec(const RunConfig& config) {
  try {
    return make_problem(config.problem);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void echo_config(Report& report, const RunConfig& config) {
  std::istringstream in(render_config(config));
  std::string section;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    if (line.front() == '[') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    const auto eq = line.find(" = ");
    report.add("config." + section + "." + line.substr(0, eq), line.substr(eq + 3));
  }
}

void finish(const fs::path& out, Report& report, const RunConfig& config) {
  echo_config(report, config);
  write_atomic(out / "effective.cfg", render_config(config));
  write_atomic(out / "report.txt", report.str());
}

bool is_manufactured(const RunConfig& config) {
  return config.problem.name == "manufactured_linear";
}

ManufacturedSolution exact_solution(const RunConfig& config) {
  return ManufacturedSolution(config.problem.recipe, config.problem.omega);
}

PeriodicTrajectory random_trajectory(const NeutralProblem& problem, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  PeriodicTrajectory u = problem.zero_trajectory();
  for (std::size_t j = 0; j < u.size(); ++j) {
    for (std::size_t k = 0; k < u.modes(); ++k) {
      const double n = static_cast<double>(k + 1);
      u[j][k] = normal(rng) / (n * n);
    }
  }
  return u;
}

PicardOptions picard_options(const RunConfig& config) {
  PicardOptions opt;
  opt.tol = config.tol;
  opt.max_iter = config.max_iter;
  opt.damping = config.damping;
  if (!(opt.tol > 0.0)) throw ConfigError("solve.tol must be positive");
  if (!(opt.damping > 0.0 && opt.damping <= 1.0)) {
    throw ConfigError("solve.damping must lie in (0, 1]");
  }
  return opt;
}

SolveResult solve(const NeutralProblem& problem, const RunConfig& config) {
  PeriodicTrajectory initial = config.initial == InitialGuess::Random
                                   ? random_trajectory(problem, config.seed)
                                   : problem.zero_trajectory();
  return picard_solve(problem, std::move(initial), picard_options(config));
}

void add_solve_report(Report& report, const NeutralProblem& problem, const SolveResult& r,
                      const RunConfig& config) {
  const ProblemSpec& spec = problem.spec();
  report.add("status", std::string(to_string(r.status)));
  report.add("converged", r.converged);
  report.add("iterations", r.iterations);
  report.add("residual", r.residual);
  report.add("tolerance", config.tol);
  report.add("convergence_guaranteed", r.convergence_guaranteed);
  if (spec.alpha > 0.0) report.add("contraction_bound", contraction_bound(spec));
  report.add("step_norms", r.step_norms);
  report.add("contraction_ratios", r.contraction_ratios);
  report.add("solution_norm", trajectory_norm(r.solution, spec.alpha, spec.convention));
  if (is_manufactured(config)) {
    const PeriodicTrajectory exact =
        exact_solution(config).sample(spec.grid.time_points, spec.grid.modes);
    report.add("error_vs_exact", trajectory_distance(r.solution, exact, spec.alpha, spec.convention));
  }
}

// Periodic solution for simulate/compare: from a CSV if configured, else solved here.
PeriodicTrajectory periodic_solution(const NeutralProblem& problem, const RunConfig& config,
                                     Report& report) {
  const ProblemSpec& spec = problem.spec();
  if (!config.periodic_solution.empty()) {
    report.add("periodic_source", config.periodic_solution);
    return read_trajectory_csv(config.periodic_solution, spec.omega, spec.grid.time_points,
                               spec.grid.space_intervals, spec.grid.modes);
  }
  SolveResult r = solve(problem, config);
  report.add("periodic_source", std::string("solve"));
  report.add("periodic_converged", r.converged);
  report.add("periodic_residual", r.residual);
  if (!r.converged) throw Error("periodic solve did not converge (residual " +
                                format_double(r.residual) + ")");
  return std::move(r.solution);
}

struct Run {
  IvpTrajectory traj;
  double history_duration;
};

Run integrate(const NeutralProblem& problem, const RunConfig& config,
              const PeriodicTrajectory* u_per) {
  const ProblemSpec& spec = problem.spec();
  if (!(config.dt > 0.0)) throw ConfigError("simulate.dt must be positive");
  if (!(config.horizon > 0.0)) throw ConfigError("simulate.horizon must be positive");
  const double d = std::max(spec.tau, spec.xi);
  const double duration = std::max(0.0, std::ceil(d / config.dt - 1e-9)) * config.dt;
  HistorySegment history = [&] {
    switch (config.history) {
      case HistorySource::Periodic:
        return HistorySegment::from_periodic(*u_per, duration, config.dt);
      case HistorySource::Exact: {
        if (!is_manufactured(config)) {
          throw ConfigError("simulate.history = exact needs problem.name = manufactured_linear");
        }
        const ManufacturedSolution ms = exact_solution(config);
        return HistorySegment::from_function(duration, config.dt,
                                             [&](double t) { return ms.value(t, spec.grid.modes); });
      }
      case HistorySource::Unit:
        return HistorySegment::constant(duration, config.dt,
                                        SpectralField::unit(spec.grid.modes, 1));
      case HistorySource::Zero:
        break;
    }
    return HistorySegment::constant(duration, config.dt, SpectralField(spec.grid.modes));
  }();
  try {
    return {simulate(problem, history, config.horizon, config.dt), duration};
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void add_run_report(Report& report, const NeutralProblem& problem, const Run& run,
                    const RunConfig& config) {
  const ProblemSpec& spec = problem.spec();
  const IvpTrajectory& traj = run.traj;
  report.add("steps", traj.size() - 1);
  report.add("dt", traj.dt());
  report.add("final_time", traj.horizon());
  report.add("history_duration", run.history_duration);
  report.add("initial_l2_norm", norm_alpha(traj[0], 0.0, spec.convention));
  report.add("final_l2_norm", norm_alpha(traj.final_state(), 0.0, spec.convention));
  report.add("final_alpha_norm", norm_alpha(traj.final_state(), spec.alpha, spec.convention));
  if (config.history == HistorySource::Exact) {
    const SpectralField exact = exact_solution(config).value(traj.horizon(), spec.grid.modes);
    report.add("final_error_vs_exact",
               distance_alpha(traj.final_state(), exact, spec.alpha, spec.convention));
  }
}

}  // namespace

int run_check(const RunConfig& config, const fs::path& out) {
  const ProblemSpec spec = build_spec(config);
  HypothesisReport h;
  try {
    h = check_all(spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  Report report;
  report.add("command", std::string("check"));
  report.add("problem", spec.name);
  report.add("convention",
             std::string(spec.convention == Convention::Literal ? "literal" : "eigen"));
  report.add("omega", spec.omega);
  report.add("alpha", spec.alpha);
  report.add("C", h.constants.C);
  report.add("M_alpha", h.constants.M_alpha);
  report.add("C_one_minus_alpha", h.constants.C_one_minus_alpha);
  report.add("time_factor", h.constants.time_factor);
  report.add("gamma", h.constants.gamma ? format_double(*h.constants.gamma) : "undeclared");
  for (const auto& q : h.inequalities) {
    report.add(q.name + ".lhs", q.lhs);
    report.add(q.name + ".rhs", q.rhs);
    report.add(q.name + ".margin", q.margin);
    report.add(q.name + ".verdict", std::string(to_string(q.verdict)));
  }
  for (const auto& t : h.theorems) {
    report.add("theorem_" + t.name, std::string(to_string(t.verdict)) + " (" + t.conclusion + ")");
  }
  report.add("contraction_bound", contraction_bound(spec));

  Verdict mild = Verdict::Unknown;
  if (spec.kind == ProblemKind::Example51) {
    mild = h.theorem("5.1").verdict;
  } else {
    const Verdict a = h.theorem("3.1").verdict;
    const Verdict b = h.theorem("3.2").verdict;
    if (a == Verdict::Pass || b == Verdict::Pass) {
      mild = Verdict::Pass;
    } else if (a == Verdict::Fail || b == Verdict::Fail) {
      mild = Verdict::Fail;
    }
  }
  report.add("mild_solution", std::string(to_string(mild)));

  const NeutralProblem problem(spec);
  report.add("diagnostic.empirical_ag_lipschitz", empirical_ag_lipschitz(problem, 32, config.seed));
  finish(out, report, config);
  switch (mild) {
    case Verdict::Pass:
      return kExitOk;
    case Verdict::Fail:
      return kExitFail;
    case Verdict::Unknown:
      break;
  }
  return kExitUnknown;
}

int run_solve(const RunConfig& config, const fs::path& out) {
  const NeutralProblem problem(build_spec(config));
  const SolveResult r = solve(problem, config);
  Report report;
  report.add("command", std::string("solve"));
  report.add("problem", problem.spec().name);
  add_solve_report(report, problem, r, config);
  write_atomic(out / "solution.csv", trajectory_csv(r.solution, problem.spec().grid.space_intervals));
  finish(out, report, config);
  return r.converged ? kExitOk : kExitFail;
}

int run_simulate(const RunConfig& config, const fs::path& out) {
  const NeutralProblem problem(build_spec(config));
  Report report;
  report.add("command", std::string("simulate"));
  report.add("problem", problem.spec().name);
  PeriodicTrajectory u_per;
  if (config.history == HistorySource::Periodic) u_per = periodic_solution(problem, config, report);
  const Run run = integrate(problem, config, &u_per);
  add_run_report(report, problem, run, config);
  write_atomic(out / "trajectory.csv",
               trajectory_csv(run.traj, problem.spec().grid.space_intervals, config.output_every));
  finish(out, report, config);
  return kExitOk;
}

int run_compare(const RunConfig& config, const fs::path& out) {
  const NeutralProblem problem(build_spec(config));
  const ProblemSpec& spec = problem.spec();
  if (config.horizon < spec.omega) throw ConfigError("compare needs simulate.horizon >= omega");
  Report report;
  report.add("command", std::string("compare"));
  report.add("problem", spec.name);
  const PeriodicTrajectory u_per = periodic_solution(problem, config, report);
  const Run run = integrate(problem, config, &u_per);
  add_run_report(report, problem, run, config);
  const std::vector<double> d =
      distance_to_periodic(run.traj, u_per, spec.alpha, spec.convention, spec.interpolation);
  bool non_increasing = true;
  for (std::size_t p = 1; p < d.size(); ++p) non_increasing = non_increasing && d[p] <= d[p - 1] + 1e-12;
  const bool pass = !d.empty() && d.back() <= config.threshold;
  report.add("periods", d.size());
  report.add("final_distance", d.empty() ? NAN : d.back());
  report.add("threshold", config.threshold);
  report.add("non_increasing", non_increasing);
  report.add("within_threshold", pass);
  write_atomic(out / "distance.csv", distance_csv(d));
  write_atomic(out / "trajectory.csv",
               trajectory_csv(run.traj, spec.grid.space_intervals, config.output_every));
  finish(out, report, config);
  return pass ? kExitOk : kExitFail;
}

int run_manufacture(const RunConfig& config_in, const fs::path& out) {
  RunConfig config = config_in;
  config.problem.name = "manufactured_linear";
  const NeutralProblem problem(build_spec(config));
  const ProblemSpec& spec = problem.spec();
  const PeriodicTrajectory exact =
      exact_solution(config).sample(spec.grid.time_points, spec.grid.modes);
  const PeriodicTrajectory forcing =
      sample_trajectory(spec.omega, spec.grid.time_points,
                        [&](double t) { return problem.eval_F(exact.at(0), exact.at(0), t); });
  const double residual = fixed_point_residual(problem, exact);

  Report report;
  report.add("command", std::string("manufacture"));
  report.add("problem", spec.name);
  report.add("terms", config.problem.recipe.size());
  report.add("exact_norm", trajectory_norm(exact, spec.alpha, spec.convention));
  report.add("forcing_l2_norm", trajectory_norm(forcing, 0.0, spec.convention));
  report.add("fixed_point_residual", residual);
  write_atomic(out / "problem.cfg", render_config(config));
  write_atomic(out / "exact.csv", trajectory_csv(exact, spec.grid.space_intervals));
  write_atomic(out / "forcing.csv", trajectory_csv(forcing, spec.grid.space_intervals));
  finish(out, report, config);
  return std::isfinite(residual) ? kExitOk : kExitRuntime;
}

int run_command(const std::string& command, const RunConfig& config, const fs::path& out,
                std::ostream& err) {
  try {
    if (command == "check") return run_check(config, out);
    if (command == "solve") return run_solve(config, out);
    if (command == "simulate") return run_simulate(config, out);
    if (command == "compare") return run_compare(config, out);
    if (command == "manufacture") return run_manufacture(config, out);
    err << "unknown command '" << command << "'\n";
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace nperiod::cli
