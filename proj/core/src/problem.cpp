#include "nperiod/problem.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "nperiod/errors.hpp"

namespace nperiod {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

double reduce_delay(double delay, double omega) {
  double r = std::fmod(delay, omega);
  if (omega - r <= 1e-14 * omega) r = 0.0;
  return r;
}

void check_finite_grid(const std::vector<double>& values, const char* what, double t) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw EvaluationError(std::string(what) + " is not finite at node " + std::to_string(i + 1) +
                            " (t = " + std::to_string(t) + ")");
    }
  }
}

}  // namespace

ProblemSpec validated(ProblemSpec spec) {
  require(std::isfinite(spec.omega) && spec.omega > 0.0, "omega must be positive and finite");
  require(std::isfinite(spec.tau) && spec.tau >= 0.0, "tau must be non-negative and finite");
  require(std::isfinite(spec.xi) && spec.xi >= 0.0, "xi must be non-negative and finite");
  require(spec.alpha >= 0.0 && spec.alpha < 1.0, "alpha must lie in [0, 1)");
  require(spec.grid.modes >= 1, "modes must be at least 1");
  require(spec.grid.time_points >= 2, "time_points must be at least 2");
  require(spec.grid.space_intervals >= 2 * spec.grid.modes + 1,
          "space_intervals - 1 must be at least 2 * modes to suppress aliasing");

  const DeclaredConstants& c = spec.constants;
  for (const auto& [value, name] : {std::pair{c.a0, "a0"}, std::pair{c.a1, "a1"},
                                    std::pair{c.K, "K"}, std::pair{c.L, "L"},
                                    std::pair{c.L1, "L1"}, std::pair{c.L2, "L2"}}) {
    require(std::isfinite(value) && value >= 0.0, std::string(name) + " must be non-negative");
  }
  require(c.mu1 > 0.0 && c.mu1 <= 1.0, "mu1 must lie in (0, 1]");
  require(c.mu2 > 0.0 && c.mu2 <= 1.0, "mu2 must lie in (0, 1]");
  if (c.gamma) require(std::isfinite(*c.gamma) && *c.gamma >= 0.0, "gamma must be non-negative");

  if (spec.ag_mode == AgMode::Direct && spec.terms.g) {
    require(static_cast<bool>(spec.terms.g_x) && static_cast<bool>(spec.terms.g_xx),
            "direct AG mode needs g_x and g_xx");
  }

  spec.tau = reduce_delay(spec.tau, spec.omega);
  spec.xi = reduce_delay(spec.xi, spec.omega);
  return spec;
}

NeutralProblem::NeutralProblem(ProblemSpec spec)
    : spec_(validated(std::move(spec))),
      basis_(std::make_shared<const SineBasis>(spec_.grid.modes, spec_.grid.space_intervals)) {}

PeriodicTrajectory NeutralProblem::zero_trajectory() const {
  return PeriodicTrajectory(spec_.omega, spec_.grid.time_points, spec_.grid.modes);
}

SpectralField NeutralProblem::eval_F(const SpectralField& u_now, const SpectralField& u_tau,
                                     double t) const {
  SpectralField out(modes());
  if (spec_.terms.f) {
    const std::size_t nodes = basis_->intervals() - 1;
    std::vector<double> v(nodes), eta(nodes), w(nodes), zeta(nodes), values(nodes);
    basis_->inverse_into(u_now.coeffs, v);
    basis_->derivative_into(u_now.coeffs, eta);
    basis_->inverse_into(u_tau.coeffs, w);
    basis_->derivative_into(u_tau.coeffs, zeta);
    const double h = 1.0 / static_cast<double>(basis_->intervals());
    for (std::size_t i = 0; i < nodes; ++i) {
      values[i] = spec_.terms.f(static_cast<double>(i + 1) * h, t, v[i], eta[i], w[i], zeta[i]);
    }
    check_finite_grid(values, "f", t);
    basis_->forward_into(values, out.coeffs);
  }
  if (spec_.terms.source) {
    const SpectralField s = spec_.terms.source(t);
    if (s.modes() != modes()) throw std::invalid_argument("spectral source has the wrong mode count");
    if (!s.is_finite()) throw EvaluationError("spectral source is not finite at t = " + std::to_string(t));
    out += s;
  }
  return out;
}

SpectralField NeutralProblem::eval_G(const SpectralField& u_xi, double t) const {
  SpectralField out(modes());
  if (!spec_.terms.g) return out;
  const std::size_t nodes = basis_->intervals() - 1;
  std::vector<double> w(nodes), wx(nodes);
  basis_->inverse_into(u_xi.coeffs, w);
  basis_->derivative_into(u_xi.coeffs, wx);
  const double h = 1.0 / static_cast<double>(basis_->intervals());
  for (std::size_t i = 0; i < nodes; ++i) {
    w[i] = spec_.terms.g(static_cast<double>(i + 1) * h, t) * (w[i] + wx[i]);
  }
  check_finite_grid(w, "G", t);
  basis_->forward_into(w, out.coeffs);
  return out;
}

SpectralField NeutralProblem::eval_AG(const SpectralField& u_xi, double t) const {
  return eval_AG(u_xi, t, spec_.ag_mode);
}

SpectralField NeutralProblem::eval_AG(const SpectralField& u_xi, double t, AgMode mode) const {
  if (!spec_.terms.g) return SpectralField(modes());
  if (mode == AgMode::Spectral) {
    SpectralField out = eval_G(u_xi, t);
    for (std::size_t k = 0; k < out.modes(); ++k) out[k] *= eigenvalue(k + 1);
    return out;
  }
  if (!spec_.terms.g_x || !spec_.terms.g_xx) {
    throw std::invalid_argument("direct AG mode needs g_x and g_xx");
  }
  // -(g (w + w_x))'' = -[g_xx (w + w_x) + 2 g_x (w_x + w_xx) + g (w_xx + w_xxx)]
  const std::size_t nodes = basis_->intervals() - 1;
  SpectralField second(u_xi.modes());
  for (std::size_t k = 0; k < u_xi.modes(); ++k) second[k] = -eigenvalue(k + 1) * u_xi[k];
  std::vector<double> w(nodes), wx(nodes), wxx(nodes), wxxx(nodes), values(nodes);
  basis_->inverse_into(u_xi.coeffs, w);
  basis_->derivative_into(u_xi.coeffs, wx);
  basis_->inverse_into(second.coeffs, wxx);
  basis_->derivative_into(second.coeffs, wxxx);
  const double h = 1.0 / static_cast<double>(basis_->intervals());
  for (std::size_t i = 0; i < nodes; ++i) {
    const double x = static_cast<double>(i + 1) * h;
    values[i] = -(spec_.terms.g_xx(x, t) * (w[i] + wx[i]) +
                  2.0 * spec_.terms.g_x(x, t) * (wx[i] + wxx[i]) +
                  spec_.terms.g(x, t) * (wxx[i] + wxxx[i]));
  }
  check_finite_grid(values, "AG", t);
  SpectralField out(modes());
  basis_->forward_into(values, out.coeffs);
  return out;
}

double empirical_ag_lipschitz(const NeutralProblem& problem, std::size_t probes,
                              std::uint64_t seed, double t) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const std::size_t n = problem.modes();
  double best = 0.0;
  for (std::size_t p = 0; p < probes; ++p) {
    SpectralField w1(n), w2(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double decay = 1.0 / static_cast<double>((k + 1) * (k + 1));
      w1[k] = normal(rng) * decay;
      w2[k] = normal(rng) * decay;
    }
    const double denom = distance_alpha(w1, w2, 0.5, problem.spec().convention);
    if (denom == 0.0) continue;
    const double num = norm_alpha(problem.eval_AG(w1, t) - problem.eval_AG(w2, t), 0.0);
    best = std::max(best, num / denom);
  }
  return best;
}

}  // namespace nperiod
