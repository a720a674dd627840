#include "nperiod/registry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nperiod {

namespace {

constexpr double kPi = std::numbers::pi;

ProblemSpec base_spec(const ProblemParams& p) {
  ProblemSpec spec;
  spec.name = p.name;
  spec.omega = p.omega;
  spec.tau = p.tau;
  spec.xi = p.xi;
  spec.alpha = p.alpha;
  spec.grid = p.grid;
  spec.constants = p.constants;
  spec.convention = p.convention;
  spec.interpolation = p.interpolation;
  spec.source_model = p.source_model;
  spec.ag_mode = p.ag_mode;
  return spec;
}

}  // namespace

std::vector<std::string> problem_names() {
  return {"heat_decay", "constant_forcing", "manufactured_linear", "example51"};
}

Nonlinearity profile_terms(GProfile profile, double scale, double modulation, double omega) {
  Nonlinearity terms;
  if (profile == GProfile::None || scale == 0.0) return terms;
  const double nu = 2.0 * kPi / omega;
  auto m = [=](double t) { return 1.0 + modulation * std::sin(nu * t); };
  auto dm = [=](double t) { return modulation * nu * std::cos(nu * t); };

  if (profile == GProfile::Parabola) {
    terms.g = [=](double x, double t) { return scale * x * (1.0 - x) * m(t); };
    terms.g_x = [=](double x, double t) { return scale * (1.0 - 2.0 * x) * m(t); };
    terms.g_xx = [=](double, double t) { return -2.0 * scale * m(t); };
    terms.g_t = [=](double x, double t) { return scale * x * (1.0 - x) * dm(t); };
  } else {
    // s = sin(pi x): (s^4)' = 4 pi s^3 c, (s^4)'' = 4 pi^2 s^2 (3 c^2 - s^2)
    terms.g = [=](double x, double t) { return scale * std::pow(std::sin(kPi * x), 4) * m(t); };
    terms.g_x = [=](double x, double t) {
      const double s = std::sin(kPi * x);
      return scale * 4.0 * kPi * s * s * s * std::cos(kPi * x) * m(t);
    };
    terms.g_xx = [=](double x, double t) {
      const double s = std::sin(kPi * x);
      const double c = std::cos(kPi * x);
      return scale * 4.0 * kPi * kPi * s * s * (3.0 * c * c - s * s) * m(t);
    };
    terms.g_t = [=](double x, double t) { return scale * std::pow(std::sin(kPi * x), 4) * dm(t); };
  }
  if (modulation == 0.0) terms.g_t = nullptr;
  return terms;
}

ProblemSpec make_problem(const ProblemParams& p) {
  ProblemSpec spec = base_spec(p);

  if (p.name == "heat_decay") {
    return validated(std::move(spec));
  }

  if (p.name == "constant_forcing") {
    const std::size_t modes = p.grid.modes;
    spec.terms.source = [modes](double) { return SpectralField::unit(modes, 1); };
    return validated(std::move(spec));
  }

  if (p.name == "manufactured_linear") {
    spec.terms = profile_terms(p.g_profile, p.g_scale, p.g_modulation, p.omega);
    return manufacture(std::move(spec), ManufacturedSolution(p.recipe, p.omega));
  }

  if (p.name == "example51") {
    spec.kind = ProblemKind::Example51;
    const double a0 = p.constants.a0;
    const double a1 = p.constants.a1;
    const double K = p.constants.K;
    const double nu = 2.0 * kPi / p.omega;
    spec.terms.f = [=](double x, double t, double v, double eta, double w, double zeta) {
      return std::sin(kPi * x) * (a0 * std::sin(v + eta) + a1 * std::tanh(w + zeta) +
                                  K * 0.5 * (1.0 + std::cos(nu * t)));
    };
    // max |(sin^4)''| = 4 pi^2 and max of the modulation (1 + sin/2)/(3/2) is 1.
    Nonlinearity g = profile_terms(GProfile::Sine4, p.constants.L / (4.0 * kPi * kPi * 1.5), 0.5,
                                   p.omega);
    spec.terms.g = g.g;
    spec.terms.g_x = g.g_x;
    spec.terms.g_xx = g.g_xx;
    spec.terms.g_t = g.g_t;
    return validated(std::move(spec));
  }

  throw std::invalid_argument("unknown problem '" + p.name + "'");
}

}  // namespace nperiod
