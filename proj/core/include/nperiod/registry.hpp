#pragma once

#include <string>
#include <vector>

#include "nperiod/manufactured.hpp"
#include "nperiod/problem.hpp"

namespace nperiod {

/// Spatial shape of g for registry problems; g(x,t) = scale * shape(x) * (1 + modulation sin(nu t)).
enum class GProfile {
  None,
  Parabola,  ///< x(1-x)
  Sine4,     ///< sin^4(pi x), flat to third order at both ends
};

/// Everything needed to instantiate a named problem.
struct ProblemParams {
  std::string name = "heat_decay";
  double omega = 1.0;
  double tau = 0.0;
  double xi = 0.0;
  double alpha = 0.5;
  Discretization grid;
  DeclaredConstants constants;
  std::vector<ManufacturedTerm> recipe{{1, 0.5, 1, 0.25, 0.0}};
  GProfile g_profile = GProfile::None;
  double g_scale = 0.0;
  double g_modulation = 0.0;
  Convention convention = Convention::EigenConsistent;
  Interpolation interpolation = Interpolation::Trigonometric;
  SourceModel source_model = SourceModel::Trigonometric;
  AgMode ag_mode = AgMode::Spectral;
};

/// Registered names: "heat_decay", "constant_forcing", "manufactured_linear", "example51".
std::vector<std::string> problem_names();

/// Builds the named problem. Throws std::invalid_argument for unknown names.
///
///  heat_decay          f = g = 0.
///  constant_forcing    F(t) = e_1, G = 0.
///  manufactured_linear u* from `recipe`, g from (g_profile, g_scale, g_modulation).
///  example51           f = sin(pi x)[a0 sin(v + eta) + a1 tanh(w + zeta) + K (1 + cos nu t)/2],
///                      g = L sin^4(pi x)/(4 pi^2) (1 + sin(nu t)/2)/(3/2), so |g_xx| <= L.
ProblemSpec make_problem(const ProblemParams& params);

/// g, g_x, g_xx and g_t for a registry profile.
Nonlinearity profile_terms(GProfile profile, double scale, double modulation, double omega);

}  // namespace nperiod
