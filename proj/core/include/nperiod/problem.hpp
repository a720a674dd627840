#pragma once

// Model of the neutral problem
//   d/dt [u - g(x,t)(u + u_x)(x, t - xi)] - u_xx = f(x, t, u, u_x, u(t - tau), u_x(t - tau))
// on (0,1) with Dirichlet conditions, cast abstractly as
//   (u(t) - G(t, u(t - xi)))' + A u(t) = F(t, u(t), u(t - tau)).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "nperiod/periodic_solver.hpp"
#include "nperiod/spectral.hpp"
#include "nperiod/trajectory.hpp"

namespace nperiod {

/// f(x, t, v, eta, w, zeta) with v = u, eta = u_x, w = u(t - tau), zeta = u_x(t - tau).
using PointwiseF =
    std::function<double(double x, double t, double v, double eta, double w, double zeta)>;
/// A function of (x, t), used for g and its derivatives.
using Profile = std::function<double(double x, double t)>;
/// State-independent additive part of F, already in spectral form.
using SpectralSource = std::function<SpectralField(double t)>;

/// Handles for the nonlinear terms. Empty handles mean "identically zero".
/// All handles must be pure, reentrant and omega-periodic in t; g must vanish
/// at x = 0 and x = 1.
struct Nonlinearity {
  PointwiseF f;
  SpectralSource source;
  Profile g;
  Profile g_x;   ///< needed only for the direct AG mode
  Profile g_xx;  ///< needed only for the direct AG mode
  Profile g_t;   ///< needed only to manufacture solutions with time-dependent g
};

/// How the growth of F is declared. Lipschitz implies Affine with
/// K = max_t ||F(t, 0, 0)||; General needs a user-supplied gamma.
enum class GrowthBound { Lipschitz, Affine, General };

/// Constants the user asserts about f and g. They are hypotheses and are
/// never estimated from the handles.
struct DeclaredConstants {
  double a0 = 0.0;
  double a1 = 0.0;
  double K = 0.0;
  double L = 0.0;
  double L1 = 0.0;
  double L2 = 0.0;
  double mu1 = 1.0;
  double mu2 = 1.0;
  std::optional<double> gamma;
  GrowthBound growth = GrowthBound::Lipschitz;
};

struct Discretization {
  std::size_t modes = 64;             ///< N
  std::size_t time_points = 256;      ///< M_t
  std::size_t space_intervals = 257;  ///< M_x; interior nodes i/M_x, i = 1..M_x-1
};

/// How AG(t, w) = A G(t, w) is formed.
enum class AgMode {
  Spectral,  ///< multiply the coefficients of G by lambda_n
  Direct,    ///< transform -d^2/dx^2 [g (w + w_x)] built from g, g_x, g_xx
};

/// Which family of sufficient conditions the problem is checked against.
enum class ProblemKind { Abstract, Example51 };

struct ProblemSpec {
  std::string name = "custom";
  ProblemKind kind = ProblemKind::Abstract;
  double omega = 1.0;
  double tau = 0.0;
  double xi = 0.0;
  double alpha = 0.5;
  Discretization grid;
  DeclaredConstants constants;
  Nonlinearity terms;
  Convention convention = Convention::EigenConsistent;
  Interpolation interpolation = Interpolation::Trigonometric;
  SourceModel source_model = SourceModel::Trigonometric;
  AgMode ag_mode = AgMode::Spectral;
};

/// Checks every ProblemSpec invariant and reduces tau and xi modulo omega.
/// Throws std::invalid_argument naming the offending field.
ProblemSpec validated(ProblemSpec spec);

/// A validated problem together with its sine-transform tables.
/// Immutable and safe to share between threads.
class NeutralProblem {
 public:
  explicit NeutralProblem(ProblemSpec spec);

  const ProblemSpec& spec() const noexcept { return spec_; }
  const SineBasis& basis() const noexcept { return *basis_; }
  std::size_t modes() const noexcept { return spec_.grid.modes; }

  /// F(t, u_now, u_tau) evaluated pointwise on the grid and transformed back.
  SpectralField eval_F(const SpectralField& u_now, const SpectralField& u_tau, double t) const;
  /// G(t, u_xi) = g(., t)(w + w_x) with w = u_xi.
  SpectralField eval_G(const SpectralField& u_xi, double t) const;
  /// A G(t, u_xi) using the problem's AgMode.
  SpectralField eval_AG(const SpectralField& u_xi, double t) const;
  SpectralField eval_AG(const SpectralField& u_xi, double t, AgMode mode) const;

  /// A zero trajectory on the problem's time grid.
  PeriodicTrajectory zero_trajectory() const;

 private:
  ProblemSpec spec_;
  std::shared_ptr<const SineBasis> basis_;
};

/// Largest observed ||AG(w1) - AG(w2)|| / ||w1 - w2||_{1/2} over `probes`
/// random band-limited pairs with coefficients ~ N(0,1)/n^2. A diagnostic
/// for the declared L, not a bound.
double empirical_ag_lipschitz(const NeutralProblem& problem, std::size_t probes,
                              std::uint64_t seed, double t = 0.0);

}  // namespace nperiod
