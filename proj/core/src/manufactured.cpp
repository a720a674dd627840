#include "nperiod/manufactured.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace nperiod {

ManufacturedSolution::ManufacturedSolution(std::vector<ManufacturedTerm> terms, double period)
    : terms_(std::move(terms)), period_(period) {
  if (!(period > 0.0)) throw std::invalid_argument("manufactured period must be positive");
  for (const auto& term : terms_) {
    if (term.mode == 0) throw std::invalid_argument("manufactured term uses mode 0");
  }
}

std::size_t ManufacturedSolution::max_mode() const noexcept {
  std::size_t m = 0;
  for (const auto& term : terms_) m = std::max(m, term.mode);
  return m;
}

SpectralField ManufacturedSolution::value(double t, std::size_t modes) const {
  SpectralField out(modes);
  const double nu = 2.0 * std::numbers::pi / period_;
  for (const auto& term : terms_) {
    if (term.mode > modes) throw std::invalid_argument("manufactured term above the mode count");
    const double phase = nu * static_cast<double>(term.harmonic) * t;
    out[term.mode - 1] += term.mean + term.sin_amp * std::sin(phase) + term.cos_amp * std::cos(phase);
  }
  return out;
}

SpectralField ManufacturedSolution::time_derivative(double t, std::size_t modes) const {
  SpectralField out(modes);
  const double nu = 2.0 * std::numbers::pi / period_;
  for (const auto& term : terms_) {
    if (term.mode > modes) throw std::invalid_argument("manufactured term above the mode count");
    const double k = nu * static_cast<double>(term.harmonic);
    out[term.mode - 1] += k * (term.sin_amp * std::cos(k * t) - term.cos_amp * std::sin(k * t));
  }
  return out;
}

PeriodicTrajectory ManufacturedSolution::sample(std::size_t time_points, std::size_t modes) const {
  return sample_trajectory(period_, time_points, [&](double t) { return value(t, modes); });
}

ProblemSpec manufacture(ProblemSpec base, const ManufacturedSolution& exact) {
  base = validated(std::move(base));
  const std::size_t modes = base.grid.modes;
  if (exact.max_mode() > modes) {
    throw std::invalid_argument("manufactured recipe uses mode " + std::to_string(exact.max_mode()) +
                                " but the problem has " + std::to_string(modes) + " modes");
  }
  if (std::abs(exact.period() - base.omega) > 1e-14 * base.omega) {
    throw std::invalid_argument("manufactured recipe period differs from omega");
  }

  auto basis = std::make_shared<const SineBasis>(modes, base.grid.space_intervals);
  const Profile g = base.terms.g;
  const Profile g_t = base.terms.g_t;
  const double xi = base.xi;

  base.terms.f = nullptr;
  base.terms.source = [exact, basis, g, g_t, xi, modes](double t) {
    SpectralField f = exact.time_derivative(t, modes);
    const SpectralField u = exact.value(t, modes);
    for (std::size_t k = 0; k < modes; ++k) f[k] += eigenvalue(k + 1) * u[k];
    if (!g) return f;

    // d/dt G(t, w(t)) with w = u*(t - xi): g_t (w + w_x) + g (w' + w'_x).
    const SpectralField w = exact.value(t - xi, modes);
    const SpectralField dw = exact.time_derivative(t - xi, modes);
    const std::size_t nodes = basis->intervals() - 1;
    std::vector<double> wv(nodes), wx(nodes), dv(nodes), dx(nodes), values(nodes);
    basis->inverse_into(w.coeffs, wv);
    basis->derivative_into(w.coeffs, wx);
    basis->inverse_into(dw.coeffs, dv);
    basis->derivative_into(dw.coeffs, dx);
    const double h = 1.0 / static_cast<double>(basis->intervals());
    for (std::size_t i = 0; i < nodes; ++i) {
      const double x = static_cast<double>(i + 1) * h;
      double value = g(x, t) * (dv[i] + dx[i]);
      if (g_t) value += g_t(x, t) * (wv[i] + wx[i]);
      values[i] = value;
    }
    SpectralField dg(modes);
    basis->forward_into(values, dg.coeffs);
    f -= dg;
    return f;
  };
  return base;
}

}  // namespace nperiod
