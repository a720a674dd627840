#include "nperiod/periodic_solver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "nperiod/detail/time_spectrum.hpp"

namespace nperiod {

namespace {

// Below this |z| the closed forms lose digits to cancellation (psi by
// eps/z^2); a 17-term series is exact to rounding there.
constexpr double kSeriesSwitch = 1.0;
constexpr int kSeriesTerms = 17;

using cplx = std::complex<double>;

// Response multiplier for a bin: periodic solution of u' + lambda u = e^{i k nu t}.
// The Nyquist bin carries cos(k nu t) and only its grid values matter, which
// are the real part of the complex response.
cplx response(double lambda, double freq, bool nyquist) {
  const cplx r = 1.0 / cplx(lambda, freq);
  return nyquist ? cplx(r.real(), 0.0) : r;
}

PeriodicTrajectory solve_trigonometric(const PeriodicTrajectory& h) {
  detail::TimeSpectrum spec(h);
  const double nu = 2.0 * std::numbers::pi / h.period();
  for (std::size_t k = 0; k < spec.bins(); ++k) {
    const double freq = nu * static_cast<double>(k);
    for (std::size_t n = 0; n < spec.modes(); ++n) {
      spec.at(k, n) *= response(eigenvalue(n + 1), freq, spec.is_nyquist(k));
    }
  }
  return spec.synthesize();
}

PeriodicTrajectory integrals_trigonometric(const PeriodicTrajectory& h) {
  detail::TimeSpectrum spec(h);
  const double nu = 2.0 * std::numbers::pi / h.period();
  const double dt = h.step();
  for (std::size_t k = 0; k < spec.bins(); ++k) {
    const double freq = nu * static_cast<double>(k);
    const bool nyq = spec.is_nyquist(k);
    const cplx advance(std::cos(freq * dt), std::sin(freq * dt));
    for (std::size_t n = 0; n < spec.modes(); ++n) {
      const double lambda = eigenvalue(n + 1);
      const double rho = std::exp(-lambda * dt);
      // int_{t_j}^{t_j+dt} e^{-lambda(t_j+dt-s)} e^{i f s} ds = e^{i f t_j}(e^{i f dt} - rho)/(lambda + i f)
      cplx w = (advance - rho) / cplx(lambda, freq);
      if (nyq) w = cplx(w.real(), 0.0);
      spec.at(k, n) *= w;
    }
  }
  return spec.synthesize();
}

PeriodicTrajectory integrals_linear(const PeriodicTrajectory& h) {
  PeriodicTrajectory b(h.period(), h.size(), h.modes());
  const double dt = h.step();
  for (std::size_t n = 0; n < h.modes(); ++n) {
    const StepWeights w = linear_step_weights(eigenvalue(n + 1), dt);
    for (std::size_t j = 0; j < h.size(); ++j) {
      b[j][n] = w.left * h[j][n] + w.right * h.at(static_cast<long long>(j) + 1)[n];
    }
  }
  return b;
}

PeriodicTrajectory solve_linear(const PeriodicTrajectory& h) {
  const PeriodicTrajectory b = integrals_linear(h);
  PeriodicTrajectory u(h.period(), h.size(), h.modes());
  const std::size_t m = h.size();
  const double dt = h.step();
  for (std::size_t n = 0; n < h.modes(); ++n) {
    const double lambda = eigenvalue(n + 1);
    const double rho = std::exp(-lambda * dt);
    // Periodic closure: u(t_0) = sum_k rho^{M-1-k} b_k / (1 - rho^M), Horner order.
    double acc = 0.0;
    for (std::size_t k = 0; k < m; ++k) acc = rho * acc + b[k][n];
    double value = acc / -std::expm1(-lambda * h.period());
    for (std::size_t j = 0; j < m; ++j) {
      u[j][n] = value;
      value = rho * value + b[j][n];
    }
  }
  return u;
}

}  // namespace

double phi1(double z) noexcept {
  if (std::abs(z) < kSeriesSwitch) {
    // sum_k (-z)^k / (k+1)!
    double coeff = 1.0;
    for (int k = 1; k < kSeriesTerms; ++k) coeff /= k + 1;
    double sum = 0.0;
    for (int k = kSeriesTerms - 1; k >= 0; --k) {
      sum = sum * -z + coeff;
      coeff *= k + 1;
    }
    return sum;
  }
  return -std::expm1(-z) / z;
}

double psi(double z) noexcept {
  if (std::abs(z) < kSeriesSwitch) {
    // sum_k (-z)^k (k+1) / (k+2)!
    double inv_fact = 1.0;  // 1/(k+2)!
    for (int k = 0; k < kSeriesTerms; ++k) inv_fact /= k + 2;
    double sum = 0.0;
    for (int k = kSeriesTerms - 1; k >= 0; --k) {
      sum = sum * -z + (k + 1) * inv_fact;
      inv_fact *= k + 2;
    }
    return sum;
  }
  return (1.0 - std::exp(-z) * (1.0 + z)) / (z * z);
}

StepWeights linear_step_weights(double lambda, double dt) noexcept {
  const double z = lambda * dt;
  const double p1 = phi1(z);
  const double p2 = psi(z);
  return {std::exp(-z), dt * p2, dt * (p1 - p2)};
}

PeriodicTrajectory periodic_solve(const PeriodicTrajectory& h, SourceModel model) {
  return model == SourceModel::Trigonometric ? solve_trigonometric(h) : solve_linear(h);
}

PeriodicTrajectory periodic_solve(const PeriodicTrajectory& h, double period,
                                  std::size_t time_points, SourceModel model) {
  if (h.period() != period || h.size() != time_points) {
    throw std::invalid_argument("periodic_solve: forcing grid does not match the requested grid");
  }
  return periodic_solve(h, model);
}

PeriodicTrajectory step_source_integrals(const PeriodicTrajectory& h, SourceModel model) {
  return model == SourceModel::Trigonometric ? integrals_trigonometric(h) : integrals_linear(h);
}

double mild_identity_residual(const PeriodicTrajectory& u, const PeriodicTrajectory& h,
                              SourceModel model) {
  u.require_compatible(h);
  const PeriodicTrajectory b = step_source_integrals(h, model);
  const double dt = u.step();
  double worst = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const SpectralField& next = u.at(static_cast<long long>(j) + 1);
    double acc = 0.0;
    for (std::size_t n = 0; n < u.modes(); ++n) {
      const double predicted = std::exp(-eigenvalue(n + 1) * dt) * u[j][n] + b[j][n];
      const double d = next[n] - predicted;
      acc += d * d;
    }
    worst = std::max(worst, std::sqrt(acc));
  }
  return worst;
}

}  // namespace nperiod
