#include "nperiod/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nperiod {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

void require_same_modes(const SpectralField& a, const SpectralField& b) {
  if (a.modes() != b.modes()) {
    throw std::invalid_argument("spectral fields differ in mode count: " +
                                std::to_string(a.modes()) + " vs " + std::to_string(b.modes()));
  }
}

bool is_half_integer_order(double order) {
  return order == 0.0 || order == 0.5 || order == -0.5 || order == 1.0 || order == -1.0;
}

}  // namespace

SpectralField SpectralField::unit(std::size_t modes, std::size_t n) {
  if (n == 0 || n > modes) {
    throw std::invalid_argument("unit: mode " + std::to_string(n) + " outside 1.." +
                                std::to_string(modes));
  }
  SpectralField e(modes);
  e.coeffs[n - 1] = 1.0;
  return e;
}

bool SpectralField::is_finite() const noexcept {
  return std::all_of(coeffs.begin(), coeffs.end(), [](double c) { return std::isfinite(c); });
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_modes(*this, other);
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += other.coeffs[k];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_modes(*this, other);
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] -= other.coeffs[k];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (double& c : coeffs) c *= s;
  return *this;
}

SpectralField& SpectralField::axpy(double s, const SpectralField& other) {
  require_same_modes(*this, other);
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += s * other.coeffs[k];
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double s, SpectralField a) { return a *= s; }

double eigenvalue(std::size_t n) noexcept {
  const double k = static_cast<double>(n) * kPi;
  return k * k;
}

double power_weight(std::size_t n, double order, Convention convention) {
  if (order < -1.0 || order > 1.0) {
    throw std::invalid_argument("fractional power order must lie in [-1, 1]");
  }
  if (order == 0.0) return 1.0;
  if (convention == Convention::EigenConsistent) {
    return std::pow(eigenvalue(n), order);
  }
  if (!is_half_integer_order(order)) {
    throw std::invalid_argument("literal convention defines only orders 0, +-1/2, +-1");
  }
  // A^{1/2} -> n, so A -> n^2 within this convention
  return std::pow(static_cast<double>(n), 2.0 * order);
}

SineBasis::SineBasis(std::size_t modes, std::size_t intervals)
    : modes_(modes), intervals_(intervals) {
  if (intervals < 2 || intervals - 1 < modes) {
    throw std::invalid_argument("sine basis needs intervals - 1 >= modes (got " +
                                std::to_string(intervals) + " intervals, " +
                                std::to_string(modes) + " modes)");
  }
  const std::size_t nodes = intervals - 1;
  sin_.resize(modes * nodes);
  cos_.resize(modes * nodes);
  const std::size_t period = 2 * intervals;
  for (std::size_t n = 1; n <= modes; ++n) {
    const double scale = kSqrt2 * static_cast<double>(n) * kPi;
    for (std::size_t i = 1; i <= nodes; ++i) {
      // Reduce n*i modulo the period first so equal phases give equal bits.
      const std::size_t phase = (n * i) % period;
      const double angle = kPi * static_cast<double>(phase) / static_cast<double>(intervals);
      sin_[(n - 1) * nodes + (i - 1)] = kSqrt2 * std::sin(angle);
      cos_[(n - 1) * nodes + (i - 1)] = scale * std::cos(angle);
    }
  }
}

void SineBasis::inverse_into(std::span<const double> coeffs, std::span<double> values) const {
  const std::size_t nodes = intervals_ - 1;
  std::fill(values.begin(), values.end(), 0.0);
  const std::size_t used = std::min(coeffs.size(), modes_);
  for (std::size_t k = 0; k < used; ++k) {
    const double c = coeffs[k];
    if (c == 0.0) continue;
    const double* row = sin_.data() + k * nodes;
    for (std::size_t i = 0; i < nodes; ++i) values[i] += c * row[i];
  }
}

void SineBasis::derivative_into(std::span<const double> coeffs, std::span<double> values) const {
  const std::size_t nodes = intervals_ - 1;
  std::fill(values.begin(), values.end(), 0.0);
  const std::size_t used = std::min(coeffs.size(), modes_);
  for (std::size_t k = 0; k < used; ++k) {
    const double c = coeffs[k];
    if (c == 0.0) continue;
    const double* row = cos_.data() + k * nodes;
    for (std::size_t i = 0; i < nodes; ++i) values[i] += c * row[i];
  }
}

void SineBasis::forward_into(std::span<const double> values, std::span<double> coeffs) const {
  const std::size_t nodes = intervals_ - 1;
  const double h = 1.0 / static_cast<double>(intervals_);
  for (std::size_t k = 0; k < modes_; ++k) {
    const double* row = sin_.data() + k * nodes;
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) acc += values[i] * row[i];
    coeffs[k] = h * acc;
  }
}

SpectralField SineBasis::forward(const GridFunction& g) const {
  if (g.intervals() != intervals_) {
    throw std::invalid_argument("forward transform: grid has " + std::to_string(g.intervals()) +
                                " intervals, basis expects " + std::to_string(intervals_));
  }
  SpectralField u(modes_);
  forward_into(g.values, u.coeffs);
  return u;
}

GridFunction SineBasis::inverse(const SpectralField& u) const {
  if (u.modes() > modes_) {
    throw std::invalid_argument("inverse transform: field has more modes than the basis");
  }
  GridFunction g(intervals_);
  inverse_into(u.coeffs, g.values);
  return g;
}

GridFunction SineBasis::derivative(const SpectralField& u) const {
  if (u.modes() > modes_) {
    throw std::invalid_argument("spatial derivative: field has more modes than the basis");
  }
  GridFunction g(intervals_);
  derivative_into(u.coeffs, g.values);
  return g;
}

SpectralField forward_transform(const GridFunction& g, std::size_t modes) {
  if (g.values.empty() || g.values.size() < modes) {
    throw std::invalid_argument("forward transform needs at least as many interior nodes as modes");
  }
  return SineBasis(modes, g.intervals()).forward(g);
}

namespace {

// Direct synthesis without a basis table; used when the grid is too coarse
// for a SineBasis (inverse transforms have no mode/grid precondition).
GridFunction synthesize(const SpectralField& u, std::size_t intervals, bool derivative) {
  GridFunction g(intervals);
  const std::size_t period = 2 * intervals;
  for (std::size_t i = 1; i < intervals; ++i) {
    double acc = 0.0;
    for (std::size_t n = 1; n <= u.modes(); ++n) {
      const double angle =
          kPi * static_cast<double>((n * i) % period) / static_cast<double>(intervals);
      acc += derivative ? u.coeffs[n - 1] * kSqrt2 * static_cast<double>(n) * kPi * std::cos(angle)
                        : u.coeffs[n - 1] * kSqrt2 * std::sin(angle);
    }
    g.values[i - 1] = acc;
  }
  return g;
}

}  // namespace

GridFunction inverse_transform(const SpectralField& u, std::size_t intervals) {
  if (intervals < 2) throw std::invalid_argument("inverse transform needs at least 2 intervals");
  return synthesize(u, intervals, false);
}

GridFunction spatial_derivative(const SpectralField& u, std::size_t intervals) {
  if (intervals < 2) throw std::invalid_argument("spatial derivative needs at least 2 intervals");
  return synthesize(u, intervals, true);
}

SpectralField semigroup_apply(double t, const SpectralField& u) {
  if (!(t >= 0.0)) throw std::invalid_argument("semigroup time must be non-negative");
  SpectralField out = u;
  for (std::size_t k = 0; k < out.modes(); ++k) out.coeffs[k] *= std::exp(-eigenvalue(k + 1) * t);
  return out;
}

SpectralField fractional_power_apply(double order, const SpectralField& u, Convention convention) {
  SpectralField out = u;
  for (std::size_t k = 0; k < out.modes(); ++k) {
    out.coeffs[k] *= power_weight(k + 1, order, convention);
  }
  return out;
}

SpectralField resolvent_apply(double omega, const SpectralField& u) {
  if (!(omega > 0.0)) throw std::invalid_argument("resolvent period must be positive");
  SpectralField out = u;
  for (std::size_t k = 0; k < out.modes(); ++k) {
    out.coeffs[k] /= -std::expm1(-eigenvalue(k + 1) * omega);
  }
  return out;
}

double norm_alpha(const SpectralField& u, double alpha, Convention convention) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  double acc = 0.0;
  for (std::size_t k = 0; k < u.modes(); ++k) {
    const double v = power_weight(k + 1, alpha, convention) * u.coeffs[k];
    acc += v * v;
  }
  return std::sqrt(acc);
}

double distance_alpha(const SpectralField& a, const SpectralField& b, double alpha,
                      Convention convention) {
  require_same_modes(a, b);
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  double acc = 0.0;
  for (std::size_t k = 0; k < a.modes(); ++k) {
    const double v = power_weight(k + 1, alpha, convention) * (a.coeffs[k] - b.coeffs[k]);
    acc += v * v;
  }
  return std::sqrt(acc);
}

double smoothing_operator_norm(double alpha, double t, std::size_t modes) {
  double best = 0.0;
  for (std::size_t n = 1; n <= modes; ++n) {
    const double lambda = eigenvalue(n);
    best = std::max(best, std::pow(lambda, alpha) * std::exp(-lambda * t));
  }
  return best;
}

}  // namespace nperiod
