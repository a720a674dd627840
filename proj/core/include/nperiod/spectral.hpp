#pragma once

// Eigen-expansion calculus for A = -d^2/dx^2 on (0,1) with Dirichlet
// boundary conditions. Eigenpairs are lambda_n = n^2 pi^2 and
// e_n(x) = sqrt(2) sin(n pi x); every operator here is diagonal in that basis.

#include <cstddef>
#include <span>
#include <vector>

namespace nperiod {

/// Which eigenvalues A^{1/2} is given.
///
/// EigenConsistent uses sqrt(lambda_n) = n*pi, the only choice compatible
/// with ||v'|| = ||A^{1/2} v||. Literal uses sqrt(lambda_n) = n, which
/// reproduces ||A^{-1/2}|| = 1 and the constants quoted for the model
/// problem. Only orders 0, +-1/2 and +-1 exist in the literal convention.
enum class Convention { EigenConsistent, Literal };

/// Element of X = L^2(0,1) truncated to span{e_1, ..., e_N}.
/// coeffs[k] is the coefficient of e_{k+1}.
struct SpectralField {
  std::vector<double> coeffs;

  SpectralField() = default;
  explicit SpectralField(std::size_t modes) : coeffs(modes, 0.0) {}
  explicit SpectralField(std::vector<double> c) : coeffs(std::move(c)) {}

  /// The basis vector e_n (1-based mode index).
  static SpectralField unit(std::size_t modes, std::size_t n);

  std::size_t modes() const noexcept { return coeffs.size(); }
  double operator[](std::size_t k) const { return coeffs[k]; }
  double& operator[](std::size_t k) { return coeffs[k]; }

  bool is_finite() const noexcept;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double s);

  /// this += s * other
  SpectralField& axpy(double s, const SpectralField& other);

  friend bool operator==(const SpectralField&, const SpectralField&) = default;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField a);

/// Samples at the interior nodes x_i = i/M, i = 1..M-1, of a uniform grid
/// with M intervals. Boundary values are zero and not stored.
struct GridFunction {
  std::vector<double> values;

  GridFunction() = default;
  explicit GridFunction(std::size_t intervals) : values(intervals > 0 ? intervals - 1 : 0, 0.0) {}

  std::size_t intervals() const noexcept { return values.size() + 1; }
  double node(std::size_t i) const noexcept {
    return static_cast<double>(i + 1) / static_cast<double>(intervals());
  }
};

/// lambda_n = n^2 pi^2.
double eigenvalue(std::size_t n) noexcept;

/// Multiplier of e_n under A^{order} in the given convention.
double power_weight(std::size_t n, double order, Convention convention);

/// Tables for the sine transform between a fixed number of modes and a fixed
/// grid. Immutable after construction; safe to share across threads.
class SineBasis {
 public:
  /// Requires intervals - 1 >= modes.
  SineBasis(std::size_t modes, std::size_t intervals);

  std::size_t modes() const noexcept { return modes_; }
  std::size_t intervals() const noexcept { return intervals_; }

  /// Discrete sine analysis (DST-I, trapezoid rule for (g, e_n)).
  SpectralField forward(const GridFunction& g) const;
  /// Synthesis sum_n c_n e_n(x_i).
  GridFunction inverse(const SpectralField& u) const;
  /// Pointwise d/dx of the expansion at the interior nodes.
  GridFunction derivative(const SpectralField& u) const;

  void inverse_into(std::span<const double> coeffs, std::span<double> values) const;
  void derivative_into(std::span<const double> coeffs, std::span<double> values) const;
  void forward_into(std::span<const double> values, std::span<double> coeffs) const;

 private:
  std::size_t modes_;
  std::size_t intervals_;
  std::vector<double> sin_;  // modes x (intervals-1), e_n(x_i)
  std::vector<double> cos_;  // modes x (intervals-1), e_n'(x_i)
};

SpectralField forward_transform(const GridFunction& g, std::size_t modes);
GridFunction inverse_transform(const SpectralField& u, std::size_t intervals);
GridFunction spatial_derivative(const SpectralField& u, std::size_t intervals);

/// T(t)u = sum exp(-lambda_n t) (u, e_n) e_n. Rejects t < 0.
SpectralField semigroup_apply(double t, const SpectralField& u);

/// A^{order} u for order in [-1, 1].
SpectralField fractional_power_apply(double order, const SpectralField& u,
                                     Convention convention = Convention::EigenConsistent);

/// (I - T(omega))^{-1} u. Rejects omega <= 0.
SpectralField resolvent_apply(double omega, const SpectralField& u);

/// ||u||_alpha = ||A^alpha u||, alpha in [0, 1].
double norm_alpha(const SpectralField& u, double alpha,
                  Convention convention = Convention::EigenConsistent);

/// ||a - b||_alpha without forming the difference.
double distance_alpha(const SpectralField& a, const SpectralField& b, double alpha,
                      Convention convention = Convention::EigenConsistent);

/// Operator norm of A^alpha T(t) on the first `modes` modes:
/// max_n lambda_n^alpha exp(-lambda_n t).
double smoothing_operator_norm(double alpha, double t, std::size_t modes);

}  // namespace nperiod
