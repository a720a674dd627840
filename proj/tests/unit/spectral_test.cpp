#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nperiod/spectral.hpp"
#include "test_util.hpp"

using namespace nperiod;
using nperiod::test::max_abs_diff;
using nperiod::test::random_field;

namespace {

constexpr double kPi = std::numbers::pi;

GridFunction sample(std::size_t intervals, double (*fn)(double)) {
  GridFunction g(intervals);
  for (std::size_t i = 0; i < g.values.size(); ++i) g.values[i] = fn(g.node(i));
  return g;
}

// ||v'||_{L2} by the trapezoid rule including the boundary values of v',
// exact for band-limited v when 2N < 2M.
double derivative_l2(const SpectralField& v, std::size_t intervals) {
  const GridFunction d = spatial_derivative(v, intervals);
  double left = 0.0;
  double right = 0.0;
  for (std::size_t k = 0; k < v.modes(); ++k) {
    const double n = static_cast<double>(k + 1);
    left += v[k] * std::sqrt(2.0) * n * kPi;
    right += v[k] * std::sqrt(2.0) * n * kPi * ((k % 2 == 0) ? -1.0 : 1.0);
  }
  const double h = 1.0 / static_cast<double>(intervals);
  double sum = 0.5 * (left * left + right * right);
  for (double x : d.values) sum += x * x;
  return std::sqrt(h * sum);
}

}  // namespace

TEST(Spectral, EigenvaluesAndWeights) {
  EXPECT_DOUBLE_EQ(eigenvalue(1), kPi * kPi);
  EXPECT_DOUBLE_EQ(eigenvalue(3), 9.0 * kPi * kPi);
  EXPECT_DOUBLE_EQ(power_weight(2, 0.5, Convention::EigenConsistent), 2.0 * kPi);
  EXPECT_DOUBLE_EQ(power_weight(2, 0.5, Convention::Literal), 2.0);
  EXPECT_DOUBLE_EQ(power_weight(2, -1.0, Convention::Literal), 0.25);
  EXPECT_DOUBLE_EQ(power_weight(5, 0.0, Convention::Literal), 1.0);
  EXPECT_THROW(power_weight(2, 0.25, Convention::Literal), std::invalid_argument);
}

TEST(Spectral, ParabolaCoefficients) {
  // Quadrature oracle for x(1-x): 4 sqrt(2)/(n pi)^3 on odd n.
  const double expected[] = {0.18244222961109438, 0.0, 0.006757119615225718, 0.0,
                             0.0014595378368887552};
  const SpectralField c =
      forward_transform(sample(2049, [](double x) { return x * (1.0 - x); }), 5);
  for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(c[k], expected[k], 1e-7) << "n=" << k + 1;
  EXPECT_NEAR(c[1], 0.0, 1e-15);
  EXPECT_NEAR(c[3], 0.0, 1e-15);
}

TEST(Spectral, ConstantMatchesDiscreteAndContinuousCoefficients) {
  const std::size_t M = 257;
  const SpectralField c = forward_transform(sample(M, [](double) { return 1.0; }), 6);
  const double analytic[] = {0.9003163161571062, 0.3001054387190354, 0.18006326323142124};
  for (std::size_t n = 1; n <= 6; ++n) {
    const double discrete =
        n % 2 ? std::sqrt(2.0) / M / std::tan(static_cast<double>(n) * kPi / (2.0 * M)) : 0.0;
    EXPECT_NEAR(c[n - 1], discrete, 1e-14) << "n=" << n;
  }
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(c[2 * i], analytic[i], 1e-4);
}

TEST(Spectral, RoundTripOnBandLimitedFields) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const SpectralField u = random_field(64, rng, 0.0);
    const SpectralField back = forward_transform(inverse_transform(u, 257), 64);
    EXPECT_LE(max_abs_diff(u, back), 1e-12);
  }
}

TEST(Spectral, SineBasisRequiresEnoughNodes) {
  EXPECT_THROW(SineBasis(10, 10), std::invalid_argument);
  EXPECT_NO_THROW(SineBasis(10, 11));
}

TEST(Spectral, DerivativeOfFirstMode) {
  const GridFunction d = spatial_derivative(SpectralField::unit(4, 1), 65);
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    EXPECT_NEAR(d.values[i], std::sqrt(2.0) * kPi * std::cos(kPi * d.node(i)), 1e-13);
  }
}

TEST(Spectral, SemigroupValues) {
  SpectralField u(std::vector<double>{1.0, 1.0});
  const SpectralField t = semigroup_apply(0.1, u);
  EXPECT_NEAR(t[0], 0.37270783885343794, 1e-16);
  EXPECT_NEAR(t[1], 0.01929630291101678, 1e-17);
  EXPECT_EQ(semigroup_apply(0.0, u), u);
  EXPECT_THROW(semigroup_apply(-1e-3, u), std::invalid_argument);
}

TEST(Spectral, SemigroupLaw) {
  std::mt19937_64 rng(11);
  for (double s : {0.0, 1e-4, 0.01, 0.3}) {
    for (double t : {1e-3, 0.05, 1.0}) {
      const SpectralField u = random_field(64, rng);
      const SpectralField lhs = semigroup_apply(s, semigroup_apply(t, u));
      const SpectralField rhs = semigroup_apply(s + t, u);
      EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12);
    }
  }
}

TEST(Spectral, PowersCommuteWithSemigroup) {
  std::mt19937_64 rng(3);
  const SpectralField u = random_field(64, rng);
  for (double order : {-1.0, -0.5, 0.25, 0.5, 1.0}) {
    const SpectralField a = fractional_power_apply(order, semigroup_apply(0.01, u));
    const SpectralField b = semigroup_apply(0.01, fractional_power_apply(order, u));
    for (std::size_t k = 0; k < 64; ++k) EXPECT_DOUBLE_EQ(a[k], b[k]);
  }
}

TEST(Spectral, PowersCompose) {
  std::mt19937_64 rng(5);
  const SpectralField u = random_field(32, rng);
  const SpectralField half_twice =
      fractional_power_apply(0.5, fractional_power_apply(0.5, u));
  const SpectralField one = fractional_power_apply(1.0, u);
  for (std::size_t k = 0; k < 32; ++k) EXPECT_NEAR(half_twice[k], one[k], 1e-12 * std::abs(one[k]) + 1e-300);
  const SpectralField inv = fractional_power_apply(-1.0, one);
  EXPECT_LE(max_abs_diff(inv, u), 1e-15);
}

TEST(Spectral, SmoothingBound) {
  for (double alpha : {0.25, 0.5, 0.75}) {
    for (double t : {1e-4, 1e-3, 1e-2, 1e-1, 1.0}) {
      EXPECT_LE(smoothing_operator_norm(alpha, t, 2000), std::tgamma(alpha) * std::pow(t, -alpha))
          << "alpha=" << alpha << " t=" << t;
    }
  }
}

TEST(Spectral, DerivativeNormEqualsHalfPowerNorm) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const SpectralField v = random_field(64, rng, 1.0);
    EXPECT_NEAR(derivative_l2(v, 257), norm_alpha(v, 0.5), 1e-10);
  }
  const SpectralField e1 = SpectralField::unit(8, 1);
  EXPECT_NEAR(norm_alpha(e1, 0.5, Convention::Literal), 1.0, 1e-15);
  EXPECT_NEAR(norm_alpha(e1, 0.5, Convention::EigenConsistent), kPi, 1e-15);
}

TEST(Spectral, ParsevalOnTheGrid) {
  std::mt19937_64 rng(17);
  const SpectralField u = random_field(64, rng, 0.5);
  const GridFunction g = inverse_transform(u, 257);
  double sum = 0.0;
  for (double x : g.values) sum += x * x;
  EXPECT_NEAR(std::sqrt(sum / 257.0), norm_alpha(u, 0.0), 1e-12);
}

TEST(Spectral, ResolventFactor) {
  const SpectralField r = resolvent_apply(1.0, SpectralField::unit(3, 1));
  EXPECT_NEAR(r[0], 1.000051725861630185, 1e-15);
  EXPECT_THROW(resolvent_apply(0.0, r), std::invalid_argument);

  // (I - T(w))^{-1} = sum_k T(k w)
  std::mt19937_64 rng(19);
  const SpectralField u = random_field(16, rng);
  SpectralField series(16);
  for (int k = 0; k < 60; ++k) series += semigroup_apply(0.05 * k, u);
  EXPECT_LE(max_abs_diff(resolvent_apply(0.05, u), series), 1e-12);
}

TEST(Spectral, NormRejectsOrderOutsideUnitInterval) {
  const SpectralField u = SpectralField::unit(4, 2);
  EXPECT_THROW(norm_alpha(u, 1.5), std::invalid_argument);
  EXPECT_THROW(norm_alpha(u, -0.1), std::invalid_argument);
  EXPECT_DOUBLE_EQ(norm_alpha(u, 1.0), 4.0 * kPi * kPi);
  EXPECT_DOUBLE_EQ(distance_alpha(u, u, 0.5), 0.0);
}
