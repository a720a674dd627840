#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "nperiod/periodic_solver.hpp"
#include "test_util.hpp"

using namespace nperiod;
using nperiod::test::max_abs_diff;
using nperiod::test::random_field;
using nperiod::test::random_trajectory;

namespace {

constexpr double kPi = std::numbers::pi;

const SourceModel kModels[] = {SourceModel::Trigonometric, SourceModel::PiecewiseLinear};

}  // namespace

TEST(PhiFunctions, MatchHighPrecisionValues) {
  // 40-digit evaluations of the closed forms
  struct Row {
    double z, phi1, psi;
  };
  const Row rows[] = {
      {1e-8, 0.99999999500000001667, 0.49999999666666667917},
      {1e-4, 0.99995000166662500083, 0.49996666791663333403},
      {0.5, 0.78693868057473315279, 0.36081604172419945838},
      {0.999, 0.63238488026660368247, 0.2644017774303711324},
      {1.001, 0.63185639799331313682, 0.26408057181280677999},
      {3.0, 0.31673764387737868567, 0.088983525169838247565},
      {40.0, 0.024999999999999999894, 0.00062499999999999989114},
  };
  for (const Row& r : rows) {
    EXPECT_NEAR(phi1(r.z), r.phi1, 1e-15 * r.phi1) << "z=" << r.z;
    EXPECT_NEAR(psi(r.z), r.psi, 1e-15 * r.psi) << "z=" << r.z;
  }
  EXPECT_DOUBLE_EQ(phi1(0.0), 1.0);
  EXPECT_DOUBLE_EQ(psi(0.0), 0.5);
}

TEST(PhiFunctions, StepWeightsIntegrateLinearSourcesExactly) {
  // int_0^dt exp(-lambda (dt - s)) (a + b s) ds in closed form
  const double lambda = 7.0;
  const double dt = 0.3;
  const double a = 1.5;
  const double b = -2.0;
  const StepWeights w = linear_step_weights(lambda, dt);
  const double e = std::exp(-lambda * dt);
  const double exact = a * (1.0 - e) / lambda + b * (dt / lambda - (1.0 - e) / (lambda * lambda));
  EXPECT_NEAR(w.left * a + w.right * (a + b * dt), exact, 1e-15);
  EXPECT_DOUBLE_EQ(w.decay, e);
}

TEST(PeriodicSolve, ConstantForcingGivesInverseOperator) {
  std::mt19937_64 rng(29);
  const SpectralField h = random_field(64, rng, 0.0);
  const auto traj = sample_trajectory(1.0, 256, [&](double) { return h; });
  for (SourceModel model : kModels) {
    const auto u = periodic_solve(traj, model);
    const SpectralField expected = fractional_power_apply(-1.0, h);
    for (std::size_t j = 0; j < u.size(); j += 17) EXPECT_LE(max_abs_diff(u[j], expected), 1e-12);
  }
  const auto e1 = sample_trajectory(1.0, 8, [](double) { return SpectralField::unit(3, 1); });
  EXPECT_NEAR(periodic_solve(e1)[5][0], 1.0 / (kPi * kPi), 1e-16);
}

TEST(PeriodicSolve, SinusoidalForcingMatchesClosedForm) {
  const double omega = 1.0;
  const double nu = 2.0 * kPi / omega;
  const std::size_t N = 64;
  // h_n(t) = cos(k nu t) on mode n; periodic response (lambda cos + k nu sin)/(lambda^2 + (k nu)^2)
  for (std::size_t n : {1u, 4u, 64u}) {
    for (double k : {1.0, 5.0, 100.0}) {
      const auto h = sample_trajectory(omega, 256, [&](double t) {
        return std::cos(k * nu * t) * SpectralField::unit(N, n);
      });
      const auto u = periodic_solve(h);
      const double lambda = eigenvalue(n);
      const double w = k * nu;
      double err = 0.0;
      for (std::size_t j = 0; j < u.size(); ++j) {
        const double t = u.time(j);
        const double exact =
            (lambda * std::cos(w * t) + w * std::sin(w * t)) / (lambda * lambda + w * w);
        err = std::max(err, std::abs(u[j][n - 1] - exact));
      }
      EXPECT_LE(err, 1e-10) << "n=" << n << " k=" << k;
    }
  }
}

TEST(PeriodicSolve, PiecewiseLinearModelIsSecondOrder) {
  double previous = 0.0;
  for (std::size_t M : {32u, 64u, 128u}) {
    const auto h = sample_trajectory(1.0, M, [](double t) {
      return std::sin(2.0 * kPi * t) * SpectralField::unit(1, 1);
    });
    const auto u = periodic_solve(h, SourceModel::PiecewiseLinear);
    const double lambda = kPi * kPi;
    const double w = 2.0 * kPi;
    double err = 0.0;
    for (std::size_t j = 0; j < M; ++j) {
      const double t = u.time(j);
      const double exact = (lambda * std::sin(w * t) - w * std::cos(w * t)) / (lambda * lambda + w * w);
      err = std::max(err, std::abs(u[j][0] - exact));
    }
    if (previous > 0.0) {
      EXPECT_NEAR(previous / err, 4.0, 0.3);
    }
    previous = err;
  }
}

TEST(PeriodicSolve, MildIdentityResidualIsRoundOff) {
  std::mt19937_64 rng(31);
  for (SourceModel model : kModels) {
    for (double omega : {0.1, 1.0, 3.0}) {
      const auto h = random_trajectory(omega, 256, 64, rng, 0.0);
      const auto u = periodic_solve(h, model);
      EXPECT_LE(mild_identity_residual(u, h, model), 1e-12) << "omega=" << omega;
    }
  }
}

TEST(PeriodicSolve, Linearity) {
  std::mt19937_64 rng(37);
  const auto h1 = random_trajectory(1.0, 64, 16, rng);
  const auto h2 = random_trajectory(1.0, 64, 16, rng);
  for (SourceModel model : kModels) {
    const auto lhs = periodic_solve(2.5 * h1 - 0.75 * h2, model);
    const auto rhs = 2.5 * periodic_solve(h1, model) - 0.75 * periodic_solve(h2, model);
    EXPECT_LE(trajectory_distance(lhs, rhs, 0.0), 1e-12);
  }
}

TEST(PeriodicSolve, ShiftEquivariance) {
  std::mt19937_64 rng(41);
  const auto h = random_trajectory(1.0, 64, 16, rng);
  for (SourceModel model : kModels) {
    for (long long k : {1LL, 7LL, -20LL}) {
      const auto lhs = periodic_solve(shift_steps(h, k), model);
      const auto rhs = shift_steps(periodic_solve(h, model), k);
      EXPECT_LE(trajectory_distance(lhs, rhs, 0.0), 1e-13);
    }
  }
}

TEST(PeriodicSolve, ModesAreBoundedByForcingOverEigenvalue) {
  std::mt19937_64 rng(43);
  struct Case {
    SourceModel model;
    double omega;
  };
  for (const Case c : {Case{SourceModel::PiecewiseLinear, 1.0},
                       Case{SourceModel::PiecewiseLinear, 0.1},
                       Case{SourceModel::Trigonometric, 1.0}}) {
    // smooth in time so the trigonometric interpolant does not overshoot
    const SpectralField a = random_field(16, rng, 0.0);
    const SpectralField b = random_field(16, rng, 0.0);
    const auto h = sample_trajectory(c.omega, 64, [&](double t) {
      return a + std::sin(2.0 * kPi * t / c.omega) * b;
    });
    const auto u = periodic_solve(h, c.model);
    for (std::size_t k = 0; k < 16; ++k) {
      double hmax = 0.0;
      double umax = 0.0;
      for (std::size_t j = 0; j < 64; ++j) {
        hmax = std::max(hmax, std::abs(h[j][k]));
        umax = std::max(umax, std::abs(u[j][k]));
      }
      EXPECT_LE(umax, hmax / eigenvalue(k + 1) * (1.0 + 1e-12)) << "mode " << k + 1;
    }
  }
}

TEST(PeriodicSolve, GridMismatchThrows) {
  const PeriodicTrajectory h(1.0, 16, 4);
  EXPECT_THROW(periodic_solve(h, 1.0, 32), std::invalid_argument);
  EXPECT_THROW(periodic_solve(h, 2.0, 16), std::invalid_argument);
  EXPECT_NO_THROW(periodic_solve(h, 1.0, 16));
}
