#include <benchmark/benchmark.h>

#include <random>

#include "nperiod/fixed_point.hpp"
#include "nperiod/ivp.hpp"
#include "nperiod/periodic_solver.hpp"
#include "nperiod/registry.hpp"
#include "nperiod/spectral.hpp"

using namespace nperiod;

namespace {

SpectralField noise(std::size_t modes, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  SpectralField u(modes);
  for (auto& c : u.coeffs) c = normal(rng);
  return u;
}

ProblemParams example(std::size_t modes, std::size_t points) {
  ProblemParams p;
  p.name = "example51";
  p.tau = 0.3;
  p.xi = 0.2;
  p.grid = {modes, points, 4 * modes + 1};
  p.constants.a0 = 0.01;
  p.constants.a1 = 0.01;
  p.constants.L = 0.01;
  p.constants.K = 1.0;
  p.convention = Convention::Literal;
  return p;
}

void BM_SineSynthesis(benchmark::State& state) {
  const auto modes = static_cast<std::size_t>(state.range(0));
  const SineBasis basis(modes, 4 * modes + 1);
  std::mt19937_64 rng(1);
  const SpectralField u = noise(modes, rng);
  for (auto _ : state) benchmark::DoNotOptimize(basis.inverse(u));
}
BENCHMARK(BM_SineSynthesis)->RangeMultiplier(2)->Range(16, 256);

void BM_SineAnalysis(benchmark::State& state) {
  const auto modes = static_cast<std::size_t>(state.range(0));
  const SineBasis basis(modes, 4 * modes + 1);
  std::mt19937_64 rng(2);
  const GridFunction g = basis.inverse(noise(modes, rng));
  for (auto _ : state) benchmark::DoNotOptimize(basis.forward(g));
}
BENCHMARK(BM_SineAnalysis)->RangeMultiplier(2)->Range(16, 256);

void BM_PeriodicSolve(benchmark::State& state) {
  const auto points = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::vector<SpectralField> fields;
  for (std::size_t j = 0; j < points; ++j) fields.push_back(noise(64, rng));
  const PeriodicTrajectory h(1.0, std::move(fields));
  for (auto _ : state) benchmark::DoNotOptimize(periodic_solve(h));
}
BENCHMARK(BM_PeriodicSolve)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMicrosecond);

void BM_ApplyQ(benchmark::State& state) {
  const NeutralProblem problem(make_problem(example(64, static_cast<std::size_t>(state.range(0)))));
  const PeriodicTrajectory u = problem.zero_trajectory();
  for (auto _ : state) benchmark::DoNotOptimize(apply_Q(problem, u));
}
BENCHMARK(BM_ApplyQ)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SimulateOnePeriod(benchmark::State& state) {
  const NeutralProblem problem(make_problem(example(static_cast<std::size_t>(state.range(0)), 64)));
  const double dt = 1e-3;
  const auto history = HistorySegment::constant(0.3, dt, SpectralField(problem.modes()));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(problem, history, 1.0, dt));
}
BENCHMARK(BM_SimulateOnePeriod)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
