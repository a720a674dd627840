#pragma once
// Method-of-steps integration of the neutral equation from an initial
// history. Works on v = u - G(t, u(t - xi)), which satisfies
//   v' + Av = F(t, u, u(t - tau)) - AG(t, u(t - xi)),
// with a second-order exponential predictor-corrector per mode, then
// recovers u = v + G(t, u(t - xi)).

#include <cstddef>
#include <functional>
#include <vector>

#include "nperiod/problem.hpp"

namespace nperiod {

/// Samples of u on the uniform grid t = -duration + i*step, i = 0..count-1,
/// ending at t = 0.
class HistorySegment {
 public:
  HistorySegment(double duration, double step, std::vector<SpectralField> fields);

  static HistorySegment from_function(double duration, double step,
                                      const std::function<SpectralField(double)>& fn);
  static HistorySegment from_periodic(const PeriodicTrajectory& u, double duration, double step,
                                      Interpolation rule = Interpolation::Trigonometric);
  static HistorySegment constant(double duration, double step, const SpectralField& value);

  double duration() const noexcept { return duration_; }
  double step() const noexcept { return step_; }
  std::size_t size() const noexcept { return fields_.size(); }
  std::size_t modes() const noexcept { return fields_.front().modes(); }
  double time(std::size_t i) const noexcept;
  const std::vector<SpectralField>& fields() const noexcept { return fields_; }

 private:
  double duration_;
  double step_;
  std::vector<SpectralField> fields_;
};

/// u at t_n = n*dt, n = 0..steps.
class IvpTrajectory {
 public:
  IvpTrajectory(double dt, std::vector<SpectralField> states)
      : dt_(dt), states_(std::move(states)) {}

  double dt() const noexcept { return dt_; }
  std::size_t size() const noexcept { return states_.size(); }
  double time(std::size_t n) const noexcept { return static_cast<double>(n) * dt_; }
  double horizon() const noexcept { return time(states_.size() - 1); }
  const SpectralField& operator[](std::size_t n) const { return states_[n]; }
  const SpectralField& final_state() const { return states_.back(); }
  const std::vector<SpectralField>& states() const noexcept { return states_; }

 private:
  double dt_;
  std::vector<SpectralField> states_;
};

/// Integrates on [0, horizon]. The history must cover the (reduced) delays
/// and be sampled with spacing dt; horizon must be a whole number of steps
/// and dt may not exceed the smallest positive delay. Delays that are not
/// multiples of dt are read by linear interpolation, which Interpolation::Strict
/// forbids. Throws std::invalid_argument for violated preconditions and
/// nperiod::Error for a non-finite state.
IvpTrajectory simulate(const NeutralProblem& problem, const HistorySegment& history,
                       double horizon, double dt);

/// For each whole period window [p*omega, (p+1)*omega], the largest
/// ||u(t_n) - u_per(t_n mod omega)||_alpha over the samples in it.
std::vector<double> distance_to_periodic(const IvpTrajectory& traj,
                                         const PeriodicTrajectory& u_per, double alpha,
                                         Convention convention = Convention::EigenConsistent,
                                         Interpolation rule = Interpolation::Trigonometric);

}  // namespace nperiod
