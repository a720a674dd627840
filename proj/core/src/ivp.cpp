#include "nperiod/ivp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nperiod/errors.hpp"
#include "nperiod/periodic_solver.hpp"

namespace nperiod {

namespace {

constexpr double kGridSnap = 1e-9;

std::size_t sample_count(double duration, double step) {
  if (!(step > 0.0) || !(duration >= 0.0)) {
    throw std::invalid_argument("history needs a positive step and a non-negative duration");
  }
  const double ratio = duration / step;
  const double whole = std::round(ratio);
  if (std::abs(ratio - whole) > kGridSnap * std::max(1.0, ratio)) {
    throw std::invalid_argument("history duration must be a whole number of steps");
  }
  return static_cast<std::size_t>(whole) + 1;
}

// Delay expressed in steps: an exact integer shift or a fractional one.
struct Lag {
  std::size_t whole = 0;
  double frac = 0.0;
};

Lag make_lag(double delay, double dt, Interpolation rule, const char* name) {
  const double r = delay / dt;
  const double nearest = std::round(r);
  if (std::abs(r - nearest) <= kGridSnap * std::max(1.0, r)) {
    return {static_cast<std::size_t>(nearest), 0.0};
  }
  if (rule == Interpolation::Strict) {
    throw std::invalid_argument(std::string(name) + " is not a multiple of dt in strict mode");
  }
  const double fl = std::floor(r);
  return {static_cast<std::size_t>(fl), r - fl};
}

// Time-ordered samples covering history and integrated states. Index 0 is
// the oldest history node; index `offset + n` is t_n.
class Buffer {
 public:
  Buffer(const HistorySegment& history, std::size_t steps) : offset_(history.size() - 1) {
    data_.reserve(history.size() + steps);
    data_ = history.fields();
  }
  void push(SpectralField s) { data_.push_back(std::move(s)); }
  const SpectralField& state(std::size_t n) const { return data_[offset_ + n]; }
  std::vector<SpectralField> states() const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(offset_), data_.end()};
  }

  // u(t_n - lag*dt); requires the lag to reach back at least one step when
  // it is fractional, so every sample read is already known.
  SpectralField lagged(std::size_t n, const Lag& lag) const {
    const std::size_t hi = offset_ + n - lag.whole;
    if (lag.frac == 0.0) return data_[hi];
    SpectralField out = data_[hi];
    out *= 1.0 - lag.frac;
    out.axpy(lag.frac, data_[hi - 1]);
    return out;
  }

 private:
  std::size_t offset_;
  std::vector<SpectralField> data_;
};

}  // namespace

HistorySegment::HistorySegment(double duration, double step, std::vector<SpectralField> fields)
    : duration_(duration), step_(step), fields_(std::move(fields)) {
  if (fields_.size() != sample_count(duration, step)) {
    throw std::invalid_argument("history field count does not match duration/step");
  }
  for (const auto& f : fields_) {
    if (f.modes() != fields_.front().modes()) {
      throw std::invalid_argument("history fields have different mode counts");
    }
  }
}

double HistorySegment::time(std::size_t i) const noexcept {
  return -duration_ + static_cast<double>(i) * step_;
}

HistorySegment HistorySegment::from_function(double duration, double step,
                                             const std::function<SpectralField(double)>& fn) {
  const std::size_t count = sample_count(duration, step);
  std::vector<SpectralField> fields;
  fields.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    fields.push_back(fn(-duration + static_cast<double>(i) * step));
  }
  return HistorySegment(duration, step, std::move(fields));
}

HistorySegment HistorySegment::from_periodic(const PeriodicTrajectory& u, double duration,
                                             double step, Interpolation rule) {
  return from_function(duration, step, [&](double t) { return evaluate(u, t, rule); });
}

HistorySegment HistorySegment::constant(double duration, double step, const SpectralField& value) {
  return from_function(duration, step, [&](double) { return value; });
}

IvpTrajectory simulate(const NeutralProblem& problem, const HistorySegment& history,
                       double horizon, double dt) {
  const ProblemSpec& spec = problem.spec();
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon must be positive");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (std::abs(history.step() - dt) > kGridSnap * dt) {
    throw std::invalid_argument("history spacing must equal dt");
  }
  if (history.modes() != problem.modes()) {
    throw std::invalid_argument("history mode count does not match the problem");
  }
  const double d = std::max(spec.tau, spec.xi);
  if (history.duration() < d - kGridSnap * std::max(1.0, d)) {
    throw std::invalid_argument("history is shorter than the largest delay");
  }
  for (double delay : {spec.tau, spec.xi}) {
    if (delay > 0.0 && dt > delay * (1.0 + kGridSnap)) {
      throw std::invalid_argument("dt must not exceed the smallest positive delay");
    }
  }
  const double ratio = horizon / dt;
  const double whole = std::round(ratio);
  if (std::abs(ratio - whole) > kGridSnap * std::max(1.0, ratio)) {
    throw std::invalid_argument("horizon must be a whole number of steps");
  }
  const auto steps = static_cast<std::size_t>(whole);

  const Lag lag_tau = make_lag(spec.tau, dt, spec.interpolation, "tau");
  const Lag lag_xi = make_lag(spec.xi, dt, spec.interpolation, "xi");
  const bool tau_zero = lag_tau.whole == 0 && lag_tau.frac == 0.0;
  const bool xi_zero = lag_xi.whole == 0 && lag_xi.frac == 0.0;

  const std::size_t N = problem.modes();
  std::vector<StepWeights> w(N);
  std::vector<double> dt_phi1(N);
  for (std::size_t k = 0; k < N; ++k) {
    const double lambda = eigenvalue(k + 1);
    w[k] = linear_step_weights(lambda, dt);
    dt_phi1[k] = dt * phi1(lambda * dt);
  }

  Buffer buf(history, steps);

  // Source S and G at a known state u_n.
  auto source = [&](double t, const SpectralField& u, const SpectralField& u_tau,
                    const SpectralField& u_xi) {
    SpectralField s = problem.eval_F(u, u_tau, t);
    s -= problem.eval_AG(u_xi, t);
    return s;
  };

  SpectralField u_n = buf.state(0);
  SpectralField u_xi_n = xi_zero ? u_n : buf.lagged(0, lag_xi);
  SpectralField v_n = u_n - problem.eval_G(u_xi_n, 0.0);

  for (std::size_t n = 0; n < steps; ++n) {
    const double t = static_cast<double>(n) * dt;
    const double t1 = static_cast<double>(n + 1) * dt;

    const SpectralField u_tau_n = tau_zero ? u_n : buf.lagged(n, lag_tau);
    const SpectralField S_n = source(t, u_n, u_tau_n, u_xi_n);

    SpectralField v_pred(N);
    for (std::size_t k = 0; k < N; ++k) v_pred[k] = w[k].decay * v_n[k] + dt_phi1[k] * S_n[k];

    // Delayed arguments at t_{n+1} come from known samples unless a delay is zero,
    // in which case the predicted state stands in for one fixed-point sweep.
    SpectralField u_xi_1 = xi_zero ? SpectralField() : buf.lagged(n + 1, lag_xi);
    SpectralField u_pred = v_pred + problem.eval_G(xi_zero ? u_n : u_xi_1, t1);
    if (xi_zero) u_xi_1 = u_pred;
    const SpectralField u_tau_1 = tau_zero ? u_pred : buf.lagged(n + 1, lag_tau);
    const SpectralField S_pred = source(t1, u_pred, u_tau_1, u_xi_1);

    SpectralField v_next(N);
    for (std::size_t k = 0; k < N; ++k) {
      v_next[k] = w[k].decay * v_n[k] + w[k].left * S_n[k] + w[k].right * S_pred[k];
    }
    SpectralField u_next = v_next + problem.eval_G(u_xi_1, t1);
    if (!u_next.is_finite()) {
      throw Error("state became non-finite at t = " + std::to_string(t1));
    }

    buf.push(u_next);
    u_n = std::move(u_next);
    v_n = std::move(v_next);
    u_xi_n = xi_zero ? u_n : std::move(u_xi_1);
  }
  return IvpTrajectory(dt, buf.states());
}

std::vector<double> distance_to_periodic(const IvpTrajectory& traj,
                                         const PeriodicTrajectory& u_per, double alpha,
                                         Convention convention, Interpolation rule) {
  const double omega = u_per.period();
  const double dt = traj.dt();
  const auto periods = static_cast<std::size_t>(std::floor(traj.horizon() / omega + kGridSnap));

  // When a period is a whole number of steps, the periodic values repeat
  // every K samples and are computed once.
  const double ratio = omega / dt;
  const double whole = std::round(ratio);
  const bool aligned = std::abs(ratio - whole) <= kGridSnap * ratio && whole >= 1.0;
  std::vector<SpectralField> phase;
  if (aligned) {
    const auto K = static_cast<std::size_t>(whole);
    if (rule == Interpolation::Trigonometric) {
      phase = resample(u_per, K).fields();
    } else {
      phase.reserve(K);
      for (std::size_t i = 0; i < K; ++i) {
        phase.push_back(evaluate(u_per, static_cast<double>(i) * dt, rule));
      }
    }
  }

  std::vector<double> out(periods, 0.0);
  for (std::size_t n = 0; n < traj.size(); ++n) {
    const double t = traj.time(n);
    const double pos = t / omega;
    auto p_hi = static_cast<std::size_t>(std::floor(pos + kGridSnap));
    const bool boundary = std::abs(pos - std::round(pos)) <= kGridSnap;
    SpectralField ref = aligned ? phase[n % phase.size()] : evaluate(u_per, t, rule);
    const double dist = distance_alpha(traj[n], ref, alpha, convention);
    // A sample on a period boundary belongs to both adjacent windows.
    if (p_hi < periods) out[p_hi] = std::max(out[p_hi], dist);
    if (boundary && p_hi >= 1 && p_hi - 1 < periods) out[p_hi - 1] = std::max(out[p_hi - 1], dist);
  }
  return out;
}

}  // namespace nperiod
