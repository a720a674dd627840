#include "nperiod/trajectory.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <tuple>

#include "nperiod/detail/time_spectrum.hpp"

namespace nperiod {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// FFTW's planner is not reentrant; execution with the new-array interface is.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan forward(std::size_t n, std::size_t howmany) { return get(n, howmany, true); }
  fftw_plan backward(std::size_t n, std::size_t howmany) { return get(n, howmany, false); }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  fftw_plan get(std::size_t n, std::size_t howmany, bool forward) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_tuple(n, howmany, forward);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    const int len = static_cast<int>(n);
    const int count = static_cast<int>(howmany);
    const std::size_t bins = n / 2 + 1;
    std::vector<double> real(n * howmany);
    std::vector<fftw_complex> spec(bins * howmany);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan plan =
        forward ? fftw_plan_many_dft_r2c(1, &len, count, real.data(), nullptr, count, 1,
                                         spec.data(), nullptr, count, 1, flags)
                : fftw_plan_many_dft_c2r(1, &len, count, spec.data(), nullptr, count, 1,
                                         real.data(), nullptr, count, 1, flags | FFTW_DESTROY_INPUT);
    if (plan == nullptr) throw std::runtime_error("FFTW failed to create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

  std::mutex mutex_;
  std::map<std::tuple<std::size_t, std::size_t, bool>, fftw_plan> plans_;
};

double wrap_time(double t, double period) {
  double r = std::fmod(t, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

}  // namespace

PeriodicTrajectory::PeriodicTrajectory(double period, std::size_t time_points, std::size_t modes)
    : period_(period), fields_(time_points, SpectralField(modes)) {
  if (!(period > 0.0)) throw std::invalid_argument("trajectory period must be positive");
  if (time_points == 0) throw std::invalid_argument("trajectory needs at least one time point");
}

PeriodicTrajectory::PeriodicTrajectory(double period, std::vector<SpectralField> fields)
    : period_(period), fields_(std::move(fields)) {
  if (!(period > 0.0)) throw std::invalid_argument("trajectory period must be positive");
  if (fields_.empty()) throw std::invalid_argument("trajectory needs at least one time point");
  const std::size_t n = fields_.front().modes();
  for (const auto& f : fields_) {
    if (f.modes() != n) throw std::invalid_argument("trajectory fields must share the mode count");
  }
}

const SpectralField& PeriodicTrajectory::at(long long j) const {
  const auto m = static_cast<long long>(fields_.size());
  long long r = j % m;
  if (r < 0) r += m;
  return fields_[static_cast<std::size_t>(r)];
}

void PeriodicTrajectory::require_compatible(const PeriodicTrajectory& other) const {
  if (other.size() != size() || other.modes() != modes() || other.period() != period()) {
    throw std::invalid_argument("trajectories differ in period, grid size, or mode count");
  }
}

PeriodicTrajectory& PeriodicTrajectory::operator+=(const PeriodicTrajectory& other) {
  require_compatible(other);
  for (std::size_t j = 0; j < size(); ++j) fields_[j] += other.fields_[j];
  return *this;
}

PeriodicTrajectory& PeriodicTrajectory::operator-=(const PeriodicTrajectory& other) {
  require_compatible(other);
  for (std::size_t j = 0; j < size(); ++j) fields_[j] -= other.fields_[j];
  return *this;
}

PeriodicTrajectory& PeriodicTrajectory::operator*=(double s) {
  for (auto& f : fields_) f *= s;
  return *this;
}

PeriodicTrajectory operator+(PeriodicTrajectory a, const PeriodicTrajectory& b) { return a += b; }
PeriodicTrajectory operator-(PeriodicTrajectory a, const PeriodicTrajectory& b) { return a -= b; }
PeriodicTrajectory operator*(double s, PeriodicTrajectory a) { return a *= s; }

double trajectory_norm(const PeriodicTrajectory& u, double alpha, Convention convention) {
  double best = 0.0;
  for (const auto& f : u.fields()) best = std::max(best, norm_alpha(f, alpha, convention));
  return best;
}

double trajectory_distance(const PeriodicTrajectory& u, const PeriodicTrajectory& v, double alpha,
                           Convention convention) {
  u.require_compatible(v);
  double best = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    best = std::max(best, distance_alpha(u[j], v[j], alpha, convention));
  }
  return best;
}

PeriodicTrajectory shift_steps(const PeriodicTrajectory& u, long long k) {
  std::vector<SpectralField> fields;
  fields.reserve(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) fields.push_back(u.at(static_cast<long long>(j) - k));
  return PeriodicTrajectory(u.period(), std::move(fields));
}

namespace detail {

TimeSpectrum::TimeSpectrum(const PeriodicTrajectory& u)
    : period_(u.period()), time_points_(u.size()), modes_(u.modes()) {
  std::vector<double> real(time_points_ * modes_);
  for (std::size_t j = 0; j < time_points_; ++j) {
    std::copy(u[j].coeffs.begin(), u[j].coeffs.end(), real.begin() + j * modes_);
  }
  data_.resize(bins() * modes_);
  if (modes_ == 0) return;
  fftw_plan plan = PlanCache::instance().forward(time_points_, modes_);
  fftw_execute_dft_r2c(plan, real.data(), reinterpret_cast<fftw_complex*>(data_.data()));
}

PeriodicTrajectory TimeSpectrum::synthesize() const {
  PeriodicTrajectory out(period_, time_points_, modes_);
  if (modes_ == 0) return out;
  std::vector<std::complex<double>> spec = data_;
  std::vector<double> real(time_points_ * modes_);
  fftw_plan plan = PlanCache::instance().backward(time_points_, modes_);
  fftw_execute_dft_c2r(plan, reinterpret_cast<fftw_complex*>(spec.data()), real.data());
  const double scale = 1.0 / static_cast<double>(time_points_);
  for (std::size_t j = 0; j < time_points_; ++j) {
    for (std::size_t n = 0; n < modes_; ++n) out[j][n] = scale * real[j * modes_ + n];
  }
  return out;
}

SpectralField TimeSpectrum::evaluate(double t) const {
  SpectralField out(modes_);
  const double nu = kTwoPi / period_;
  const double scale = 1.0 / static_cast<double>(time_points_);
  for (std::size_t k = 0; k < bins(); ++k) {
    const double phase = nu * static_cast<double>(k) * t;
    if (k == 0) {
      for (std::size_t n = 0; n < modes_; ++n) out[n] += scale * at(0, n).real();
    } else if (is_nyquist(k)) {
      const double c = std::cos(phase);
      for (std::size_t n = 0; n < modes_; ++n) out[n] += scale * at(k, n).real() * c;
    } else {
      const std::complex<double> rot(std::cos(phase), std::sin(phase));
      for (std::size_t n = 0; n < modes_; ++n) out[n] += 2.0 * scale * (at(k, n) * rot).real();
    }
  }
  return out;
}

}  // namespace detail

namespace {

// Position of time t on the grid in units of the step, reduced to [0, M).
double grid_position(const PeriodicTrajectory& u, double t) {
  const double s = wrap_time(t, u.period()) / u.step();
  return s >= static_cast<double>(u.size()) ? 0.0 : s;
}

constexpr double kGridSnap = 1e-9;

SpectralField linear_at(const PeriodicTrajectory& u, double t) {
  const double s = grid_position(u, t);
  const double base = std::floor(s);
  const double frac = s - base;
  const auto j = static_cast<long long>(base);
  if (frac < kGridSnap) return u.at(j);
  if (1.0 - frac < kGridSnap) return u.at(j + 1);
  SpectralField out = u.at(j);
  out *= (1.0 - frac);
  out.axpy(frac, u.at(j + 1));
  return out;
}

SpectralField strict_at(const PeriodicTrajectory& u, double t) {
  const double s = grid_position(u, t);
  const double nearest = std::round(s);
  if (std::abs(s - nearest) > kGridSnap) {
    throw std::invalid_argument("strict interpolation: time " + std::to_string(t) +
                                " is not a grid multiple");
  }
  return u.at(static_cast<long long>(nearest));
}

}  // namespace

SpectralField evaluate(const PeriodicTrajectory& u, double t, Interpolation rule) {
  switch (rule) {
    case Interpolation::Linear:
      return linear_at(u, t);
    case Interpolation::Strict:
      return strict_at(u, t);
    case Interpolation::Trigonometric:
      break;
  }
  const double s = grid_position(u, t);
  const double nearest = std::round(s);
  if (std::abs(s - nearest) <= 1e-12) return u.at(static_cast<long long>(nearest));
  return detail::TimeSpectrum(u).evaluate(wrap_time(t, u.period()));
}

PeriodicTrajectory delayed(const PeriodicTrajectory& u, double delay, Interpolation rule) {
  const double s = wrap_time(delay, u.period()) / u.step();
  const double nearest = std::round(s);
  if (std::abs(s - nearest) <= 1e-12 * std::max(1.0, s)) {
    return shift_steps(u, static_cast<long long>(nearest));
  }
  if (rule != Interpolation::Trigonometric) {
    std::vector<SpectralField> fields;
    fields.reserve(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) fields.push_back(evaluate(u, u.time(j) - delay, rule));
    return PeriodicTrajectory(u.period(), std::move(fields));
  }
  detail::TimeSpectrum spec(u);
  const double nu = kTwoPi / u.period();
  for (std::size_t k = 1; k < spec.bins(); ++k) {
    const double phase = -nu * static_cast<double>(k) * delay;
    if (spec.is_nyquist(k)) {
      const double c = std::cos(phase);
      for (std::size_t n = 0; n < spec.modes(); ++n) spec.at(k, n) *= c;
    } else {
      const std::complex<double> rot(std::cos(phase), std::sin(phase));
      for (std::size_t n = 0; n < spec.modes(); ++n) spec.at(k, n) *= rot;
    }
  }
  return spec.synthesize();
}

SpectralField delayed_state(const PeriodicTrajectory& u, double t, double delay, Interpolation rule) {
  return evaluate(u, t - delay, rule);
}

PeriodicTrajectory resample(const PeriodicTrajectory& u, std::size_t time_points) {
  if (time_points == u.size()) return u;
  if (time_points == 0) throw std::invalid_argument("resample needs at least one time point");
  detail::TimeSpectrum spec(u);
  std::vector<SpectralField> fields;
  fields.reserve(time_points);
  for (std::size_t j = 0; j < time_points; ++j) {
    fields.push_back(spec.evaluate(static_cast<double>(j) * u.period() / static_cast<double>(time_points)));
  }
  return PeriodicTrajectory(u.period(), std::move(fields));
}

}  // namespace nperiod
