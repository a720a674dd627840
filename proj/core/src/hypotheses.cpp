#include "nperiod/hypotheses.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace nperiod {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Inequality make_inequality(std::string name, double lhs, double rhs) {
  Inequality q;
  q.name = std::move(name);
  q.lhs = lhs;
  q.rhs = rhs;
  q.margin = rhs - lhs;
  q.verdict = q.margin > 0.0 ? Verdict::Pass : Verdict::Fail;
  return q;
}

Inequality unknown_inequality(std::string name, double rhs) {
  Inequality q;
  q.name = std::move(name);
  q.lhs = kNaN;
  q.rhs = rhs;
  q.margin = kNaN;
  q.verdict = Verdict::Unknown;
  return q;
}

void check_mu(double mu, const char* name) {
  if (!(mu > 0.0 && mu <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in (0, 1]");
  }
}

bool holder_strict(const DeclaredConstants& c) { return c.mu1 < 1.0 && c.mu2 < 1.0; }
bool holder_lipschitz(const DeclaredConstants& c) { return c.mu1 == 1.0 && c.mu2 == 1.0; }

void append(HypothesisReport& into, const HypothesisReport& from) {
  into.inequalities.insert(into.inequalities.end(), from.inequalities.begin(),
                           from.inequalities.end());
  into.theorems.insert(into.theorems.end(), from.theorems.begin(), from.theorems.end());
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

const Inequality& HypothesisReport::inequality(const std::string& name) const {
  for (const auto& q : inequalities) {
    if (q.name == name) return q;
  }
  throw std::out_of_range("no inequality named " + name);
}

const TheoremVerdict& HypothesisReport::theorem(const std::string& name) const {
  for (const auto& t : theorems) {
    if (t.name == name) return t;
  }
  throw std::out_of_range("no theorem named " + name);
}

Constants compute_constants(double omega, double alpha, Convention convention,
                            std::optional<double> gamma, double a0, double a1,
                            GrowthBound growth) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("omega must be positive and finite");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1) for the smoothing constant Gamma(alpha)");
  }
  Constants c;
  c.C = -1.0 / std::expm1(-kPi * kPi * omega);
  c.M_alpha = std::tgamma(alpha);
  c.C_one_minus_alpha = convention == Convention::Literal
                            ? 1.0
                            : std::pow(kPi * kPi, -(1.0 - alpha));
  c.time_factor = std::pow(omega, 1.0 - alpha) / (1.0 - alpha);
  if (gamma) {
    c.gamma = *gamma;
  } else if (growth != GrowthBound::General) {
    c.gamma = (a0 + a1) * c.time_factor;
  }
  return c;
}

Constants compute_constants(const ProblemSpec& spec) {
  const auto& k = spec.constants;
  return compute_constants(spec.omega, spec.alpha, spec.convention, k.gamma, k.a0, k.a1, k.growth);
}

double mild_condition_lhs(double C, double M_alpha, double C_one_minus_alpha, double s, double l,
                          double time_factor) noexcept {
  return C * M_alpha * s * time_factor + C_one_minus_alpha * l;
}

double model_condition_lhs(double omega, double s, double l) noexcept {
  const double C = -1.0 / std::expm1(-kPi * kPi * omega);
  return 2.0 * std::sqrt(omega) * C * std::sqrt(kPi) * s + l;
}

double model_condition_rhs() noexcept { return kPi / (1.0 + kPi); }

HypothesisReport check_mild(const ProblemSpec& spec) {
  HypothesisReport r;
  r.convention = spec.convention;
  r.constants = compute_constants(spec);
  const auto& c = r.constants;
  const auto& k = spec.constants;

  // (H3): C M_alpha gamma + C_{1-alpha} L + C M_alpha L time_factor < 1
  if (c.gamma) {
    r.inequalities.push_back(make_inequality(
        "H3", c.C * c.M_alpha * *c.gamma + c.C_one_minus_alpha * k.L +
                  c.C * c.M_alpha * k.L * c.time_factor,
        1.0));
  } else {
    r.inequalities.push_back(unknown_inequality("H3", 1.0));
  }

  if (k.growth == GrowthBound::General) {
    r.inequalities.push_back(unknown_inequality("H3'", 1.0));
  } else {
    r.inequalities.push_back(make_inequality(
        "H3'",
        mild_condition_lhs(c.C, c.M_alpha, c.C_one_minus_alpha, k.a0 + k.a1 + k.L, k.L,
                           c.time_factor),
        1.0));
  }
  const Verdict h3 = r.inequalities[0].verdict;
  const Verdict h3p = r.inequalities[1].verdict;

  r.theorems.push_back({"3.1", h3, "periodic mild solution exists"});
  r.theorems.push_back({"3.2", k.growth == GrowthBound::General ? Verdict::Unknown : h3p,
                        "periodic mild solution exists"});
  r.theorems.push_back({"3.3", k.growth == GrowthBound::Lipschitz ? h3p : Verdict::Unknown,
                        "periodic mild solution exists and is unique"});
  return r;
}

HypothesisReport check_regularity(const ProblemSpec& spec) {
  const auto& k = spec.constants;
  check_mu(k.mu1, "mu1");
  check_mu(k.mu2, "mu2");
  HypothesisReport r;
  r.convention = spec.convention;
  r.constants = compute_constants(spec);
  const auto& c = r.constants;
  r.inequalities.push_back(make_inequality(
      "H6",
      mild_condition_lhs(c.C, c.M_alpha, c.C_one_minus_alpha, 2.0 * k.L1 + k.L2, k.L2,
                         c.time_factor),
      1.0));
  const Verdict h6 = r.inequalities.back().verdict;
  r.theorems.push_back({"4.1", holder_strict(k) ? h6 : Verdict::Unknown,
                        "periodic classical solution exists"});
  r.theorems.push_back({"4.2", holder_lipschitz(k) ? h6 : Verdict::Unknown,
                        "periodic strong solution exists"});
  return r;
}

HypothesisReport check_example51(const ProblemSpec& spec) {
  const auto& k = spec.constants;
  check_mu(k.mu1, "mu1");
  check_mu(k.mu2, "mu2");
  HypothesisReport r;
  r.convention = spec.convention;
  r.constants = compute_constants(spec);
  const double rhs = model_condition_rhs();
  r.inequalities.push_back(
      make_inequality("F3", model_condition_lhs(spec.omega, k.a0 + k.a1 + k.L, k.L), rhs));
  r.inequalities.push_back(
      make_inequality("F6", model_condition_lhs(spec.omega, 2.0 * k.L1 + k.L2, k.L2), rhs));
  const Verdict f3 = r.inequalities[0].verdict;
  const Verdict f6 = r.inequalities[1].verdict;
  r.theorems.push_back({"5.1", f3, "periodic mild solution exists"});
  r.theorems.push_back({"5.2", holder_strict(k) ? f6 : Verdict::Unknown,
                        "periodic classical solution exists"});
  r.theorems.push_back({"5.3", holder_lipschitz(k) ? f6 : Verdict::Unknown,
                        "periodic strong solution exists"});
  return r;
}

HypothesisReport check_all(const ProblemSpec& spec) {
  HypothesisReport r = check_mild(spec);
  append(r, check_regularity(spec));
  if (spec.kind == ProblemKind::Example51) append(r, check_example51(spec));
  return r;
}

double contraction_bound(const ProblemSpec& spec) {
  const Constants c = compute_constants(spec);
  const auto& k = spec.constants;
  return mild_condition_lhs(c.C, c.M_alpha, c.C_one_minus_alpha, k.a0 + k.a1 + k.L, k.L,
                            c.time_factor);
}

double q2_contraction_bound(const ProblemSpec& spec) {
  const Constants c = compute_constants(spec);
  const double L = spec.constants.L;
  return c.C_one_minus_alpha * L + c.C * c.M_alpha * L * c.time_factor;
}

}  // namespace nperiod
