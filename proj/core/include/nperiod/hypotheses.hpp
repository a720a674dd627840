#pragma once
// Arithmetic of the sufficient conditions for existence, uniqueness and
// regularity of periodic solutions. Nothing here inspects f or g: every
// constant is taken from DeclaredConstants.

#include <optional>
#include <string>
#include <vector>

#include "nperiod/problem.hpp"

namespace nperiod {

enum class Verdict { Pass, Fail, Unknown };

const char* to_string(Verdict v) noexcept;

/// lhs < rhs, with margin = rhs - lhs. Unknown inequalities carry NaN sides.
struct Inequality {
  std::string name;
  double lhs = 0.0;
  double rhs = 1.0;
  double margin = 1.0;
  Verdict verdict = Verdict::Unknown;
};

struct TheoremVerdict {
  std::string name;
  Verdict verdict = Verdict::Unknown;
  std::string conclusion;
};

struct Constants {
  double C = 0.0;                  ///< 1/(1 - exp(-pi^2 omega))
  double M_alpha = 0.0;            ///< Gamma(alpha)
  double C_one_minus_alpha = 0.0;  ///< ||A^{-(1-alpha)}|| in the chosen convention
  double time_factor = 0.0;        ///< omega^{1-alpha}/(1-alpha)
  std::optional<double> gamma;     ///< user-supplied, or (a0 + a1) * time_factor
};

struct HypothesisReport {
  Convention convention = Convention::EigenConsistent;
  Constants constants;
  std::vector<Inequality> inequalities;
  std::vector<TheoremVerdict> theorems;

  /// Throws std::out_of_range for an unknown name.
  const Inequality& inequality(const std::string& name) const;
  const TheoremVerdict& theorem(const std::string& name) const;
};

/// Constants for period omega and exponent alpha in (0,1).
/// Throws std::invalid_argument for omega <= 0 or alpha outside (0,1).
Constants compute_constants(double omega, double alpha, Convention convention,
                            std::optional<double> gamma = std::nullopt, double a0 = 0.0,
                            double a1 = 0.0, GrowthBound growth = GrowthBound::Lipschitz);
Constants compute_constants(const ProblemSpec& spec);

/// C M_alpha s time_factor + C_{1-alpha} l, the shared shape of (H3'), (H6)
/// and the contraction constant, with s the summed growth/Lipschitz constants.
double mild_condition_lhs(double C, double M_alpha, double C_one_minus_alpha, double s, double l,
                          double time_factor) noexcept;

/// 2 omega^{1/2}/(1 - exp(-pi^2 omega)) Gamma(1/2) s + l for the model problem.
double model_condition_lhs(double omega, double s, double l) noexcept;

/// pi/(1 + pi)
double model_condition_rhs() noexcept;

/// "H3" and "H3'" plus theorems "3.1", "3.2", "3.3".
HypothesisReport check_mild(const ProblemSpec& spec);
/// "H6" plus theorems "4.1", "4.2". Throws for mu outside (0,1].
HypothesisReport check_regularity(const ProblemSpec& spec);
/// "F3", "F6" plus theorems "5.1", "5.2", "5.3".
HypothesisReport check_example51(const ProblemSpec& spec);
/// All applicable checks merged into one report.
HypothesisReport check_all(const ProblemSpec& spec);

/// Theoretical contraction constant of Q in ||.||_{C,alpha}: the (H3') lhs.
double contraction_bound(const ProblemSpec& spec);
/// Contraction constant of the G-part Q2 alone: C_{1-alpha} L + C M_alpha L time_factor.
double q2_contraction_bound(const ProblemSpec& spec);

}  // namespace nperiod
