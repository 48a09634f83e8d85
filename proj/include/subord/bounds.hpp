#pragma once

// Constants and the closed-form sufficient conditions of each theorem.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subord/regions.hpp"

namespace subord {

enum class TheoremId { T1a, T1b, T2a, T2b, T3, T3a0, T4, T5, S1a, S1b, S1c, S2 };

/// Which kind of printed statement a theorem carries.
enum class BoundKind { MinBeta, Condition };

struct TheoremInfo {
  TheoremId id;
  std::string_view name;    // "T1a", ...
  BoundKind kind;
  std::string_view summary; // the subordination in words
  std::string_view anchor;  // a phrase locating the statement in the source text
};

const std::vector<TheoremInfo>& all_theorems();
const TheoremInfo& theorem_info(TheoremId id);
std::string_view theorem_name(TheoremId id);
/// Accepts the names of all_theorems() plus the spellings T3-a0 and T3α0.
TheoremId parse_theorem(std::string_view text);

/// (e²-1)β⁴ - 2(e²-4)β³ + 4(e²-6)β² + 32β - 16.
double quartic(double beta) noexcept;

/// Fresh bisection of the quartic on [0,1] down to adjacent doubles (far
/// below 1e-12). Used for timing.
double compute_beta0() noexcept;

/// Cached root of the quartic, ≈ 0.4735.
double beta0() noexcept;

/// The two values the source text prints for β₀.
inline constexpr double kPrintedBeta0Variants[2] = {0.473519, 0.475319};

/// e - 1.
double lemma_exp_threshold() noexcept;

struct MinBeta {
  double value;
  std::string case_label; // "k<=2", "k>2", ...
};

/// Smallest |β| admitted by the theorem's displayed bound. α is required
/// for T3 and ignored otherwise.
/// Throws UnsupportedCase for condition-type ids, InvalidArgument for k < 0
/// or a missing α, DegenerateInput when a dividing factor (1-|B|) or
/// (1-|A|) vanishes.
MinBeta min_beta(TheoremId id, const JanowskiParams& params, int k, std::optional<double> alpha = std::nullopt);

/// T3 bound with (1-α) applied to both trailing terms, the other way of
/// reading the printed braces. Reported as metadata only.
double t3_alternative_grouping(const JanowskiParams& params, int k, double alpha);

struct ConditionResult {
  bool holds;
  double slack; // lhs - rhs
  double lhs;
  double rhs;
  std::string case_label;
};

/// Evaluates the printed inequality of T5, S1a, S1b, S1c or S2.
/// k is used by T5 only. The S-family needs -1 < B < A < 1, B != 0 and
/// β, γ > 0; T5 needs γ > 0.
ConditionResult condition_holds(TheoremId id, const JanowskiParams& params, double beta, double gamma, int k = 0);

/// Extension, not part of the printed statements: the S-family inequality
/// with B = 0 substituted into either display (both agree there).
ConditionResult condition_b0_limit(TheoremId id, double A, double beta, double gamma);

/// Smallest γ (to a few ulps) making the S-family condition hold for the
/// given β. Throws UnsupportedCase if no positive γ works.
double s_family_gamma_at_equality(TheoremId id, const JanowskiParams& params, double beta);

/// For T5 with k >= 1 and β = ratio·γ: the largest γ at which the
/// condition still holds. nullopt when k = 0 (the condition does not
/// involve β or γ).
std::optional<double> t5_gamma_at_equality(const JanowskiParams& params, int k, double ratio);

}  // namespace subord
