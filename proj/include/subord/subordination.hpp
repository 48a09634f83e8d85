#pragma once

// Empirical subordination by image containment on expanding circles
// |z| = r, and implication trials for the theorems.

#include <optional>
#include <string>
#include <vector>

#include "subord/jets.hpp"
#include "subord/regions.hpp"

namespace subord {

inline const std::vector<double> kDefaultRadii{0.5, 0.9, 0.99, 0.999};
inline constexpr int kDefaultSubordThetas = 1024;

struct SubordinationResult {
  bool holds = false;
  double min_margin = 0.0;               // inside-margin, minimum over samples
  std::vector<double> min_margin_by_radius;
  cplx worst_z{0.0, 0.0};
  long long samples = 0;
  long long skipped = 0;
};

/// Radii strictly increasing in (0, 1), n_theta >= 1.
void validate_sampling(const std::vector<double>& radii, int n_theta);

/// Samples p on z = r e^{2πij/n}; holds iff every inside-margin > -tol.
/// Throws DegenerateInput unless p(0) = 1.
SubordinationResult empirical_subordination(const FnSpec& p, const TargetRegion& region,
                                            const std::vector<double>& radii = kDefaultRadii,
                                            int n_theta = kDefaultSubordThetas, double tol = kDefaultMembershipTol);

/// p = z f'/f tested against the Janowski region of params.
/// Throws DegenerateInput unless f(0) = 0 and f'(0) = 1.
SubordinationResult starlike_check(const FnSpec& f, const JanowskiParams& params,
                                   const std::vector<double>& radii = kDefaultRadii,
                                   int n_theta = kDefaultSubordThetas, double tol = kDefaultMembershipTol);

struct TrialReport {
  std::string family;
  std::string form;
  std::string hypothesis_region;
  double A = 0.0;
  double B = 0.0;
  bool hypothesis_satisfied = false;
  bool conclusion_satisfied = false;
  bool vacuous = true;  // hypothesis not satisfied
  bool refutes = false; // hypothesis satisfied, conclusion not
  double worst_hypothesis_margin = 0.0;
  double worst_conclusion_margin = 0.0;
  std::vector<double> radii;
  int n_theta = 0;
  long long samples = 0;
  long long skipped = 0;
};

/// Hypothesis: ψ(p, zp', z²p'') stays in `hypothesis`. Conclusion: p stays
/// in the Janowski region of `conclusion`.
TrialReport implication_trial(const PsiForm& form, const FnSpec& p, const TargetRegion& hypothesis,
                              const JanowskiParams& conclusion, const std::vector<double>& radii = kDefaultRadii,
                              int n_theta = kDefaultSubordThetas, double tol = kDefaultMembershipTol);

inline constexpr const char* kFamilyBatteryVersion = "families-v1";

/// Candidate p functions (p(0) = 1) for the given (A, B); at least 20.
std::vector<FnSpec> family_battery(const JanowskiParams& params);

/// Normalized f functions (f(0) = 0, f'(0) = 1) for the starlike corollaries.
std::vector<FnSpec> starlike_family_battery();

}  // namespace subord
