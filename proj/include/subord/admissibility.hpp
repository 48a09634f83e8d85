#pragma once

// Grid certification that a ψ-shape stays outside the target region on
// the admissibility set, and a bisection probe for the smallest passing β.
//
// Points of the admissibility set, for ζ = e^{iθ} and m >= 1:
//   r = q(ζ),  s = m ζ q'(ζ) = m(A-B)e^{iθ}/(1+Be^{iθ})^2,
//   t = s(c - 1 + iy)  with  c >= c_min = m(1-B^2)/(1+B^2+2B cos θ).
// Results are grid evaluations with margins, not interval-rigorous bounds.

#include <optional>
#include <string>
#include <vector>

#include "subord/bounds.hpp"
#include "subord/error.hpp"
#include "subord/jets.hpp"
#include "subord/regions.hpp"

namespace subord {

struct GridSpec {
  int n_theta = 4096;
  std::vector<double> m_values{1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0, 100.0};
  int t_rays = 64;
  int t_depth = 8;
  double tol = kDefaultMembershipTol;

  /// n_theta >= 16, m-list non-empty, strictly increasing and >= 1,
  /// t_rays and t_depth >= 1, tol >= 0.
  void validate() const;
};

struct AdmissiblePair {
  cplx r;
  cplx s;
};

/// Throws PoleAtBoundary when 1 + Be^{iθ} vanishes.
AdmissiblePair admissible_r_s(double theta, double m, const JanowskiParams& params);

/// c_min = m(1-B^2)/(1+B^2+2B cos θ). Throws UnsupportedCase for |B| = 1.
double t_real_part_min(double theta, double m, const JanowskiParams& params);

/// θ_j = (j + 1/2)·2π/n: n points in the open interval (0, 2π).
std::vector<double> theta_grid(int n);

/// 0 first, then ±y for y log-spaced in [1e-3, 50], truncated to n values.
std::vector<double> t_imag_offsets(int n);

/// 0 first, then offsets log-spaced in [0.05, 20] added to c_min.
std::vector<double> t_depth_offsets(int n);

/// t = s(c_min + dc - 1 + iy) over the depth and ray offsets, depth-major.
/// The first entry is the extreme point (c = c_min, y = 0).
std::vector<cplx> admissible_t_set(cplx s, double theta, double m, const JanowskiParams& params,
                                   const GridSpec& grid);

struct WorstPoint {
  double theta = 0.0;
  double m = 0.0;
  double c_offset = 0.0; // second order only
  double y = 0.0;        // second order only
  cplx psi{0.0, 0.0};
  double margin = 0.0;   // outside-margin at this point
};

struct VerificationReport {
  std::optional<TheoremId> theorem;
  std::string form;
  std::string target;
  double A = 0.0;
  double B = 0.0;
  GridSpec grid;
  bool second_order = false;

  double min_margin = 0.0;            // minimum outside-margin (>= 0 means never inside)
  std::vector<double> min_margin_by_m; // one entry per m value
  WorstPoint worst;
  long long evaluations = 0;
  long long skipped = 0;

  bool pass = false; // min_margin >= -tol
  std::string status; // PASS, PASS-WITH-WARNING or FAIL
  std::vector<std::string> warnings;

  bool monotonicity_checked = false;
  bool monotone_in_m = false; // θ-minimum at every m is at least the one at the first m
  bool escape_in_m = false;   // θ-minimum at the last m is at least the one at the previous m
  std::optional<bool> escape_in_t;
};

/// Evaluates ψ(r, s) over the (θ, m) grid. Requires a first-order form.
VerificationReport verify_first_order(const PsiForm& form, const TargetRegion& target,
                                      const JanowskiParams& params, const GridSpec& grid = {});

/// Evaluates ψ(r, s, t) over (θ, m) and the admissible t-set. Requires a
/// second-order form and |B| < 1.
VerificationReport verify_second_order(const PsiForm& form, const TargetRegion& target,
                                       const JanowskiParams& params, const GridSpec& grid = {});

/// Dispatches on the order of the form.
VerificationReport verify(const PsiForm& form, const TargetRegion& target, const JanowskiParams& params,
                          const GridSpec& grid = {});

struct ProbeStep {
  double beta;
  bool pass;
  double min_margin;
};

struct ProbeResult {
  double printed_bound = 0.0;
  double threshold = 0.0;
  double gap = 0.0; // printed_bound - threshold
  std::vector<ProbeStep> scan;
  int bisection_steps = 0;
};

class NonMonotoneProbeError : public Error {
 public:
  NonMonotoneProbeError(const std::string& detail, std::vector<ProbeStep> scan)
      : Error(ErrorKind::NonMonotoneProbe, detail), scan_(std::move(scan)) {}
  const std::vector<ProbeStep>& scan() const noexcept { return scan_; }

 private:
  std::vector<ProbeStep> scan_;
};

/// Smallest β on [0, bracket] for which verification passes, to 1e-6.
/// The bracket starts at printed_bound and doubles until it passes.
/// Throws NonMonotoneProbeError when a 16-point scan of the bracket is not
/// fail-then-pass.
ProbeResult probe_threshold(const PsiForm& form_template, const TargetRegion& target, const JanowskiParams& params,
                            double printed_bound, const GridSpec& grid = {});

/// Worker count: hardware concurrency capped by SUBORD_THREADS when set.
int worker_count();

}  // namespace subord
