#pragma once

// Target regions Ω and the Janowski boundary geometry.
//
// Every region here is the image of the unit disk under a univalent map
// with value 1 at the origin:
//   sigmoid      φ(z) = 2/(1+e^{-z}),     Ω = {w : |Log(w/(2-w))| < 1}
//   exponential  e^z,                     Ω = {w : |Log w| < 1}
//   Janowski     q(z) = (1+Az)/(1+Bz),    Ω = {w : |(w-1)/(A-Bw)| < 1}
// Margins are signed: positive strictly inside, zero on the boundary,
// negative outside. The principal logarithm is used throughout.

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace subord {

using cplx = std::complex<double>;

/// The pair (A, B) with -1 <= B < A <= 1.
class JanowskiParams {
 public:
  /// Throws InvalidArgument unless -1 <= B < A <= 1 (and both finite).
  JanowskiParams(double A, double B);

  /// Same, additionally requiring -1 < B < A < 1.
  static JanowskiParams strict(double A, double B);

  double A() const noexcept { return a_; }
  double B() const noexcept { return b_; }
  bool is_strict() const noexcept { return b_ > -1.0 && a_ < 1.0; }

  /// Throws InvalidArgument naming `who` when the pair is not strict.
  void require_strict(const std::string& who) const;

  friend bool operator==(const JanowskiParams&, const JanowskiParams&) = default;

 private:
  double a_;
  double b_;
};

struct SigmoidRegion {};
struct ExpRegion {};
struct JanowskiRegion {
  JanowskiParams params;
};
/// Disk |w - center| < radius. For B = -1 the Janowski image is a
/// half-plane, so the disk form needs |B| < 1.
struct JanowskiDisk {
  cplx center;
  double radius;

  static JanowskiDisk from_params(const JanowskiParams& params);
};

using TargetRegion = std::variant<SigmoidRegion, ExpRegion, JanowskiRegion, JanowskiDisk>;

std::string region_name(const TargetRegion& region);

inline constexpr double kDefaultMembershipTol = 1e-9;

enum class MembershipState { Inside, OnBoundary, Outside };

struct Membership {
  MembershipState state;
  double margin;
  double tol;
};

std::string_view membership_name(MembershipState state) noexcept;

/// |Log(w/(2-w))|. Points where w/(2-w) is a negative real report |arg| = pi.
/// Throws PoleAtBoundary for w = 0 or w = 2.
double sigmoid_log_modulus(cplx w);

/// Signed inside-margin of w with respect to the region.
/// Throws PoleAtBoundary at the region's singular points
/// (0 and 2 for sigmoid, 0 for exp, A/B for Janowski with B != 0).
double region_margin(cplx w, const TargetRegion& region);

/// Non-throwing variant for grid sweeps; nullopt at singular points or for
/// non-finite input.
std::optional<double> try_region_margin(cplx w, const TargetRegion& region) noexcept;

Membership classify(cplx w, const TargetRegion& region, double tol = kDefaultMembershipTol);

/// q(e^{iθ}) = (1+Ae^{iθ})/(1+Be^{iθ}). The only pole on the circle is
/// θ ≡ 0 when B = -1.
cplx janowski_boundary_point(double theta, const JanowskiParams& params);

/// k(θ) = |q(e^{iθ})|, d(θ) = |q'(e^{iθ})|, g(θ) = Re(ζq''(ζ)/q'(ζ)).
struct BoundaryCurves {
  double k;
  double d;
  double g;
};

BoundaryCurves boundary_curves(double theta, const JanowskiParams& params);

/// θ_j = 2πj/n, j = 0..n-1. Contains 0, and π when n is even.
std::vector<double> curve_theta_grid(int n);

/// CSV with header `theta,k,d,g`, one row per grid point, 17 significant
/// digits, LF line endings. Grid points at a pole are omitted; the number
/// omitted is returned.
int write_curves_csv(std::ostream& out, const JanowskiParams& params, int n);

/// Point of ∂Ω as the image of e^{iθ} under the region's generating map.
cplx region_boundary_point(const TargetRegion& region, double theta);

}  // namespace subord
