#include "subord/regions.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "subord/error.hpp"

namespace subord {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string fmt_pair(double A, double B) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "A=%.17g, B=%.17g", A, B);
  return buf;
}

constexpr double kPoleEps = 1e-12;

}  // namespace

JanowskiParams::JanowskiParams(double A, double B) : a_(A), b_(B) {
  if (!std::isfinite(A) || !std::isfinite(B) || !(B >= -1.0) || !(A <= 1.0) || !(B < A)) {
    fail(ErrorKind::InvalidArgument, "Janowski parameters need -1 <= B < A <= 1, got " + fmt_pair(A, B));
  }
}

JanowskiParams JanowskiParams::strict(double A, double B) {
  JanowskiParams p(A, B);
  p.require_strict("strict Janowski parameters");
  return p;
}

void JanowskiParams::require_strict(const std::string& who) const {
  if (!is_strict()) {
    fail(ErrorKind::InvalidArgument, who + " needs -1 < B < A < 1, got " + fmt_pair(a_, b_));
  }
}

JanowskiDisk JanowskiDisk::from_params(const JanowskiParams& params) {
  const double A = params.A();
  const double B = params.B();
  if (std::abs(B) >= 1.0) {
    fail(ErrorKind::InvalidArgument, "Janowski disk needs |B| < 1 (B = -1 gives a half-plane)");
  }
  const double den = 1.0 - B * B;
  return JanowskiDisk{cplx((1.0 - A * B) / den, 0.0), (A - B) / den};
}

std::string region_name(const TargetRegion& region) {
  return std::visit(overloaded{
                        [](const SigmoidRegion&) -> std::string { return "sigmoid"; },
                        [](const ExpRegion&) -> std::string { return "exp"; },
                        [](const JanowskiRegion& r) -> std::string {
                          return "janowski(" + fmt_pair(r.params.A(), r.params.B()) + ")";
                        },
                        [](const JanowskiDisk& d) -> std::string {
                          char buf[128];
                          std::snprintf(buf, sizeof buf, "disk(center=%.17g, radius=%.17g)", d.center.real(),
                                        d.radius);
                          return buf;
                        },
                    },
                    region);
}

std::string_view membership_name(MembershipState state) noexcept {
  switch (state) {
    case MembershipState::Inside: return "Inside";
    case MembershipState::OnBoundary: return "OnBoundary";
    case MembershipState::Outside: return "Outside";
  }
  return "Unknown";
}

double sigmoid_log_modulus(cplx w) {
  if (w == cplx(0.0, 0.0) || w == cplx(2.0, 0.0)) {
    fail(ErrorKind::PoleAtBoundary, "sigmoid region is singular at w = 0 and w = 2");
  }
  return std::abs(std::log(w / (2.0 - w)));
}

std::optional<double> try_region_margin(cplx w, const TargetRegion& region) noexcept {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return std::nullopt;
  return std::visit(overloaded{
                        [&](const SigmoidRegion&) -> std::optional<double> {
                          if (w == cplx(0.0, 0.0) || w == cplx(2.0, 0.0)) return std::nullopt;
                          return 1.0 - std::abs(std::log(w / (2.0 - w)));
                        },
                        [&](const ExpRegion&) -> std::optional<double> {
                          if (w == cplx(0.0, 0.0)) return std::nullopt;
                          return 1.0 - std::abs(std::log(w));
                        },
                        [&](const JanowskiRegion& r) -> std::optional<double> {
                          const cplx den = r.params.A() - r.params.B() * w;
                          if (den == cplx(0.0, 0.0)) return std::nullopt;
                          return 1.0 - std::abs(w - 1.0) / std::abs(den);
                        },
                        [&](const JanowskiDisk& d) -> std::optional<double> {
                          return d.radius - std::abs(w - d.center);
                        },
                    },
                    region);
}

double region_margin(cplx w, const TargetRegion& region) {
  if (auto m = try_region_margin(w, region)) return *m;
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    fail(ErrorKind::DegenerateInput, "non-finite point passed to region_margin");
  }
  fail(ErrorKind::PoleAtBoundary, "point is a singular point of region " + region_name(region));
}

Membership classify(cplx w, const TargetRegion& region, double tol) {
  const double margin = region_margin(w, region);
  MembershipState state = MembershipState::OnBoundary;
  if (margin > tol) {
    state = MembershipState::Inside;
  } else if (margin < -tol) {
    state = MembershipState::Outside;
  }
  return Membership{state, margin, tol};
}

cplx janowski_boundary_point(double theta, const JanowskiParams& params) {
  const cplx zeta = std::polar(1.0, theta);
  const cplx den = 1.0 + params.B() * zeta;
  if (std::abs(den) < kPoleEps) {
    fail(ErrorKind::PoleAtBoundary, "1 + B e^{iθ} vanishes (B = -1, θ ≡ 0)");
  }
  return (1.0 + params.A() * zeta) / den;
}

BoundaryCurves boundary_curves(double theta, const JanowskiParams& params) {
  const double A = params.A();
  const double B = params.B();
  const double c = std::cos(theta);
  const double den = 1.0 + B * B + 2.0 * B * c;
  if (den < kPoleEps) {
    fail(ErrorKind::PoleAtBoundary, "1 + B^2 + 2B cos θ vanishes (|B| = 1 at the antipodal angle)");
  }
  const double num_k = std::max(0.0, 1.0 + A * A + 2.0 * A * c);
  return BoundaryCurves{
      std::sqrt(num_k / den),
      (A - B) / den,
      -2.0 * B * (B + c) / den,
  };
}

std::vector<double> curve_theta_grid(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "curve grid needs n >= 1");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / n;
  return out;
}

int write_curves_csv(std::ostream& out, const JanowskiParams& params, int n) {
  out << "theta,k,d,g\n";
  int skipped = 0;
  char buf[160];
  for (double theta : curve_theta_grid(n)) {
    BoundaryCurves c{};
    try {
      c = boundary_curves(theta, params);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleAtBoundary) throw;
      ++skipped;
      continue;
    }
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", theta, c.k, c.d, c.g);
    out << buf;
  }
  return skipped;
}

cplx region_boundary_point(const TargetRegion& region, double theta) {
  const cplx zeta = std::polar(1.0, theta);
  return std::visit(overloaded{
                        [&](const SigmoidRegion&) -> cplx { return 2.0 / (1.0 + std::exp(-zeta)); },
                        [&](const ExpRegion&) -> cplx { return std::exp(zeta); },
                        [&](const JanowskiRegion& r) -> cplx { return janowski_boundary_point(theta, r.params); },
                        [&](const JanowskiDisk& d) -> cplx { return d.center + d.radius * zeta; },
                    },
                    region);
}

}  // namespace subord
