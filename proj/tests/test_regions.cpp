#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "subord/bounds.hpp"
#include "subord/regions.hpp"
#include "support.hpp"

using namespace subord;
using std::numbers::e;
using std::numbers::pi;

namespace {

std::vector<JanowskiParams> pairs25() {
  std::vector<JanowskiParams> out;
  for (double B : {-0.8, -0.4, -0.1, 0.2, 0.5}) {
    for (double f : {0.15, 0.35, 0.55, 0.75, 0.95}) out.emplace_back(B + (1.0 - B) * f, B);
  }
  return out;
}

// Real and imaginary parts of Log(w/(2-w)) for w = βe^{iθ}, written out term by term.
double two_term_log_modulus(double beta, double theta) {
  const double re = 0.5 * std::log(beta * beta / (4.0 + beta * beta - 4.0 * beta * std::cos(theta)));
  double im = std::atan2(beta * std::sin(theta), beta * std::cos(theta)) -
              std::atan2(-beta * std::sin(theta), 2.0 - beta * std::cos(theta));
  if (im > pi) im -= 2.0 * pi;
  if (im <= -pi) im += 2.0 * pi;
  return std::hypot(re, im);
}

}  // namespace

TEST_CASE("JanowskiParams domain") {
  CHECK_NOTHROW(JanowskiParams(1.0, -1.0));
  CHECK_NOTHROW(JanowskiParams(0.3, 0.2));
  CHECK_THROWS_KIND(JanowskiParams(0.2, 0.2), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(JanowskiParams(1.1, 0.0), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(JanowskiParams(0.5, -1.2), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(JanowskiParams(NAN, 0.0), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(JanowskiParams::strict(1.0, 0.0), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(JanowskiParams::strict(0.5, -1.0), ErrorKind::InvalidArgument);
  CHECK(JanowskiParams::strict(0.5, -0.5).is_strict());
  CHECK_FALSE(JanowskiParams(1.0, 0.0).is_strict());
}

TEST_CASE("sigmoid_log_modulus") {
  CHECK(sigmoid_log_modulus(1.0) == 0.0);
  CHECK(std::abs(sigmoid_log_modulus(2.0 * e / (1.0 + e)) - 1.0) < 1e-14);
  CHECK_THROWS_KIND(sigmoid_log_modulus(0.0), ErrorKind::PoleAtBoundary);
  CHECK_THROWS_KIND(sigmoid_log_modulus(2.0), ErrorKind::PoleAtBoundary);

  // w/(2-w) negative real: reported with |arg| = pi, so outside.
  CHECK(sigmoid_log_modulus(3.0) > pi - 1e-12);

  // The real boundary point is w = 2/(1+e), where w/(2-w) = 1/e.
  CHECK(std::abs(sigmoid_log_modulus(2.0 / (1.0 + e)) - 1.0) < 1e-14);

  // At w = β0 the log is |ln(β0/(2-β0))|, well above 1: β0 is a root of the
  // mistyped quartic, not of the true boundary equation.
  const double b0 = beta0();
  CHECK(std::abs(sigmoid_log_modulus(b0) - std::abs(std::log(b0 / (2.0 - b0)))) < 1e-15);
  CHECK(sigmoid_log_modulus(b0) == doctest::Approx(1.1705).epsilon(1e-4));
}

TEST_CASE("sigmoid_log_modulus matches the two-term display") {
  double worst = 0.0;
  for (int i = 1; i <= 64; ++i) {
    const double beta = i / 64.0;
    for (int j = 0; j < 512; ++j) {
      const double theta = 2.0 * pi * (j + 0.5) / 512.0;
      const double direct = sigmoid_log_modulus(std::polar(beta, theta));
      worst = std::max(worst, std::abs(direct - two_term_log_modulus(beta, theta)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("f(beta, theta) is smallest at theta = 0") {
  const auto grid = curve_theta_grid(1024);
  for (int i = 1; i <= 64; ++i) {
    const double beta = i / 64.0;
    const double f0 = std::pow(sigmoid_log_modulus(beta), 2);
    for (double theta : grid) {
      const double f = std::pow(sigmoid_log_modulus(std::polar(beta, theta)), 2);
      REQUIRE(f >= f0 - 1e-12);
    }
  }
}

TEST_CASE("region_margin examples") {
  const JanowskiParams p(0.5, -0.5);
  for (const TargetRegion& r : {TargetRegion{SigmoidRegion{}}, TargetRegion{ExpRegion{}}, TargetRegion{JanowskiRegion{p}},
                                TargetRegion{JanowskiDisk::from_params(p)}}) {
    CHECK(region_margin(1.0, r) > 0.0);
  }
  CHECK(std::abs(region_margin(e, ExpRegion{})) < 1e-15);
  CHECK(std::abs(region_margin(1.0 / e, ExpRegion{})) < 1e-15);
  CHECK(std::abs(region_margin(3.0, JanowskiRegion{p})) < 1e-15);
  CHECK(std::abs(region_margin(3.0, JanowskiDisk::from_params(p))) < 1e-15);
  CHECK(region_margin(3.5, JanowskiRegion{p}) < 0.0);

  CHECK_THROWS_KIND(region_margin(0.0, SigmoidRegion{}), ErrorKind::PoleAtBoundary);
  CHECK_THROWS_KIND(region_margin(0.0, ExpRegion{}), ErrorKind::PoleAtBoundary);
  // A/B = -1 is the excluded point of the Janowski map.
  CHECK_THROWS_KIND(region_margin(-1.0, JanowskiRegion{p}), ErrorKind::PoleAtBoundary);
  CHECK_THROWS_KIND(region_margin(cplx(NAN, 0.0), ExpRegion{}), ErrorKind::DegenerateInput);
  CHECK_FALSE(try_region_margin(0.0, ExpRegion{}).has_value());
}

TEST_CASE("Janowski disk geometry") {
  for (const auto& p : pairs25()) {
    const auto d = JanowskiDisk::from_params(p);
    const double A = p.A(), B = p.B();
    CHECK(std::abs(d.center - cplx((1 - A * B) / (1 - B * B), 0.0)) < 1e-15);
    CHECK(std::abs(d.radius - (A - B) / (1 - B * B)) < 1e-15);
    // Both descriptions agree on the sign of the margin away from the boundary.
    for (cplx w : {cplx(0.9, 0.1), cplx(2.0, 0.5), cplx(-0.3, 0.0), cplx(1.2, -0.7)}) {
      const double a = region_margin(w, JanowskiRegion{p});
      const double b = region_margin(w, d);
      if (std::abs(a) > 1e-9) CHECK((a > 0) == (b > 0));
    }
  }
  CHECK_THROWS_KIND(JanowskiDisk::from_params(JanowskiParams(1.0, -1.0)), ErrorKind::InvalidArgument);
}

TEST_CASE("B = -1 region is the half-plane Re w > (1-A)/2") {
  for (double A : {1.0, 0.5, -0.2}) {
    const JanowskiParams p(A, -1.0);
    const double edge = (1.0 - A) / 2.0;
    for (double x : {edge - 0.3, edge - 0.01, edge + 0.01, edge + 2.0}) {
      for (double y : {-3.0, 0.0, 0.4}) {
        const double m = region_margin(cplx(x, y), JanowskiRegion{p});
        CHECK((m > 0) == (x > edge));
      }
    }
  }
}

TEST_CASE("classify") {
  CHECK(classify(1.0, ExpRegion{}).state == MembershipState::Inside);
  CHECK(classify(e, ExpRegion{}).state == MembershipState::OnBoundary);
  CHECK(classify(3.0, ExpRegion{}).state == MembershipState::Outside);
  CHECK(classify(e * (1 + 1e-12), ExpRegion{}).state == MembershipState::OnBoundary);
  CHECK(classify(e * (1 + 1e-12), ExpRegion{}, 0.0).state == MembershipState::Outside);
  CHECK(membership_name(MembershipState::OnBoundary) == "OnBoundary");
}

TEST_CASE("janowski_boundary_point") {
  CHECK(std::abs(janowski_boundary_point(pi, JanowskiParams(1.0, 0.0))) < 1e-15);
  CHECK(std::abs(janowski_boundary_point(pi / 2, JanowskiParams(1.0, 0.0)) - cplx(1.0, 1.0)) < 1e-15);
  for (const auto& p : pairs25()) {
    const cplx w = janowski_boundary_point(pi, p);
    CHECK(std::abs(w - (1 - p.A()) / (1 - p.B())) < 1e-14);
  }
  CHECK_THROWS_KIND(janowski_boundary_point(0.0, JanowskiParams(1.0, -1.0)), ErrorKind::PoleAtBoundary);
  CHECK_NOTHROW(janowski_boundary_point(pi, JanowskiParams(1.0, -1.0)));
}

TEST_CASE("boundary maps to boundary") {
  for (const auto& p : pairs25()) {
    for (int j = 0; j < 256; ++j) {
      const double theta = 2 * pi * (j + 0.5) / 256;
      const cplx w = janowski_boundary_point(theta, p);
      CHECK(std::abs(region_margin(w, JanowskiRegion{p})) <= kDefaultMembershipTol);
      CHECK(std::abs(region_margin(w, JanowskiDisk::from_params(p))) <= kDefaultMembershipTol);
    }
  }
  for (int j = 0; j < 64; ++j) {
    const double theta = 2 * pi * (j + 0.5) / 64;
    CHECK(std::abs(region_margin(region_boundary_point(SigmoidRegion{}, theta), SigmoidRegion{})) < 1e-12);
    CHECK(std::abs(region_margin(region_boundary_point(ExpRegion{}, theta), ExpRegion{})) < 1e-12);
  }
}

TEST_CASE("boundary_curves closed forms") {
  for (const auto& p : pairs25()) {
    const double A = p.A(), B = p.B();
    const auto at_pi = boundary_curves(pi, p);
    CHECK(std::abs(at_pi.k - (1 - A) / (1 - B)) < 1e-14);
    if (B > 0) {
      const auto c0 = boundary_curves(0.0, p);
      CHECK(std::abs(c0.d - (A - B) / ((1 + B) * (1 + B))) < 1e-14);
      CHECK(std::abs(c0.g - (-2 * B * (B + 1)) / ((1 + B) * (1 + B))) < 1e-14);
    } else {
      CHECK(std::abs(at_pi.d - (A - B) / ((1 - B) * (1 - B))) < 1e-14);
      CHECK(std::abs(at_pi.g - (-2 * B * (B - 1)) / ((1 - B) * (1 - B))) < 1e-14);
    }
    // k and d are |q| and |q'| on the circle.
    for (double theta : {0.3, 1.7, 4.0}) {
      const cplx z = std::polar(1.0, theta);
      const auto c = boundary_curves(theta, p);
      CHECK(std::abs(c.k - std::abs((1.0 + A * z) / (1.0 + B * z))) < 1e-14);
      CHECK(std::abs(c.d - std::abs((A - B) / ((1.0 + B * z) * (1.0 + B * z)))) < 1e-14);
      // ζq''/q' = -2Bζ/(1+Bζ)
      CHECK(std::abs(c.g - (-2.0 * B * z / (1.0 + B * z)).real()) < 1e-14);
    }
  }
  CHECK_THROWS_KIND(boundary_curves(0.0, JanowskiParams(1.0, -1.0)), ErrorKind::PoleAtBoundary);
}

TEST_CASE("grid minima of the curves") {
  const auto grid = curve_theta_grid(4096);
  for (const auto& p : pairs25()) {
    const double A = p.A(), B = p.B();
    double kmin = 1e300, dmin = 1e300, gmin = 1e300;
    double k_at = 0;
    for (double theta : grid) {
      const auto c = boundary_curves(theta, p);
      if (c.k < kmin) {
        kmin = c.k;
        k_at = theta;
      }
      dmin = std::min(dmin, c.d);
      gmin = std::min(gmin, c.g);
    }
    CHECK(std::abs(kmin - (1 - A) / (1 - B)) < 1e-12);
    CHECK(std::abs(k_at - pi) <= 2 * pi / 4096 + 1e-15);
    const double den = B > 0 ? (1 + B) * (1 + B) : (1 - B) * (1 - B);
    CHECK(std::abs(dmin - (A - B) / den) < 1e-12);
    CHECK(std::abs(gmin - (B > 0 ? -2 * B * (B + 1) : -2 * B * (B - 1)) / den) < 1e-12);
  }
}

TEST_CASE("curve CSV export") {
  std::ostringstream out;
  CHECK(write_curves_csv(out, JanowskiParams(0.5, -0.5), 16) == 0);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,k,d,g");
  int rows = 0;
  double k_pi = -1;
  while (std::getline(in, line)) {
    ++rows;
    if (rows == 9) k_pi = std::stod(line.substr(line.find(',') + 1));
  }
  CHECK(rows == 16);
  CHECK(std::abs(k_pi - 1.0 / 3.0) < 1e-15);
  CHECK(out.str().find('\r') == std::string::npos);

  std::ostringstream pole;
  CHECK(write_curves_csv(pole, JanowskiParams(1.0, -1.0), 16) == 1);
}
