#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "subord/bounds.hpp"
#include "support.hpp"

using namespace subord;
using std::numbers::e;

namespace {

// Newton's method from 0.5 on the quartic, typed out again here.
double newton_root() {
  const double E = e * e;
  double x = 0.5;
  for (int i = 0; i < 60; ++i) {
    const double f = (E - 1) * x * x * x * x - 2 * (E - 4) * x * x * x + 4 * (E - 6) * x * x + 32 * x - 16;
    const double df = 4 * (E - 1) * x * x * x - 6 * (E - 4) * x * x + 8 * (E - 6) * x + 32;
    x -= f / df;
  }
  return x;
}

// Printed bounds, re-typed independently of the library.
double oracle_min_beta(TheoremId id, double A, double B, int k, double alpha = 0.0) {
  const double a = std::fabs(A), b = std::fabs(B), c0 = newton_root(), ce = e - 1;
  switch (id) {
    case TheoremId::T1a:
    case TheoremId::T1b: {
      const double c = id == TheoremId::T1a ? c0 : ce;
      if (k <= 2) return c * std::pow(1 + a, k) * std::pow(1 + b, 2 - k) / (A - B);
      return c * std::pow(1 + a, k) / ((A - B) * std::pow(1 - b, k - 2));
    }
    case TheoremId::T2a:
    case TheoremId::T2b: {
      const double c = id == TheoremId::T2a ? c0 : ce;
      if (k <= 4) return c * std::pow(1 + a, k) * std::pow(1 + b, 4 - k) / std::pow(A - B, 2);
      return c * std::pow(1 + a, k) / (std::pow(A - B, 2) * std::pow(1 - b, k - 4));
    }
    case TheoremId::T3:
    case TheoremId::T3a0: {
      const double top = c0 * std::pow(1 + a, k) * std::pow(1 + b, 2) + (1 - alpha) * std::pow(1 + a, k + 1) * (1 + b) +
                         alpha * std::pow(1 + a, k + 2);
      return top / ((A - B) * std::pow(1 - b, k));
    }
    case TheoremId::T4: {
      if (k <= 2) {
        return (c0 * std::pow(1 + a, k + 1) * std::pow(1 + b, 2 - k) + std::pow(1 + a, k) * std::pow(1 + b, 3 - k)) /
               ((A - B) * (1 - a));
      }
      return (c0 * std::pow(1 + a, k) + std::pow(1 + a, k) * (1 + b)) / ((A - B) * (1 - a) * std::pow(1 - b, k - 2));
    }
    default: return NAN;
  }
}

// Slack of the printed condition, B > 0 and B < 0 displays written separately.
double oracle_slack(TheoremId id, double A, double B, double be, double ga, int k = 0) {
  const double c0 = newton_root();
  if (id == TheoremId::T5) {
    const double a = std::fabs(A), b = std::fabs(B);
    const double X = be * (1 + a) + ga * (1 + b);
    if (k <= 2) return (A - B) * (1 - b) - c0 * std::pow(1 + b, 2 - k) * std::pow(X, k) * (2 + a + b);
    return (A - B) * std::pow(1 - b, k - 1) - c0 * (2 + a + b) * std::pow(X, k);
  }
  double D, br;
  if (B > 0) {
    D = 1 + B * B + 2 * B;
    br = ga * D - 2 * B * be * (B + 1);
  } else {
    D = 1 + B * B - 2 * B;
    br = ga * D - 2 * B * be * (B - 1);
  }
  switch (id) {
    case TheoremId::S1a: return (A - B) * br - (c0 + 1) * D * D;
    case TheoremId::S1b: return (A - B) * br - (e - 1) * D * D;
    case TheoremId::S1c: return (A - B) * (1 - B * B) * br - std::fabs(B) * (A - B) * D * D - (A - B) * D * D;
    case TheoremId::S2: return (A - B) * (1 + B) * br - (1 + A) * D * D - c0 * (1 + B) * D * D;
    default: return NAN;
  }
}

std::vector<std::pair<double, double>> pairs() {
  std::vector<std::pair<double, double>> out;
  for (double B : {-0.8, -0.4, -0.1, 0.2, 0.5}) {
    for (double f : {0.15, 0.35, 0.55, 0.75, 0.95}) out.emplace_back(B + (1 - B) * f, B);
  }
  return out;
}

bool close(double x, double y, double rel = 1e-12) { return std::abs(x - y) <= rel * std::max(1.0, std::abs(y)); }

}  // namespace

TEST_CASE("beta0") {
  const double b = beta0();
  CHECK(b > 0.47);
  CHECK(b < 0.48);
  CHECK(quartic(0.47) < 0.0);
  CHECK(quartic(0.48) > 0.0);
  CHECK(std::abs(quartic(b)) <= 1e-10);
  CHECK(std::abs(b - newton_root()) < 1e-12);
  CHECK(std::abs(b - 0.473519) < 5e-6);
  CHECK(std::abs(b - 0.475319) > 1e-3);
  CHECK(compute_beta0() == b);
  CHECK(quartic(0.0) == -16.0);
  CHECK(std::abs(quartic(1.0) - (3 * e * e - 1)) < 1e-12);
}

TEST_CASE("lemma threshold") {
  CHECK(lemma_exp_threshold() == doctest::Approx(1.718281828459045).epsilon(1e-15));
  CHECK(std::abs(std::abs(std::log(1.0 + lemma_exp_threshold())) - 1.0) < 1e-15);
  double mn = 1e9;
  for (int j = 0; j < 4096; ++j) {
    const std::complex<double> z = std::polar(1.7, 2 * std::numbers::pi * j / 4096);
    mn = std::min(mn, std::abs(std::log(1.0 + z)));
  }
  CHECK(mn < 1.0);
}

TEST_CASE("printed examples") {
  const auto t1 = min_beta(TheoremId::T1a, JanowskiParams(1, -1), 1);
  CHECK(close(t1.value, 2 * newton_root()));
  CHECK(t1.case_label == "k<=2");
  CHECK(close(min_beta(TheoremId::T1b, JanowskiParams(1, 0), 0).value, e - 1));
  const double t4 = min_beta(TheoremId::T4, JanowskiParams(0.5, -0.5), 0).value;
  CHECK(close(t4, (newton_root() * 1.5 * 1.5 * 1.5 + 1.5 * 1.5 * 1.5) / (1.0 * 0.5)));
}

TEST_CASE("min_beta equals the re-typed formulas") {
  for (auto [A, B] : pairs()) {
    const JanowskiParams p(A, B);
    for (int k : {0, 1, 2, 3, 4, 5, 7}) {
      for (TheoremId id : {TheoremId::T1a, TheoremId::T1b, TheoremId::T2a, TheoremId::T2b, TheoremId::T3a0,
                           TheoremId::T4}) {
        CAPTURE(theorem_name(id));
        CHECK(close(min_beta(id, p, k).value, oracle_min_beta(id, A, B, k)));
      }
      for (double al : {0.0, 0.25, 0.5, 1.0}) {
        CHECK(close(min_beta(TheoremId::T3, p, k, al).value, oracle_min_beta(TheoremId::T3, A, B, k, al)));
      }
    }
  }
}

TEST_CASE("case split labels") {
  const JanowskiParams p(0.5, -0.5);
  CHECK(min_beta(TheoremId::T1a, p, 2).case_label == "k<=2");
  CHECK(min_beta(TheoremId::T1a, p, 3).case_label == "k>2");
  CHECK(min_beta(TheoremId::T2b, p, 4).case_label == "k<=4");
  CHECK(min_beta(TheoremId::T2b, p, 5).case_label == "k>4");
  CHECK(min_beta(TheoremId::T4, p, 3).case_label == "k>2");
  CHECK(min_beta(TheoremId::T3, p, 3, 0.5).case_label == "all k");
}

TEST_CASE("T3 at alpha = 0 is T3a0") {
  for (auto [A, B] : pairs()) {
    for (int k : {0, 1, 2, 3, 5}) {
      const JanowskiParams p(A, B);
      CHECK(min_beta(TheoremId::T3, p, k, 0.0).value == min_beta(TheoremId::T3a0, p, k).value);
    }
  }
}

TEST_CASE("T3 alternative grouping") {
  const JanowskiParams p(0.5, -0.5);
  const double b0 = newton_root();
  const double alt = (b0 * 1.5 * 1.5 * 1.5 + 0.5 * (1.5 * 1.5 * 1.5 + 0.5 * 1.5 * 1.5 * 1.5)) / (1.0 * 0.5);
  CHECK(close(t3_alternative_grouping(p, 1, 0.5), alt));
  // Readings agree at alpha = 0 and differ elsewhere.
  CHECK(close(t3_alternative_grouping(p, 2, 0.0), min_beta(TheoremId::T3, p, 2, 0.0).value));
  CHECK(std::abs(t3_alternative_grouping(p, 2, 0.5) - min_beta(TheoremId::T3, p, 2, 0.5).value) > 0.1);
}

TEST_CASE("T1a vs T1b scale by beta0/(e-1)") {
  for (auto [A, B] : pairs()) {
    for (int k : {0, 1, 2, 3, 5}) {
      const JanowskiParams p(A, B);
      const double r = min_beta(TheoremId::T1a, p, k).value / min_beta(TheoremId::T1b, p, k).value;
      CHECK(std::abs(r - beta0() / (e - 1)) < 1e-12);
    }
  }
}

TEST_CASE("T1a bound decreases in A") {
  for (double B : {-1.0, -0.5, 0.0, 0.5}) {
    double prev = INFINITY;
    for (int i = 1; i <= 100; ++i) {
      const double A = B + (1 - B) * i / 100.0;
      const double v = min_beta(TheoremId::T1a, JanowskiParams(A, B), 0).value;
      CHECK(v < prev);
      CHECK(std::isfinite(v));
      CHECK(v > 0);
      prev = v;
    }
  }
}

TEST_CASE("min_beta errors") {
  CHECK_THROWS_KIND(min_beta(TheoremId::T1a, JanowskiParams(1, -1), 3), ErrorKind::DegenerateInput);
  CHECK_NOTHROW(min_beta(TheoremId::T1a, JanowskiParams(1, -1), 2));
  CHECK_THROWS_KIND(min_beta(TheoremId::T2a, JanowskiParams(1, -1), 5), ErrorKind::DegenerateInput);
  CHECK_NOTHROW(min_beta(TheoremId::T2a, JanowskiParams(1, -1), 4));
  CHECK_THROWS_KIND(min_beta(TheoremId::T4, JanowskiParams(1, 0), 0), ErrorKind::DegenerateInput);
  CHECK_THROWS_KIND(min_beta(TheoremId::T3, JanowskiParams(0.5, 0), 0), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(min_beta(TheoremId::T3, JanowskiParams(0.5, 0), 0, 1.5), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(min_beta(TheoremId::T1a, JanowskiParams(0.5, 0), -1), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(min_beta(TheoremId::S1a, JanowskiParams(0.5, 0.2), 0), ErrorKind::UnsupportedCase);
  try {
    (void)min_beta(TheoremId::T4, JanowskiParams(1, 0), 0);
  } catch (const Error& err) {
    CHECK(std::string(err.what()).find("1-|A|") != std::string::npos);
  }
}

TEST_CASE("condition examples") {
  const auto s1b = condition_holds(TheoremId::S1b, JanowskiParams(0.8, 0.2), 1.0, 12.0);
  CHECK(s1b.holds);
  CHECK(s1b.slack > 0);
  CHECK(close(s1b.slack, oracle_slack(TheoremId::S1b, 0.8, 0.2, 1.0, 12.0)));
  CHECK(s1b.case_label == "B>0");

  for (double B : {0.1, 0.5, 0.9}) {
    const auto r = condition_holds(TheoremId::S1a, JanowskiParams(0.95, B), 1.0, 1e-12);
    CHECK_FALSE(r.holds);
    CHECK(r.rhs > 0);
  }

  const auto t5 = condition_holds(TheoremId::T5, JanowskiParams(1.0, -0.1), 1.0, 1.0, 0);
  const double b0 = newton_root();
  CHECK(close(t5.lhs, 1.1 * 0.9));
  CHECK(close(t5.rhs, b0 * 1.1 * 1.1 * 3.1));
  CHECK(t5.holds == (t5.lhs >= t5.rhs));
}

TEST_CASE("condition slack equals the re-typed displays") {
  for (auto [A, B] : pairs()) {
    const JanowskiParams p(A, B);
    for (double be : {0.3, 1.0, 4.0}) {
      for (double ga : {0.5, 2.0, 30.0}) {
        for (int k : {0, 1, 2, 3, 5}) {
          CHECK(close(condition_holds(TheoremId::T5, p, be, ga, k).slack, oracle_slack(TheoremId::T5, A, B, be, ga, k),
                      1e-11));
        }
        for (TheoremId id : {TheoremId::S1a, TheoremId::S1b, TheoremId::S1c, TheoremId::S2}) {
          CAPTURE(theorem_name(id));
          const auto r = condition_holds(id, p, be, ga);
          CHECK(close(r.slack, oracle_slack(id, A, B, be, ga), 1e-11));
          CHECK(r.holds == (r.lhs >= r.rhs));
          CHECK(r.case_label == (B > 0 ? "B>0" : "B<0"));
        }
      }
    }
  }
}

TEST_CASE("slack is continuous in beta and gamma") {
  const JanowskiParams p(0.6, -0.3);
  for (TheoremId id : {TheoremId::S1a, TheoremId::S2}) {
    double prev = condition_holds(id, p, 1.0, 1.0).slack;
    for (int i = 1; i <= 200; ++i) {
      const double cur = condition_holds(id, p, 1.0 + i * 1e-3, 1.0 + i * 1e-3).slack;
      CHECK(std::abs(cur - prev) < 1e-2);
      prev = cur;
    }
  }
}

TEST_CASE("condition errors") {
  CHECK_THROWS_KIND(condition_holds(TheoremId::S1a, JanowskiParams(0.5, 0.0), 1, 1), ErrorKind::UnsupportedCase);
  CHECK_THROWS_KIND(condition_holds(TheoremId::S1a, JanowskiParams(1.0, 0.2), 1, 1), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(condition_holds(TheoremId::S2, JanowskiParams(0.5, 0.2), 0, 1), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(condition_holds(TheoremId::T5, JanowskiParams(0.5, 0.2), 1, 0), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(condition_holds(TheoremId::T1a, JanowskiParams(0.5, 0.2), 1, 1), ErrorKind::UnsupportedCase);
}

TEST_CASE("B = 0 extension") {
  const auto r = condition_b0_limit(TheoremId::S1a, 0.5, 1.0, 10.0);
  CHECK(r.case_label == "B=0 (extension)");
  // At B = 0 both displays read (A)(γ) >= (β0+1).
  CHECK(close(r.slack, 0.5 * 10.0 - (newton_root() + 1)));
  // The limit is continuous from either side.
  const double above = condition_holds(TheoremId::S1a, JanowskiParams(0.5, 1e-9), 1.0, 10.0).slack;
  const double below = condition_holds(TheoremId::S1a, JanowskiParams(0.5, -1e-9), 1.0, 10.0).slack;
  CHECK(std::abs(above - r.slack) < 1e-7);
  CHECK(std::abs(below - r.slack) < 1e-7);
}

TEST_CASE("gamma at equality") {
  for (auto [A, B] : pairs()) {
    const JanowskiParams p(A, B);
    for (TheoremId id : {TheoremId::S1a, TheoremId::S1b, TheoremId::S1c, TheoremId::S2}) {
      for (double be : {0.5, 1.0, 2.0}) {
        const double g = s_family_gamma_at_equality(id, p, be);
        CHECK(condition_holds(id, p, be, g).holds);
        CHECK_FALSE(condition_holds(id, p, be, g * (1 - 1e-9)).holds);
      }
    }
    for (int k : {1, 2, 3, 5}) {
      for (double ratio : {0.5, 1.0, 2.0}) {
        const auto g = t5_gamma_at_equality(p, k, ratio);
        if (!g) continue;
        CHECK(condition_holds(TheoremId::T5, p, ratio * *g, *g, k).holds);
        CHECK_FALSE(condition_holds(TheoremId::T5, p, ratio * *g * (1 + 1e-9), *g * (1 + 1e-9), k).holds);
      }
    }
    CHECK_FALSE(t5_gamma_at_equality(p, 0, 1.0).has_value());
  }
}

TEST_CASE("theorem names") {
  CHECK(all_theorems().size() == 12);
  for (const auto& t : all_theorems()) CHECK(parse_theorem(t.name) == t.id);
  CHECK(parse_theorem("T3-a0") == TheoremId::T3a0);
  CHECK(parse_theorem("T3α0") == TheoremId::T3a0);
  CHECK_THROWS_KIND(parse_theorem("T9"), ErrorKind::InvalidArgument);
  CHECK(theorem_info(TheoremId::T5).kind == BoundKind::Condition);
  CHECK(theorem_info(TheoremId::T4).kind == BoundKind::MinBeta);
}
