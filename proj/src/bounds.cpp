#include "subord/bounds.hpp"

#include <cmath>
#include <numbers>

#include "subord/error.hpp"

namespace subord {

namespace {

constexpr double kE = std::numbers::e;

const std::vector<TheoremInfo> kTheorems = {
    {TheoremId::T1a, "T1a", BoundKind::MinBeta, "1 + beta zp'/p^k < phi_SG implies p in P[A,B]",
     "Then the following are sufficient for"},
    {TheoremId::T1b, "T1b", BoundKind::MinBeta, "1 + beta zp'/p^k < e^z implies p in P[A,B]",
     "Then the following are sufficient for"},
    {TheoremId::T2a, "T2a", BoundKind::MinBeta, "1 + beta (zp')^2/p^k < phi_SG implies p in P[A,B]",
     "If any of the following subordinations holds true"},
    {TheoremId::T2b, "T2b", BoundKind::MinBeta, "1 + beta (zp')^2/p^k < e^z implies p in P[A,B]",
     "If any of the following subordinations holds true"},
    {TheoremId::T3, "T3", BoundKind::MinBeta, "(1-alpha)p + alpha p^2 + beta zp'/p^k < phi_SG implies p in P[A,B]",
     "(1-\\alpha) p(z) + \\alpha p^2(z)"},
    {TheoremId::T3a0, "T3a0", BoundKind::MinBeta, "p + beta zp'/p^k < phi_SG implies p in P[A,B]",
     "the above theorem reduces"},
    {TheoremId::T4, "T4", BoundKind::MinBeta, "1/p - beta zp'/p^k < phi_SG implies p in P[A,B]",
     "\\left(\\frac{1}{p(z)}\\right) - \\beta z \\frac{p'(z)}{p^{k}(z)}"},
    {TheoremId::T5, "T5", BoundKind::Condition, "p + zp'/(beta p + gamma)^k < phi_SG implies p in P[A,B]",
     "p(z)+\\frac{zp'(z)}{(\\beta p(z)+ \\gamma)^{k}}"},
    {TheoremId::S1a, "S1a", BoundKind::Condition, "1 + gamma zp' + beta z^2p'' < phi_SG implies p in P[A,B]",
     "each of the following is sufficient"},
    {TheoremId::S1b, "S1b", BoundKind::Condition, "1 + gamma zp' + beta z^2p'' < e^z implies p in P[A,B]",
     "each of the following is sufficient"},
    {TheoremId::S1c, "S1c", BoundKind::Condition,
     "1 + gamma zp' + beta z^2p'' < (1+Az)/(1+Bz) implies p in P[A,B]", "each of the following is sufficient"},
    {TheoremId::S2, "S2", BoundKind::Condition, "p + gamma zp' + beta z^2p'' < phi_SG implies p in P[A,B]",
     "implies p \\prec (1+Az)/(1+Bz)"},
};

double beta0_bisect() noexcept {
  // Runs to full double resolution (about 53 halvings), well past 1e-12.
  double lo = 0.0, hi = 1.0;
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    if (quartic(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void require_k(int k) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "k must be a non-negative integer, got " + std::to_string(k));
}

void require_nonzero(double factor, const char* what) {
  if (factor <= 0.0) fail(ErrorKind::DegenerateInput, std::string(what) + " vanishes in the divisor of the bound");
}

// The S-family displays differ only by the sign of 2B: D = 1 + B^2 ± 2B,
// G = -2B(B ± 1), bracket = γD + Gβ.
struct SDisplay {
  double D;
  double bracket;
  const char* label;
};

SDisplay s_display(double B, double beta, double gamma) {
  const double sign = B > 0.0 ? 1.0 : -1.0;
  const double D = 1.0 + B * B + sign * 2.0 * B;
  const double G = -2.0 * B * (B + sign);
  return {D, gamma * D + G * beta, B > 0.0 ? "B>0" : "B<0"};
}

ConditionResult s_condition(TheoremId id, double A, double B, double beta, double gamma, const char* label) {
  const SDisplay s = s_display(B, beta, gamma);
  const double D2 = s.D * s.D;
  double lhs = 0.0, rhs = 0.0;
  switch (id) {
    case TheoremId::S1a:
      lhs = (A - B) * s.bracket;
      rhs = (beta0() + 1.0) * D2;
      break;
    case TheoremId::S1b:
      lhs = (A - B) * s.bracket;
      rhs = (kE - 1.0) * D2;
      break;
    case TheoremId::S1c:
      lhs = (A - B) * (1.0 - B * B) * s.bracket - std::abs(B) * (A - B) * D2;
      rhs = (A - B) * D2;
      break;
    case TheoremId::S2:
      lhs = (A - B) * (1.0 + B) * s.bracket - (1.0 + A) * D2;
      rhs = beta0() * (1.0 + B) * D2;
      break;
    default: fail(ErrorKind::UnsupportedCase, "not an S-family theorem");
  }
  return {lhs >= rhs, lhs - rhs, lhs, rhs, label ? label : s.label};
}

bool is_s_family(TheoremId id) {
  return id == TheoremId::S1a || id == TheoremId::S1b || id == TheoremId::S1c || id == TheoremId::S2;
}

}  // namespace

const std::vector<TheoremInfo>& all_theorems() { return kTheorems; }

const TheoremInfo& theorem_info(TheoremId id) {
  for (const auto& t : kTheorems) {
    if (t.id == id) return t;
  }
  fail(ErrorKind::InvalidArgument, "unknown theorem id");
}

std::string_view theorem_name(TheoremId id) { return theorem_info(id).name; }

TheoremId parse_theorem(std::string_view text) {
  if (text == "T3-a0" || text == "T3α0" || text == "T3-α0") return TheoremId::T3a0;
  for (const auto& t : kTheorems) {
    if (t.name == text) return t.id;
  }
  std::string known;
  for (const auto& t : kTheorems) known += (known.empty() ? "" : ", ") + std::string(t.name);
  fail(ErrorKind::InvalidArgument, "unknown theorem '" + std::string(text) + "' (known: " + known + ")");
}

double quartic(double b) noexcept {
  const double e2 = kE * kE;
  return (((e2 - 1.0) * b - 2.0 * (e2 - 4.0)) * b + 4.0 * (e2 - 6.0)) * b * b + 32.0 * b - 16.0;
}

double compute_beta0() noexcept { return beta0_bisect(); }

double beta0() noexcept {
  static const double value = beta0_bisect();
  return value;
}

double lemma_exp_threshold() noexcept { return kE - 1.0; }

MinBeta min_beta(TheoremId id, const JanowskiParams& params, int k, std::optional<double> alpha) {
  require_k(k);
  const double A = params.A(), B = params.B();
  const double aA = std::abs(A), aB = std::abs(B);
  const double AB = A - B;
  const double b0 = beta0();
  switch (id) {
    case TheoremId::T1a:
    case TheoremId::T1b: {
      const double c = id == TheoremId::T1a ? b0 : kE - 1.0;
      if (k <= 2) return {c * std::pow(1.0 + aA, k) * std::pow(1.0 + aB, 2 - k) / AB, "k<=2"};
      require_nonzero(1.0 - aB, "1-|B|");
      return {c * std::pow(1.0 + aA, k) / (AB * std::pow(1.0 - aB, k - 2)), "k>2"};
    }
    case TheoremId::T2a:
    case TheoremId::T2b: {
      const double c = id == TheoremId::T2a ? b0 : kE - 1.0;
      if (k <= 4) return {c * std::pow(1.0 + aA, k) * std::pow(1.0 + aB, 4 - k) / (AB * AB), "k<=4"};
      require_nonzero(1.0 - aB, "1-|B|");
      return {c * std::pow(1.0 + aA, k) / (AB * AB * std::pow(1.0 - aB, k - 4)), "k>4"};
    }
    case TheoremId::T3: {
      if (!alpha) fail(ErrorKind::InvalidArgument, "T3 needs alpha");
      const double al = *alpha;
      if (!(al >= 0.0 && al <= 1.0)) fail(ErrorKind::InvalidArgument, "alpha must lie in [0,1]");
      if (k > 0) require_nonzero(1.0 - aB, "1-|B|");
      const double num = b0 * std::pow(1.0 + aA, k) * (1.0 + aB) * (1.0 + aB) +
                         (1.0 - al) * std::pow(1.0 + aA, k + 1) * (1.0 + aB) + al * std::pow(1.0 + aA, k + 2);
      return {num / (AB * std::pow(1.0 - aB, k)), "all k"};
    }
    case TheoremId::T3a0: {
      if (k > 0) require_nonzero(1.0 - aB, "1-|B|");
      // Typed separately from T3; the trailing zero term keeps the sum
      // bit-identical to T3 at alpha = 0.
      const double num = b0 * std::pow(1.0 + aA, k) * (1.0 + aB) * (1.0 + aB) +
                         1.0 * std::pow(1.0 + aA, k + 1) * (1.0 + aB) + 0.0;
      return {num / (AB * std::pow(1.0 - aB, k)), "all k"};
    }
    case TheoremId::T4: {
      require_nonzero(1.0 - aA, "1-|A|");
      if (k <= 2) {
        const double num = b0 * std::pow(1.0 + aA, k + 1) * std::pow(1.0 + aB, 2 - k) +
                           std::pow(1.0 + aA, k) * std::pow(1.0 + aB, 3 - k);
        return {num / (AB * (1.0 - aA)), "k<=2"};
      }
      require_nonzero(1.0 - aB, "1-|B|");
      const double num = b0 * std::pow(1.0 + aA, k) + std::pow(1.0 + aA, k) * (1.0 + aB);
      return {num / (AB * (1.0 - aA) * std::pow(1.0 - aB, k - 2)), "k>2"};
    }
    default:
      fail(ErrorKind::UnsupportedCase,
           std::string(theorem_name(id)) + " states a condition, not a minimum beta; use condition_holds");
  }
}

double t3_alternative_grouping(const JanowskiParams& params, int k, double alpha) {
  require_k(k);
  const double aA = std::abs(params.A()), aB = std::abs(params.B());
  if (k > 0) require_nonzero(1.0 - aB, "1-|B|");
  const double num = beta0() * std::pow(1.0 + aA, k) * (1.0 + aB) * (1.0 + aB) +
                     (1.0 - alpha) * (std::pow(1.0 + aA, k + 1) * (1.0 + aB) + alpha * std::pow(1.0 + aA, k + 2));
  return num / ((params.A() - params.B()) * std::pow(1.0 - aB, k));
}

ConditionResult condition_holds(TheoremId id, const JanowskiParams& params, double beta, double gamma, int k) {
  const double A = params.A(), B = params.B();
  if (!std::isfinite(beta) || !std::isfinite(gamma)) fail(ErrorKind::InvalidArgument, "beta and gamma must be finite");
  if (id == TheoremId::T5) {
    require_k(k);
    if (!(gamma > 0.0)) fail(ErrorKind::InvalidArgument, "T5 needs gamma > 0");
    const double aA = std::abs(A), aB = std::abs(B);
    const double X = beta * (1.0 + aA) + gamma * (1.0 + aB);
    if (k <= 2) {
      const double lhs = (A - B) * (1.0 - aB);
      const double rhs = beta0() * std::pow(1.0 + aB, 2 - k) * std::pow(X, k) * (2.0 + aA + aB);
      return {lhs >= rhs, lhs - rhs, lhs, rhs, "k<=2"};
    }
    const double lhs = (A - B) * std::pow(1.0 - aB, k - 1);
    const double rhs = beta0() * (2.0 + aA + aB) * std::pow(X, k);
    return {lhs >= rhs, lhs - rhs, lhs, rhs, "k>2"};
  }
  if (!is_s_family(id)) {
    fail(ErrorKind::UnsupportedCase, std::string(theorem_name(id)) + " has a minimum-beta bound; use min_beta");
  }
  params.require_strict(std::string(theorem_name(id)));
  if (B == 0.0) {
    fail(ErrorKind::UnsupportedCase,
         std::string(theorem_name(id)) + " is stated for B > 0 and B < 0 only; B = 0 is not covered");
  }
  if (!(beta > 0.0) || !(gamma > 0.0)) {
    fail(ErrorKind::InvalidArgument, std::string(theorem_name(id)) + " needs beta > 0 and gamma > 0");
  }
  return s_condition(id, A, B, beta, gamma, nullptr);
}

ConditionResult condition_b0_limit(TheoremId id, double A, double beta, double gamma) {
  if (!is_s_family(id)) fail(ErrorKind::UnsupportedCase, "the B = 0 limit exists for the S-family only");
  JanowskiParams::strict(A, 0.0);
  if (!(beta > 0.0) || !(gamma > 0.0)) fail(ErrorKind::InvalidArgument, "beta and gamma must be positive");
  return s_condition(id, A, 0.0, beta, gamma, "B=0 (extension)");
}

double s_family_gamma_at_equality(TheoremId id, const JanowskiParams& params, double beta) {
  // Slack is affine in γ, so two evaluations locate the root.
  const double s1 = condition_holds(id, params, beta, 1.0).slack;
  const double s2 = condition_holds(id, params, beta, 2.0).slack;
  const double slope = s2 - s1;
  if (!(slope > 0.0)) fail(ErrorKind::UnsupportedCase, "condition does not improve with gamma");
  double gamma = 1.0 - s1 / slope;
  if (!(gamma > 0.0)) gamma = std::nextafter(0.0, 1.0);
  while (!condition_holds(id, params, beta, gamma).holds) gamma = std::nextafter(gamma, INFINITY);
  while (gamma > 0.0) {
    const double lower = std::nextafter(gamma, 0.0);
    if (!(lower > 0.0) || !condition_holds(id, params, beta, lower).holds) break;
    gamma = lower;
  }
  return gamma;
}

std::optional<double> t5_gamma_at_equality(const JanowskiParams& params, int k, double ratio) {
  require_k(k);
  if (!(ratio > 0.0)) fail(ErrorKind::InvalidArgument, "ratio beta/gamma must be positive");
  if (k == 0) return std::nullopt;
  const double A = params.A(), B = params.B();
  const double aA = std::abs(A), aB = std::abs(B);
  const double xk = k <= 2 ? (A - B) * (1.0 - aB) / (beta0() * std::pow(1.0 + aB, 2 - k) * (2.0 + aA + aB))
                           : (A - B) * std::pow(1.0 - aB, k - 1) / (beta0() * (2.0 + aA + aB));
  if (!(xk > 0.0)) return std::nullopt;
  double gamma = std::pow(xk, 1.0 / k) / (ratio * (1.0 + aA) + (1.0 + aB));
  while (gamma > 0.0 && !condition_holds(TheoremId::T5, params, ratio * gamma, gamma, k).holds) {
    gamma = std::nextafter(gamma, 0.0);
  }
  if (!(gamma > 0.0)) return std::nullopt;
  return gamma;
}

}  // namespace subord
