#include "subord/jets.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "subord/error.hpp"

namespace subord {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

constexpr double kPoleEps = 1e-14;

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_num(std::string_view text, std::string_view what) {
  std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    fail(ErrorKind::InvalidArgument, "cannot parse " + std::string(what) + " from '" + s + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// key=value list with exactly the given keys (in any order).
std::vector<double> parse_keys(std::string_view body, std::initializer_list<std::string_view> keys,
                               std::string_view family) {
  std::vector<double> out(keys.size());
  std::vector<bool> seen(keys.size(), false);
  for (auto item : split(body, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorKind::InvalidArgument, "expected key=value in " + std::string(family) + " spec, got '" +
                                           std::string(item) + "'");
    }
    const auto key = item.substr(0, eq);
    std::size_t idx = 0;
    for (auto k : keys) {
      if (k == key) break;
      ++idx;
    }
    if (idx == keys.size()) {
      fail(ErrorKind::InvalidArgument, "unknown key '" + std::string(key) + "' in " + std::string(family) + " spec");
    }
    out[idx] = parse_num(item.substr(eq + 1), key);
    seen[idx] = true;
  }
  std::size_t idx = 0;
  for (auto k : keys) {
    if (!seen[idx++]) fail(ErrorKind::InvalidArgument, "missing key '" + std::string(k) + "' in " + std::string(family));
  }
  return out;
}

cplx ipow(cplx x, int k) {
  cplx out(1.0, 0.0);
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

[[noreturn]] void pole(std::string_view family) {
  fail(ErrorKind::PoleAtBoundary, "evaluation point hits a pole of " + std::string(family));
}

std::array<cplx, 4> raw_jet(const FnSpec& spec, cplx z) {
  return std::visit(
      overloaded{
          [&](const JanowskiQ& q) -> std::array<cplx, 4> {
            const cplx den = 1.0 + q.B * z;
            if (std::abs(den) < kPoleEps) pole("janowski");
            const cplx inv = 1.0 / den;
            const double ab = q.A - q.B;
            return {(1.0 + q.A * z) * inv, ab * inv * inv, -2.0 * q.B * ab * inv * inv * inv,
                    6.0 * q.B * q.B * ab * inv * inv * inv * inv};
          },
          [&](const ExpFn&) -> std::array<cplx, 4> {
            const cplx e = std::exp(z);
            return {e, e, e, e};
          },
          [&](const SigmoidFn&) -> std::array<cplx, 4> {
            const cplx den = 1.0 + std::exp(-z);
            if (std::abs(den) < kPoleEps) pole("sigmoid");
            const cplx sg = 1.0 / den;
            const cplx d1 = sg * (1.0 - sg);
            return {2.0 * sg, 2.0 * d1, 2.0 * d1 * (1.0 - 2.0 * sg), 2.0 * d1 * (1.0 - 6.0 * sg + 6.0 * sg * sg)};
          },
          [&](const Polynomial& p) -> std::array<cplx, 4> {
            // Horner with running Taylor coefficients of the derivatives.
            cplx p0(0.0), p1(0.0), p2(0.0), p3(0.0);
            for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
              p3 = p3 * z + p2;
              p2 = p2 * z + p1;
              p1 = p1 * z + p0;
              p0 = p0 * z + *it;
            }
            return {p0, p1, 2.0 * p2, 6.0 * p3};
          },
          [&](const Moebius& m) -> std::array<cplx, 4> {
            const cplx den = m.c * z + m.d;
            if (std::abs(den) < kPoleEps) pole("moebius");
            const cplx inv = 1.0 / den;
            const double det = m.a * m.d - m.b * m.c;
            return {(m.a * z + m.b) * inv, det * inv * inv, -2.0 * m.c * det * inv * inv * inv,
                    6.0 * m.c * m.c * det * inv * inv * inv * inv};
          },
          [&](const Koebe&) -> std::array<cplx, 4> {
            const cplx w = 1.0 - z;
            if (std::abs(w) < kPoleEps) pole("koebe");
            const cplx inv = 1.0 / w;
            const cplx inv2 = inv * inv;
            return {z * inv2, (1.0 + z) * inv2 * inv, (4.0 + 2.0 * z) * inv2 * inv2,
                    (18.0 + 6.0 * z) * inv2 * inv2 * inv};
          },
          [&](const ScaledCompose& c) -> std::array<cplx, 4> {
            // u = ω z^n and its derivatives; the falling factorial vanishes when j > n.
            std::array<cplx, 4> u{};
            for (int j = 0; j <= 3; ++j) {
              if (j > c.n) break;
              double ff = 1.0;
              for (int i = 0; i < j; ++i) ff *= static_cast<double>(c.n - i);
              u[static_cast<std::size_t>(j)] = ff * c.omega * ipow(z, c.n - j);
            }
            const auto g = raw_jet(*c.inner, u[0]);
            return {g[0], g[1] * u[1], g[2] * u[1] * u[1] + g[1] * u[2],
                    g[3] * u[1] * u[1] * u[1] + 3.0 * g[2] * u[1] * u[2] + g[1] * u[3]};
          },
      },
      spec.kind());
}

// Shared ψ evaluation; on failure returns nullopt and names the culprit.
std::optional<cplx> psi_core(const PsiForm& form, cplx r, cplx s, cplx t, const char** fault) noexcept {
  const cplx zero(0.0, 0.0);
  auto over_rk = [&](int k) -> std::optional<cplx> {
    if (k == 0) return cplx(1.0, 0.0);
    if (r == zero) {
      *fault = "p^k (p = 0)";
      return std::nullopt;
    }
    return 1.0 / ipow(r, k);
  };
  std::optional<cplx> out = std::visit(
      overloaded{
          [&](const FirstOrderPow& f) -> std::optional<cplx> {
            auto inv = over_rk(f.k);
            if (!inv) return std::nullopt;
            return 1.0 + f.beta * s * *inv;
          },
          [&](const FirstOrderSqPow& f) -> std::optional<cplx> {
            auto inv = over_rk(f.k);
            if (!inv) return std::nullopt;
            return 1.0 + f.beta * s * s * *inv;
          },
          [&](const ConvexCombo& f) -> std::optional<cplx> {
            auto inv = over_rk(f.k);
            if (!inv) return std::nullopt;
            return (1.0 - f.alpha) * r + f.alpha * r * r + f.beta * s * *inv;
          },
          [&](const Reciprocal& f) -> std::optional<cplx> {
            if (r == zero) {
              *fault = "1/p (p = 0)";
              return std::nullopt;
            }
            auto inv = over_rk(f.k);
            if (!inv) return std::nullopt;
            return 1.0 / r - f.beta * s * *inv;
          },
          [&](const Resolvent& f) -> std::optional<cplx> {
            if (f.k == 0) return r + s;
            const cplx base = f.beta * r + f.gamma;
            if (base == zero) {
              *fault = "(beta*p + gamma)^k (beta*p + gamma = 0)";
              return std::nullopt;
            }
            return r + s / ipow(base, f.k);
          },
          [&](const SecondOrderConst& f) -> std::optional<cplx> { return 1.0 + f.gamma * s + f.beta * t; },
          [&](const SecondOrderFull& f) -> std::optional<cplx> { return r + f.gamma * s + f.beta * t; },
      },
      form);
  if (out && !finite(*out)) {
    *fault = "non-finite result";
    return std::nullopt;
  }
  return out;
}

void require_order(const Jet& jet, int order, std::string_view who) {
  if (jet.order() < order) {
    fail(ErrorKind::InvalidArgument, std::string(who) + " needs a jet of order >= " + std::to_string(order));
  }
}

}  // namespace

Jet::Jet(int order, std::array<cplx, 4> values) : order_(order), values_(values) {
  if (order != 2 && order != 3) fail(ErrorKind::InvalidArgument, "jet order must be 2 or 3");
  for (int i = 0; i <= order; ++i) {
    if (!finite(values_[static_cast<std::size_t>(i)])) fail(ErrorKind::DegenerateInput, "jet entry is not finite");
  }
  for (int i = order + 1; i < 4; ++i) values_[static_cast<std::size_t>(i)] = cplx(0.0, 0.0);
}

cplx Jet::operator[](int i) const {
  if (i < 0 || i > order_) fail(ErrorKind::InvalidArgument, "jet index out of range");
  return values_[static_cast<std::size_t>(i)];
}

FnSpec FnSpec::janowski(double A, double B) {
  if (!std::isfinite(A) || !std::isfinite(B)) fail(ErrorKind::InvalidArgument, "janowski parameters must be finite");
  return FnSpec(JanowskiQ{A, B});
}
FnSpec FnSpec::exp() { return FnSpec(ExpFn{}); }
FnSpec FnSpec::sigmoid() { return FnSpec(SigmoidFn{}); }
FnSpec FnSpec::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) fail(ErrorKind::InvalidArgument, "polynomial needs at least one coefficient");
  for (double c : coeffs) {
    if (!std::isfinite(c)) fail(ErrorKind::InvalidArgument, "polynomial coefficients must be finite");
  }
  return FnSpec(Polynomial{std::move(coeffs)});
}
FnSpec FnSpec::moebius(double a, double b, double c, double d) {
  if (a * d - b * c == 0.0) fail(ErrorKind::DegenerateInput, "moebius map with ad - bc = 0 is constant");
  return FnSpec(Moebius{a, b, c, d});
}
FnSpec FnSpec::koebe() { return FnSpec(Koebe{}); }
FnSpec FnSpec::compose(FnSpec inner, cplx omega, int n) {
  if (!(std::abs(omega) <= 1.0)) fail(ErrorKind::InvalidArgument, "compose needs |omega| <= 1");
  if (n < 1) fail(ErrorKind::InvalidArgument, "compose needs n >= 1");
  return FnSpec(ScaledCompose{std::make_shared<const FnSpec>(std::move(inner)), omega, n});
}

std::string FnSpec::to_string() const {
  return std::visit(overloaded{
                        [](const JanowskiQ& q) { return "janowski:A=" + num(q.A) + ",B=" + num(q.B); },
                        [](const ExpFn&) { return std::string("exp"); },
                        [](const SigmoidFn&) { return std::string("sigmoid"); },
                        [](const Polynomial& p) {
                          std::string out = "poly:";
                          for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
                            if (i) out += ',';
                            out += num(p.coeffs[i]);
                          }
                          return out;
                        },
                        [](const Moebius& m) {
                          return "moebius:a=" + num(m.a) + ",b=" + num(m.b) + ",c=" + num(m.c) + ",d=" + num(m.d);
                        },
                        [](const Koebe&) { return std::string("koebe"); },
                        [](const ScaledCompose& c) {
                          std::string out = "compose:" + c.inner->to_string() + ",omega=" + num(c.omega.real());
                          if (c.omega.imag() != 0.0) out += ",omega_im=" + num(c.omega.imag());
                          return out + ",n=" + std::to_string(c.n);
                        },
                    },
                    kind_);
}

FnSpec FnSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const auto head = text.substr(0, colon);
  const auto body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto no_body = [&](FnSpec spec) {
    if (colon != std::string_view::npos) {
      fail(ErrorKind::InvalidArgument, "family '" + std::string(head) + "' takes no parameters");
    }
    return spec;
  };
  if (head == "exp") return no_body(exp());
  if (head == "sigmoid") return no_body(sigmoid());
  if (head == "koebe") return no_body(koebe());
  if (head == "identity") return no_body(polynomial({0.0, 1.0}));
  if (head == "janowski") {
    const auto v = parse_keys(body, {"A", "B"}, head);
    return janowski(v[0], v[1]);
  }
  if (head == "moebius") {
    const auto v = parse_keys(body, {"a", "b", "c", "d"}, head);
    return moebius(v[0], v[1], v[2], v[3]);
  }
  if (head == "poly") {
    std::vector<double> coeffs;
    for (auto item : split(body, ',')) coeffs.push_back(parse_num(item, "poly coefficient"));
    return polynomial(std::move(coeffs));
  }
  if (head == "compose") {
    // The outermost compose owns the last ",omega=" in the text.
    const auto at = body.rfind(",omega=");
    if (at == std::string_view::npos) fail(ErrorKind::InvalidArgument, "compose spec needs ,omega=...,n=...");
    const auto tail = body.substr(at + 1);
    double re = 0.0, im = 0.0;
    int n = 0;
    bool have_re = false, have_n = false;
    for (auto item : split(tail, ',')) {
      const auto eq = item.find('=');
      const auto key = item.substr(0, eq);
      const auto val = eq == std::string_view::npos ? std::string_view{} : item.substr(eq + 1);
      if (key == "omega") {
        re = parse_num(val, "omega");
        have_re = true;
      } else if (key == "omega_im") {
        im = parse_num(val, "omega_im");
      } else if (key == "n") {
        const double nv = parse_num(val, "n");
        if (nv != std::floor(nv)) fail(ErrorKind::InvalidArgument, "compose n must be an integer");
        n = static_cast<int>(nv);
        have_n = true;
      } else {
        fail(ErrorKind::InvalidArgument, "unknown key '" + std::string(key) + "' in compose spec");
      }
    }
    if (!have_re || !have_n) fail(ErrorKind::InvalidArgument, "compose spec needs omega= and n=");
    return compose(parse(body.substr(0, at)), cplx(re, im), n);
  }
  fail(ErrorKind::InvalidArgument, "unknown function family '" + std::string(head) + "'");
}

Jet eval_jet(const FnSpec& spec, cplx z, int order) {
  if (order != 2 && order != 3) fail(ErrorKind::InvalidArgument, "jet order must be 2 or 3");
  if (!(std::abs(z) < 1.0)) fail(ErrorKind::DegenerateInput, "jets are evaluated inside the unit disk only");
  return Jet(order, raw_jet(spec, z));
}

void require_p_normalized(const FnSpec& p) {
  const cplx v = raw_jet(p, cplx(0.0, 0.0))[0];
  if (std::abs(v - 1.0) > 1e-12) {
    fail(ErrorKind::DegenerateInput, "candidate p must satisfy p(0) = 1, got p(0) = " + num(v.real()) +
                                         (v.imag() != 0.0 ? " + " + num(v.imag()) + "i" : ""));
  }
}

void require_f_normalized(const FnSpec& f) {
  const auto j = raw_jet(f, cplx(0.0, 0.0));
  if (std::abs(j[0]) > 1e-12 || std::abs(j[1] - 1.0) > 1e-12) {
    fail(ErrorKind::DegenerateInput, "f must satisfy f(0) = 0 and f'(0) = 1");
  }
}

void validate(const PsiForm& form) {
  auto check_k = [](int k) {
    if (k < 0) fail(ErrorKind::InvalidArgument, "k must be a non-negative integer");
  };
  auto check_finite = [](double v, const char* name) {
    if (!std::isfinite(v)) fail(ErrorKind::InvalidArgument, std::string(name) + " must be finite");
  };
  std::visit(overloaded{
                 [&](const FirstOrderPow& f) { check_k(f.k), check_finite(f.beta, "beta"); },
                 [&](const FirstOrderSqPow& f) { check_k(f.k), check_finite(f.beta, "beta"); },
                 [&](const ConvexCombo& f) {
                   check_k(f.k);
                   check_finite(f.beta, "beta");
                   if (!(f.alpha >= 0.0 && f.alpha <= 1.0)) fail(ErrorKind::InvalidArgument, "alpha must lie in [0,1]");
                 },
                 [&](const Reciprocal& f) { check_k(f.k), check_finite(f.beta, "beta"); },
                 [&](const Resolvent& f) {
                   check_k(f.k);
                   check_finite(f.beta, "beta");
                   check_finite(f.gamma, "gamma");
                   if (!(f.gamma > 0.0)) fail(ErrorKind::InvalidArgument, "gamma must be positive");
                 },
                 [&](const SecondOrderConst& f) {
                   check_finite(f.beta, "beta");
                   check_finite(f.gamma, "gamma");
                   if (f.gamma < 0.0) fail(ErrorKind::InvalidArgument, "gamma must be non-negative");
                 },
                 [&](const SecondOrderFull& f) {
                   check_finite(f.beta, "beta");
                   check_finite(f.gamma, "gamma");
                   if (f.gamma < 0.0) fail(ErrorKind::InvalidArgument, "gamma must be non-negative");
                 },
             },
             form);
}

bool is_second_order(const PsiForm& form) noexcept {
  return std::holds_alternative<SecondOrderConst>(form) || std::holds_alternative<SecondOrderFull>(form);
}

double form_beta(const PsiForm& form) noexcept {
  return std::visit([](const auto& f) { return f.beta; }, form);
}

PsiForm with_beta(const PsiForm& form, double beta) {
  PsiForm out = form;
  std::visit([&](auto& f) { f.beta = beta; }, out);
  return out;
}

std::string describe(const PsiForm& form) {
  return std::visit(
      overloaded{
          [](const FirstOrderPow& f) { return "FirstOrderPow(beta=" + num(f.beta) + ",k=" + std::to_string(f.k) + ")"; },
          [](const FirstOrderSqPow& f) {
            return "FirstOrderSqPow(beta=" + num(f.beta) + ",k=" + std::to_string(f.k) + ")";
          },
          [](const ConvexCombo& f) {
            return "ConvexCombo(alpha=" + num(f.alpha) + ",beta=" + num(f.beta) + ",k=" + std::to_string(f.k) + ")";
          },
          [](const Reciprocal& f) { return "Reciprocal(beta=" + num(f.beta) + ",k=" + std::to_string(f.k) + ")"; },
          [](const Resolvent& f) {
            return "Resolvent(beta=" + num(f.beta) + ",gamma=" + num(f.gamma) + ",k=" + std::to_string(f.k) + ")";
          },
          [](const SecondOrderConst& f) {
            return "SecondOrderConst(gamma=" + num(f.gamma) + ",beta=" + num(f.beta) + ")";
          },
          [](const SecondOrderFull& f) {
            return "SecondOrderFull(gamma=" + num(f.gamma) + ",beta=" + num(f.beta) + ")";
          },
      },
      form);
}

std::optional<cplx> try_psi(const PsiForm& form, cplx r, cplx s, cplx t) noexcept {
  const char* fault = nullptr;
  return psi_core(form, r, s, t, &fault);
}

cplx psi_eval(const PsiForm& form, cplx r, cplx s, cplx t) {
  const char* fault = "unknown";
  if (auto v = psi_core(form, r, s, t, &fault)) return *v;
  fail(ErrorKind::DegenerateInput, std::string("division by zero in ") + describe(form) + ": " + fault);
}

cplx psi_apply(const PsiForm& form, const Jet& p_jet, cplx z) {
  return psi_eval(form, p_jet[0], z * p_jet[1], z * z * p_jet[2]);
}

cplx g_combo(const Jet& f_jet, cplx z) {
  const cplx f = f_jet[0], f1 = f_jet[1], f2 = f_jet[2];
  if (f == cplx(0.0, 0.0)) {
    if (z != cplx(0.0, 0.0)) fail(ErrorKind::DegenerateInput, "f(z) = 0 away from the origin in G(z)");
    if (f1 == cplx(0.0, 0.0)) fail(ErrorKind::DegenerateInput, "G(0) limit needs f'(0) != 0");
    return f2 / (2.0 * f1);
  }
  const cplx L = f1 / f;
  return L - z * L * L + z * f2 / f;
}

cplx h_combo(const Jet& f_jet, cplx z, double gamma, double beta) {
  require_order(f_jet, 3, "h_combo");
  const cplx f = f_jet[0], f1 = f_jet[1], f2 = f_jet[2], f3 = f_jet[3];
  if (f == cplx(0.0, 0.0)) {
    if (z != cplx(0.0, 0.0)) fail(ErrorKind::DegenerateInput, "f(z) = 0 away from the origin in H(z)");
    if (f1 == cplx(0.0, 0.0)) fail(ErrorKind::DegenerateInput, "H(0) limit needs f'(0) != 0");
    return cplx(1.0, 0.0);
  }
  const cplx z2 = z * z, z3 = z2 * z;
  const cplx P = z * f1 / f;
  const cplx Z2 = z2 * f2 / f;
  const cplx Z3 = z3 * f3 / f;
  const cplx cross = z3 * f1 * f2 / (f * f);
  return 1.0 + gamma * (Z2 - P * P + P) + beta * (Z3 + 2.0 * Z2 + 2.0 * P * P * P - 2.0 * P * P - 3.0 * cross);
}

Jet starlike_p_jet(const Jet& f_jet, cplx z) {
  require_order(f_jet, 3, "starlike_p_jet");
  const cplx f = f_jet[0], f1 = f_jet[1], f2 = f_jet[2], f3 = f_jet[3];
  if (f == cplx(0.0, 0.0)) {
    if (z != cplx(0.0, 0.0)) fail(ErrorKind::DegenerateInput, "f(z) = 0 away from the origin in z f'/f");
    if (f1 == cplx(0.0, 0.0)) fail(ErrorKind::DegenerateInput, "z f'/f limit needs f'(0) != 0");
    // z f'/f = 1 + b z + (2c - b^2) z^2 + ... with b = a2/a1, c = a3/a1.
    const cplx b = f2 / (2.0 * f1);
    const cplx c = f3 / (6.0 * f1);
    return Jet(2, {cplx(1.0, 0.0), b, 2.0 * (2.0 * c - b * b), cplx(0.0, 0.0)});
  }
  const cplx L = f1 / f, M = f2 / f, N = f3 / f;
  const cplx dL = M - L * L;
  const cplx d2L = N - 3.0 * L * M + 2.0 * L * L * L;
  return Jet(2, {z * L, L + z * dL, 2.0 * dL + z * d2L, cplx(0.0, 0.0)});
}

}  // namespace subord
