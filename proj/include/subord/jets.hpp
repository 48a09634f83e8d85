#pragma once

// Analytic test families with closed-form derivative jets, the ψ-shapes
// of the first- and second-order theorems, and the starlikeness combos
// 𝒢(z) and ℋ(z) built from a jet of f.

#include <array>
#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace subord {

using cplx = std::complex<double>;

/// Value and derivatives [f, f', f'', (f''')] at a point. Order is 2 or 3.
class Jet {
 public:
  Jet(int order, std::array<cplx, 4> values);

  int order() const noexcept { return order_; }
  /// i-th derivative, 0 <= i <= order().
  cplx operator[](int i) const;

 private:
  int order_;
  std::array<cplx, 4> values_;
};

class FnSpec;

struct JanowskiQ {
  double A;
  double B;
};
struct ExpFn {};
/// 2/(1+e^{-z}).
struct SigmoidFn {};
/// c0 + c1 z + c2 z^2 + ...
struct Polynomial {
  std::vector<double> coeffs;
};
/// (az + b)/(cz + d).
struct Moebius {
  double a, b, c, d;
};
/// z/(1-z)^2.
struct Koebe {};
/// inner(ω z^n).
struct ScaledCompose {
  std::shared_ptr<const FnSpec> inner;
  cplx omega;
  int n;
};

/// Immutable description of a test function. Cheap to copy and safe to
/// share across threads.
class FnSpec {
 public:
  using Variant = std::variant<JanowskiQ, ExpFn, SigmoidFn, Polynomial, Moebius, Koebe, ScaledCompose>;

  static FnSpec janowski(double A, double B);
  static FnSpec exp();
  static FnSpec sigmoid();
  static FnSpec polynomial(std::vector<double> coeffs);
  static FnSpec moebius(double a, double b, double c, double d);
  static FnSpec koebe();
  /// Requires |ω| <= 1 and n >= 1.
  static FnSpec compose(FnSpec inner, cplx omega, int n);

  const Variant& kind() const noexcept { return kind_; }

  /// Canonical text form, e.g. `janowski:A=0.5,B=-0.5`,
  /// `compose:exp,omega=0.8,n=2`, `poly:1,0.3,0.1`.
  std::string to_string() const;
  static FnSpec parse(std::string_view text);

 private:
  explicit FnSpec(Variant v) : kind_(std::move(v)) {}
  Variant kind_;
};

/// Closed-form jet at z. Requires |z| < 1 and order in {2, 3}.
/// Throws PoleAtBoundary when z hits a pole of the family.
Jet eval_jet(const FnSpec& spec, cplx z, int order);

/// Throws DegenerateInput unless |p(0) - 1| <= 1e-12.
void require_p_normalized(const FnSpec& p);

/// Throws DegenerateInput unless f(0) = 0 and f'(0) = 1 within 1e-12.
void require_f_normalized(const FnSpec& f);

// ψ-shapes. s = z p'(z), t = z^2 p''(z).

/// 1 + β s / r^k
struct FirstOrderPow {
  double beta;
  int k;
};
/// 1 + β s^2 / r^k
struct FirstOrderSqPow {
  double beta;
  int k;
};
/// (1-α) r + α r^2 + β s / r^k
struct ConvexCombo {
  double alpha;
  double beta;
  int k;
};
/// 1/r - β s / r^k
struct Reciprocal {
  double beta;
  int k;
};
/// r + s / (β r + γ)^k
struct Resolvent {
  double beta;
  double gamma;
  int k;
};
/// 1 + γ s + β t
struct SecondOrderConst {
  double gamma;
  double beta;
};
/// r + γ s + β t
struct SecondOrderFull {
  double gamma;
  double beta;
};

using PsiForm =
    std::variant<FirstOrderPow, FirstOrderSqPow, ConvexCombo, Reciprocal, Resolvent, SecondOrderConst, SecondOrderFull>;

/// Checks k >= 0, α in [0,1], γ >= 0 and finiteness. Theorem-level
/// requirements (γ > 0, β > 0) are enforced by the bounds module.
void validate(const PsiForm& form);
bool is_second_order(const PsiForm& form) noexcept;
double form_beta(const PsiForm& form) noexcept;
PsiForm with_beta(const PsiForm& form, double beta);
std::string describe(const PsiForm& form);

/// ψ(r, s, t). Throws DegenerateInput naming the vanishing subexpression.
cplx psi_eval(const PsiForm& form, cplx r, cplx s, cplx t);

/// Non-throwing ψ(r, s, t) for grid sweeps.
std::optional<cplx> try_psi(const PsiForm& form, cplx r, cplx s, cplx t) noexcept;

/// ψ(p(z), z p'(z), z^2 p''(z)).
cplx psi_apply(const PsiForm& form, const Jet& p_jet, cplx z);

/// 𝒢(z) = f'/f - z (f'/f)^2 + z f''/f. At z = 0 with f(0) = 0 the series
/// limit f''(0) / (2 f'(0)) is returned.
cplx g_combo(const Jet& f_jet, cplx z);

/// ℋ(z) = 1 + γ(z^2f''/f - (zf'/f)^2 + zf'/f)
///          + β(z^3f'''/f + 2z^2f''/f + 2(zf'/f)^3 - 2(zf'/f)^2 - 3z^3f'f''/f^2).
/// At z = 0 with f(0) = 0 the limit 1 is returned.
cplx h_combo(const Jet& f_jet, cplx z, double gamma, double beta);

/// Order-2 jet of p = z f'/f computed from an order-3 jet of f.
/// At z = 0 with f(0) = 0 the Taylor limit is used.
Jet starlike_p_jet(const Jet& f_jet, cplx z);

}  // namespace subord
