#include "subord/theorems.hpp"

#include "subord/error.hpp"

namespace subord {

PsiForm theorem_form(TheoremId id, const TheoremParams& tp) {
  PsiForm form = [&]() -> PsiForm {
    switch (id) {
      case TheoremId::T1a:
      case TheoremId::T1b: return FirstOrderPow{tp.beta, tp.k};
      case TheoremId::T2a:
      case TheoremId::T2b: return FirstOrderSqPow{tp.beta, tp.k};
      case TheoremId::T3: return ConvexCombo{tp.alpha, tp.beta, tp.k};
      case TheoremId::T3a0: return ConvexCombo{0.0, tp.beta, tp.k};
      case TheoremId::T4: return Reciprocal{tp.beta, tp.k};
      case TheoremId::T5: return Resolvent{tp.beta, tp.gamma, tp.k};
      case TheoremId::S1a:
      case TheoremId::S1b:
      case TheoremId::S1c: return SecondOrderConst{tp.gamma, tp.beta};
      case TheoremId::S2: return SecondOrderFull{tp.gamma, tp.beta};
    }
    fail(ErrorKind::InvalidArgument, "unknown theorem id");
  }();
  validate(form);
  return form;
}

TargetRegion theorem_target(TheoremId id, const JanowskiParams& params) {
  switch (id) {
    case TheoremId::T1b:
    case TheoremId::T2b:
    case TheoremId::S1b: return ExpRegion{};
    case TheoremId::S1c: return JanowskiDisk::from_params(params);
    default: return SigmoidRegion{};
  }
}

bool theorem_is_second_order(TheoremId id) noexcept {
  return id == TheoremId::S1a || id == TheoremId::S1b || id == TheoremId::S1c || id == TheoremId::S2;
}

}  // namespace subord
