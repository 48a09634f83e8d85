#pragma once

// Maps a theorem id to its ψ-shape and target region.

#include <optional>

#include "subord/bounds.hpp"
#include "subord/jets.hpp"
#include "subord/regions.hpp"

namespace subord {

/// Parameters a theorem's ψ-shape may use. Unused fields are ignored.
struct TheoremParams {
  double beta = 0.0;
  double gamma = 0.0;
  double alpha = 0.0;
  int k = 0;
};

PsiForm theorem_form(TheoremId id, const TheoremParams& tp);
TargetRegion theorem_target(TheoremId id, const JanowskiParams& params);
bool theorem_is_second_order(TheoremId id) noexcept;

}  // namespace subord
