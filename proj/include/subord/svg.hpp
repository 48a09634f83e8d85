#pragma once

// Minimal static SVG plots: a region boundary in the w-plane and the
// curves k, d, g against θ.

#include <string>

#include "subord/regions.hpp"

namespace subord {

/// Boundary of the region sampled at n points. Points beyond |w| = 10
/// (near the pole of a half-plane boundary) are dropped.
std::string region_svg(const TargetRegion& region, int n);

std::string curves_svg(const JanowskiParams& params, int n);

}  // namespace subord
