#pragma once

// The fixed parameter battery used by the certification runs.

#include <string>
#include <vector>

#include "subord/bounds.hpp"
#include "subord/theorems.hpp"

namespace subord {

/// 25 strict pairs: B in {-0.8, -0.4, -0.1, 0.2, 0.5} and
/// A = B + (1-B)·f for f in {0.15, 0.35, 0.55, 0.75, 0.95}.
std::vector<JanowskiParams> parameter_battery();

inline const std::vector<int> kBatteryK{0, 1, 2, 3, 5};
inline const std::vector<double> kBatteryAlpha{0.0, 0.5, 1.0};
/// β values for the S-family; γ is then placed on the condition boundary.
inline const std::vector<double> kBatterySBeta{0.5, 1.0, 2.0};
/// β/γ ratios for T5; γ is then placed on the condition boundary.
inline const std::vector<double> kBatteryT5Ratio{0.5, 1.0, 2.0};

struct BatteryCase {
  TheoremId id;
  JanowskiParams params;
  TheoremParams tp;
  std::string label;
};

struct TheoremBattery {
  TheoremId id;
  std::vector<BatteryCase> cases;
  int inapplicable = 0; // combinations where no parameter satisfies the printed statement
};

/// All cases of one theorem at its printed bound or condition boundary.
TheoremBattery theorem_battery(TheoremId id);

}  // namespace subord
