#include "subord/battery.hpp"

#include <cstdio>

namespace subord {

namespace {

std::string label_of(const JanowskiParams& p, const char* extra) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "A=%.6g B=%.6g %s", p.A(), p.B(), extra);
  return buf;
}

}  // namespace

std::vector<JanowskiParams> parameter_battery() {
  std::vector<JanowskiParams> out;
  for (double B : {-0.8, -0.4, -0.1, 0.2, 0.5}) {
    for (double f : {0.15, 0.35, 0.55, 0.75, 0.95}) out.push_back(JanowskiParams::strict(B + (1.0 - B) * f, B));
  }
  return out;
}

TheoremBattery theorem_battery(TheoremId id) {
  TheoremBattery out{id, {}, 0};
  char extra[96];
  for (const auto& p : parameter_battery()) {
    switch (id) {
      case TheoremId::T1a:
      case TheoremId::T1b:
      case TheoremId::T2a:
      case TheoremId::T2b:
      case TheoremId::T3a0:
      case TheoremId::T4:
        for (int k : kBatteryK) {
          TheoremParams tp;
          tp.k = k;
          tp.beta = min_beta(id, p, k).value;
          std::snprintf(extra, sizeof extra, "k=%d", k);
          out.cases.push_back({id, p, tp, label_of(p, extra)});
        }
        break;
      case TheoremId::T3:
        for (int k : kBatteryK) {
          for (double al : kBatteryAlpha) {
            TheoremParams tp;
            tp.k = k;
            tp.alpha = al;
            tp.beta = min_beta(id, p, k, al).value;
            std::snprintf(extra, sizeof extra, "k=%d alpha=%g", k, al);
            out.cases.push_back({id, p, tp, label_of(p, extra)});
          }
        }
        break;
      case TheoremId::T5:
        for (int k : kBatteryK) {
          for (double ratio : kBatteryT5Ratio) {
            TheoremParams tp;
            tp.k = k;
            if (k == 0) {
              tp.beta = ratio;
              tp.gamma = 1.0;
              if (!condition_holds(id, p, tp.beta, tp.gamma, 0).holds) {
                ++out.inapplicable;
                continue;
              }
            } else {
              const auto g = t5_gamma_at_equality(p, k, ratio);
              if (!g) {
                ++out.inapplicable;
                continue;
              }
              tp.gamma = *g;
              tp.beta = ratio * *g;
            }
            std::snprintf(extra, sizeof extra, "k=%d beta/gamma=%g", k, ratio);
            out.cases.push_back({id, p, tp, label_of(p, extra)});
          }
        }
        break;
      case TheoremId::S1a:
      case TheoremId::S1b:
      case TheoremId::S1c:
      case TheoremId::S2:
        for (double beta : kBatterySBeta) {
          TheoremParams tp;
          tp.beta = beta;
          tp.gamma = s_family_gamma_at_equality(id, p, beta);
          std::snprintf(extra, sizeof extra, "beta=%g", beta);
          out.cases.push_back({id, p, tp, label_of(p, extra)});
        }
        break;
    }
  }
  return out;
}

}  // namespace subord
