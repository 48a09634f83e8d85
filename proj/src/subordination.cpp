#include "subord/subordination.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "subord/error.hpp"

namespace subord {

namespace {

struct Sweep {
  double min_margin = std::numeric_limits<double>::infinity();
  std::vector<double> by_radius;
  cplx worst_z{0.0, 0.0};
  long long samples = 0;
  long long skipped = 0;
};

// margin_at returns nullopt (or throws a pole/degenerate error) for points
// that cannot be evaluated; those are skipped and counted.
template <class MarginAt>
Sweep sweep(MarginAt&& margin_at, const std::vector<double>& radii, int n_theta) {
  validate_sampling(radii, n_theta);
  Sweep out;
  for (double r : radii) {
    double ring = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n_theta; ++j) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / n_theta);
      ++out.samples;
      std::optional<double> m;
      try {
        m = margin_at(z);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PoleAtBoundary && e.kind() != ErrorKind::DegenerateInput) throw;
      }
      if (!m) {
        ++out.skipped;
        continue;
      }
      ring = std::min(ring, *m);
      if (*m < out.min_margin) {
        out.min_margin = *m;
        out.worst_z = z;
      }
    }
    out.by_radius.push_back(ring);
  }
  if (out.skipped * 100 > out.samples) {
    fail(ErrorKind::GridDegenerate, std::to_string(out.skipped) + " of " + std::to_string(out.samples) +
                                        " samples could not be evaluated (limit is 1%)");
  }
  return out;
}

SubordinationResult to_result(const Sweep& s, double tol) {
  return SubordinationResult{s.min_margin > -tol, s.min_margin, s.by_radius, s.worst_z, s.samples, s.skipped};
}

}  // namespace

void validate_sampling(const std::vector<double>& radii, int n_theta) {
  if (n_theta < 1) fail(ErrorKind::InvalidArgument, "n_theta must be at least 1");
  if (radii.empty()) fail(ErrorKind::InvalidArgument, "radii must not be empty");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0)) fail(ErrorKind::InvalidArgument, "radii must lie in (0, 1)");
    if (i > 0 && !(radii[i] > radii[i - 1])) fail(ErrorKind::InvalidArgument, "radii must be strictly increasing");
  }
}

SubordinationResult empirical_subordination(const FnSpec& p, const TargetRegion& region,
                                            const std::vector<double>& radii, int n_theta, double tol) {
  require_p_normalized(p);
  auto at = [&](cplx z) { return try_region_margin(eval_jet(p, z, 2)[0], region); };
  return to_result(sweep(at, radii, n_theta), tol);
}

SubordinationResult starlike_check(const FnSpec& f, const JanowskiParams& params, const std::vector<double>& radii,
                                   int n_theta, double tol) {
  require_f_normalized(f);
  const TargetRegion region = JanowskiRegion{params};
  auto at = [&](cplx z) { return try_region_margin(starlike_p_jet(eval_jet(f, z, 3), z)[0], region); };
  return to_result(sweep(at, radii, n_theta), tol);
}

TrialReport implication_trial(const PsiForm& form, const FnSpec& p, const TargetRegion& hypothesis,
                              const JanowskiParams& conclusion, const std::vector<double>& radii, int n_theta,
                              double tol) {
  validate(form);
  require_p_normalized(p);
  const TargetRegion target = JanowskiRegion{conclusion};
  auto hyp_at = [&](cplx z) -> std::optional<double> {
    const Jet j = eval_jet(p, z, 2);
    const auto psi = try_psi(form, j[0], z * j[1], z * z * j[2]);
    if (!psi) return std::nullopt;
    return try_region_margin(*psi, hypothesis);
  };
  auto concl_at = [&](cplx z) { return try_region_margin(eval_jet(p, z, 2)[0], target); };
  const Sweep h = sweep(hyp_at, radii, n_theta);
  const Sweep c = sweep(concl_at, radii, n_theta);

  TrialReport rep;
  rep.family = p.to_string();
  rep.form = describe(form);
  rep.hypothesis_region = region_name(hypothesis);
  rep.A = conclusion.A();
  rep.B = conclusion.B();
  rep.hypothesis_satisfied = h.min_margin > -tol;
  rep.conclusion_satisfied = c.min_margin > -tol;
  rep.vacuous = !rep.hypothesis_satisfied;
  rep.refutes = rep.hypothesis_satisfied && !rep.conclusion_satisfied;
  rep.worst_hypothesis_margin = h.min_margin;
  rep.worst_conclusion_margin = c.min_margin;
  rep.radii = radii;
  rep.n_theta = n_theta;
  rep.samples = h.samples + c.samples;
  rep.skipped = h.skipped + c.skipped;
  return rep;
}

std::vector<FnSpec> family_battery(const JanowskiParams& params) {
  const double A = params.A(), B = params.B();
  const FnSpec q = FnSpec::janowski(A, B);
  std::vector<FnSpec> out{q};
  for (double w : {0.9, 0.5, 0.2, 0.05, 0.01, 1e-3, 1e-4}) out.push_back(FnSpec::compose(q, cplx(w, 0.0), 1));
  out.push_back(FnSpec::compose(q, cplx(0.3, 0.3), 1));
  out.push_back(FnSpec::compose(q, cplx(0.5, 0.0), 2));
  out.push_back(FnSpec::exp());
  out.push_back(FnSpec::sigmoid());
  out.push_back(FnSpec::compose(FnSpec::exp(), cplx(0.05, 0.0), 1));
  out.push_back(FnSpec::compose(FnSpec::sigmoid(), cplx(0.05, 0.0), 2));
  out.push_back(FnSpec::polynomial({1.0, 0.5}));
  out.push_back(FnSpec::polynomial({1.0, 0.02}));
  out.push_back(FnSpec::polynomial({1.0, 0.3, 0.1}));
  out.push_back(FnSpec::polynomial({1.0, 1e-4}));
  out.push_back(FnSpec::moebius(0.5, 1.0, -0.3, 1.0));
  out.push_back(FnSpec::moebius(1.0, 1.0, -1.0, 1.0));
  if (A + 0.1 <= 1.0) out.push_back(FnSpec::janowski(A + 0.1, B));
  return out;
}

std::vector<FnSpec> starlike_family_battery() {
  return {
      FnSpec::polynomial({0.0, 1.0}),
      FnSpec::polynomial({0.0, 1.0, 1.0}),
      FnSpec::polynomial({0.0, 1.0, 0.5}),
      FnSpec::polynomial({0.0, 1.0, 0.3, -0.1}),
      FnSpec::moebius(1.0, 0.0, -1.0, 1.0),
      FnSpec::moebius(1.0, 0.0, 0.5, 1.0),
      FnSpec::koebe(),
  };
}

}  // namespace subord
