// subord: bound calculators, admissibility certification, subordination
// trials and region exports.
//
// Exit status: 0 on success or PASS, 1 on FAIL (verification entered the
// region, a trial refuted, a check did not hold), 2 on usage or numeric
// errors. Reports go to stdout or --out; diagnostics go to stderr.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "subord/admissibility.hpp"
#include "subord/battery.hpp"
#include "subord/bounds.hpp"
#include "subord/error.hpp"
#include "subord/report.hpp"
#include "subord/subordination.hpp"
#include "subord/svg.hpp"
#include "subord/theorems.hpp"

namespace fs = std::filesystem;
using namespace subord;

namespace {

struct Options {
  std::string theorem;
  std::optional<double> A, B, alpha, beta, gamma;
  std::optional<int> k;
  std::optional<int> n_theta;
  std::vector<double> m_list;
  std::optional<double> tol;
  std::string format = "json";
  std::string out;
  std::string family;
  std::string f;
  int n = 256;
  std::vector<double> radii;
  bool curve = false;
  std::string boundary;
  bool b0_limit = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes next to the target and renames, so readers never see a partial file.
void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  const fs::path target(o.out);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw UsageError("cannot write --out " + o.out);
    f << text;
    if (!f.flush()) throw UsageError("cannot write --out " + o.out);
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw UsageError("cannot move report into place at " + o.out + ": " + ec.message());
  }
}

template <class T>
T need(const std::optional<T>& v, const char* flag, std::string_view who) {
  if (!v) throw UsageError(std::string(flag) + " is required for " + std::string(who));
  return *v;
}

TheoremId need_theorem(const Options& o) {
  if (o.theorem.empty()) throw UsageError("--theorem is required");
  return parse_theorem(o.theorem);
}

JanowskiParams need_params(const Options& o, std::string_view who) {
  return JanowskiParams(need(o.A, "--A", who), need(o.B, "--B", who));
}

void require_format(const Options& o, std::initializer_list<const char*> allowed, std::string_view cmd) {
  for (const char* a : allowed) {
    if (o.format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw UsageError("--format " + o.format + " is not valid for " + std::string(cmd) + " (allowed: " + list + ")");
}

GridSpec grid_from(const Options& o) {
  GridSpec g;
  if (o.n_theta) g.n_theta = *o.n_theta;
  if (!o.m_list.empty()) g.m_values = o.m_list;
  if (o.tol) g.tol = *o.tol;
  g.validate();
  return g;
}

std::vector<double> radii_from(const Options& o) { return o.radii.empty() ? kDefaultRadii : o.radii; }

// Theorem parameters from flags; β defaults to the printed bound for the
// minimum-beta theorems.
TheoremParams theorem_params(TheoremId id, const Options& o, const JanowskiParams& p) {
  const auto name = theorem_name(id);
  TheoremParams tp;
  switch (id) {
    case TheoremId::S1a:
    case TheoremId::S1b:
    case TheoremId::S1c:
    case TheoremId::S2:
      tp.beta = need(o.beta, "--beta", name);
      tp.gamma = need(o.gamma, "--gamma", name);
      return tp;
    case TheoremId::T5:
      tp.k = need(o.k, "--k", name);
      tp.beta = need(o.beta, "--beta", name);
      tp.gamma = need(o.gamma, "--gamma", name);
      return tp;
    case TheoremId::T3:
      tp.alpha = need(o.alpha, "--alpha", name);
      [[fallthrough]];
    default:
      tp.k = need(o.k, "--k", name);
      tp.beta = o.beta ? *o.beta
                       : min_beta(id, p, tp.k, id == TheoremId::T3 ? std::optional<double>(tp.alpha) : std::nullopt)
                             .value;
      return tp;
  }
}

int cmd_beta0(const Options& o) {
  require_format(o, {"json"}, "beta0");
  emit(o, dump(beta0_report()));
  return 0;
}

int cmd_bound(const Options& o) {
  require_format(o, {"json"}, "bound");
  const TheoremId id = need_theorem(o);
  const auto p = need_params(o, theorem_name(id));
  if (theorem_info(id).kind != BoundKind::MinBeta) {
    throw UsageError(std::string(theorem_name(id)) + " states a condition; use the condition command");
  }
  const int k = need(o.k, "--k", theorem_name(id));
  std::optional<double> alpha;
  if (id == TheoremId::T3) alpha = need(o.alpha, "--alpha", "T3");
  emit(o, dump(bound_report(id, p, k, alpha)));
  return 0;
}

int cmd_condition(const Options& o) {
  require_format(o, {"json"}, "condition");
  const TheoremId id = need_theorem(o);
  const auto name = theorem_name(id);
  if (theorem_info(id).kind != BoundKind::Condition) {
    throw UsageError(std::string(name) + " has a minimum-beta bound; use the bound command");
  }
  const double beta = need(o.beta, "--beta", name);
  const double gamma = need(o.gamma, "--gamma", name);
  if (o.b0_limit) {
    const ojson j = condition_b0_report(id, need(o.A, "--A", name), beta, gamma);
    emit(o, dump(j));
    return j["holds"].get<bool>() ? 0 : 1;
  }
  const auto p = need_params(o, name);
  const int k = id == TheoremId::T5 ? need(o.k, "--k", name) : 0;
  const ojson j = condition_report(id, p, beta, gamma, k);
  emit(o, dump(j));
  return j["holds"].get<bool>() ? 0 : 1;
}

int cmd_verify(const Options& o) {
  require_format(o, {"json"}, "verify");
  const TheoremId id = need_theorem(o);
  const auto p = need_params(o, theorem_name(id));
  const TheoremParams tp = theorem_params(id, o, p);
  const GridSpec grid = grid_from(o);
  VerificationReport rep = verify(theorem_form(id, tp), theorem_target(id, p), p, grid);
  rep.theorem = id;
  ojson j = verification_report(rep);
  if (theorem_info(id).kind == BoundKind::Condition) {
    const auto c = condition_holds(id, p, tp.beta, tp.gamma, tp.k);
    j["condition"] = ojson{{"holds", c.holds}, {"slack", c.slack}, {"case", c.case_label}};
  } else {
    const auto mb = min_beta(id, p, tp.k, id == TheoremId::T3 ? std::optional<double>(tp.alpha) : std::nullopt);
    j["printed_bound"] = mb.value;
    j["case"] = mb.case_label;
  }
  emit(o, dump(j));
  std::cerr << theorem_name(id) << ": " << rep.status << " (min outside-margin " << rep.min_margin << ")\n";
  return rep.pass ? 0 : 1;
}

int cmd_probe(const Options& o) {
  require_format(o, {"json"}, "probe");
  const TheoremId id = need_theorem(o);
  const auto p = need_params(o, theorem_name(id));
  if (theorem_info(id).kind != BoundKind::MinBeta) {
    throw UsageError("probe needs a theorem with a printed minimum beta (T1a..T4)");
  }
  Options fixed = o;
  fixed.beta.reset();
  const TheoremParams tp = theorem_params(id, fixed, p);
  const GridSpec grid = grid_from(o);
  const PsiForm form = theorem_form(id, tp);
  const TargetRegion target = theorem_target(id, p);
  try {
    const ProbeResult res = probe_threshold(form, target, p, tp.beta, grid);
    VerificationReport at_bound = verify(form, target, p, grid);
    at_bound.theorem = id;
    emit(o, dump(probe_report(id, res, at_bound)));
    return 0;
  } catch (const NonMonotoneProbeError& e) {
    emit(o, dump(probe_failure_report(id, tp.beta, e)));
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_subcheck(const Options& o) {
  require_format(o, {"json"}, "subcheck");
  const TheoremId id = need_theorem(o);
  const auto p = need_params(o, theorem_name(id));
  const TheoremParams tp = theorem_params(id, o, p);
  const PsiForm form = theorem_form(id, tp);
  const TargetRegion hyp = theorem_target(id, p);
  const auto radii = radii_from(o);
  const int n_theta = o.n_theta.value_or(kDefaultSubordThetas);
  if (!o.family.empty() && o.family != "battery") {
    const TrialReport rep = implication_trial(form, FnSpec::parse(o.family), hyp, p, radii, n_theta);
    emit(o, dump(trial_report(rep, id)));
    return rep.refutes ? 1 : 0;
  }
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "trial-battery";
  j["theorem"] = theorem_name(id);
  j["family_battery_version"] = kFamilyBatteryVersion;
  ojson trials = ojson::array();
  int refuting = 0, supporting = 0, vacuous = 0;
  for (const auto& fam : family_battery(p)) {
    const TrialReport rep = implication_trial(form, fam, hyp, p, radii, n_theta);
    refuting += rep.refutes;
    supporting += !rep.vacuous && !rep.refutes;
    vacuous += rep.vacuous;
    trials.push_back(trial_report(rep, id));
  }
  j["refuting"] = refuting;
  j["supporting"] = supporting;
  j["vacuous"] = vacuous;
  j["trials"] = trials;
  emit(o, dump(j));
  return refuting ? 1 : 0;
}

int cmd_starlike(const Options& o) {
  require_format(o, {"json"}, "starlike");
  if (o.f.empty()) throw UsageError("--f is required for starlike");
  const auto p = need_params(o, "starlike");
  const FnSpec f = FnSpec::parse(o.f);
  const auto radii = radii_from(o);
  const int n_theta = o.n_theta.value_or(kDefaultSubordThetas);
  const auto res = starlike_check(f, p, radii, n_theta);
  emit(o, dump(subordination_report("starlike", f.to_string(), region_name(JanowskiRegion{p}), res, radii, n_theta)));
  return res.holds ? 0 : 1;
}

TargetRegion region_from(const Options& o) {
  if (o.boundary == "sigmoid") return SigmoidRegion{};
  if (o.boundary == "exp") return ExpRegion{};
  if (o.boundary == "janowski") return JanowskiRegion{need_params(o, "--boundary janowski")};
  if (o.boundary == "disk") return JanowskiDisk::from_params(need_params(o, "--boundary disk"));
  throw UsageError("--boundary must be one of sigmoid, exp, janowski, disk");
}

int cmd_regions(const Options& o) {
  if (o.curve == !o.boundary.empty()) throw UsageError("regions needs exactly one of --curve or --boundary");
  if (o.n < 1) throw UsageError("--n must be positive");
  if (o.curve) {
    require_format(o, {"csv", "json", "svg"}, "regions --curve");
    const auto p = need_params(o, "regions --curve");
    if (o.format == "csv") {
      std::ostringstream ss;
      const int skipped = write_curves_csv(ss, p, o.n);
      emit(o, ss.str());
      if (skipped) std::cerr << skipped << " grid point(s) at a pole omitted\n";
      return 0;
    }
    if (o.format == "svg") {
      emit(o, curves_svg(p, o.n));
      return 0;
    }
    ojson j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "curves";
    j["A"] = p.A();
    j["B"] = p.B();
    ojson rows = ojson::array();
    int skipped = 0;
    for (double th : curve_theta_grid(o.n)) {
      try {
        const auto c = boundary_curves(th, p);
        rows.push_back({{"theta", th}, {"k", c.k}, {"d", c.d}, {"g", c.g}});
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PoleAtBoundary) throw;
        ++skipped;
      }
    }
    j["rows"] = rows;
    j["skipped"] = skipped;
    emit(o, dump(j));
    return 0;
  }
  require_format(o, {"csv", "json", "svg"}, "regions --boundary");
  const TargetRegion region = region_from(o);
  if (o.format == "svg") {
    emit(o, region_svg(region, o.n));
    return 0;
  }
  std::vector<std::pair<double, cplx>> pts;
  for (double th : curve_theta_grid(o.n)) {
    try {
      pts.emplace_back(th, region_boundary_point(region, th));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleAtBoundary) throw;
    }
  }
  if (o.format == "csv") {
    std::string text = "theta,re,im\n";
    char buf[128];
    for (const auto& [th, w] : pts) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", th, w.real(), w.imag());
      text += buf;
    }
    emit(o, text);
    return 0;
  }
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "boundary";
  j["region"] = region_name(region);
  ojson rows = ojson::array();
  for (const auto& [th, w] : pts) rows.push_back({{"theta", th}, {"re", w.real()}, {"im", w.imag()}});
  j["points"] = rows;
  emit(o, dump(j));
  return 0;
}

int cmd_schema(const Options& o) {
  require_format(o, {"json"}, "schema");
  emit(o, dump(report_schema()));
  return 0;
}

void list_theorems() {
  for (const auto& t : all_theorems()) {
    std::cout << t.name << "\t" << (t.kind == BoundKind::MinBeta ? "min-beta " : "condition") << "\t" << t.summary
              << "\t\"" << t.anchor << "\"\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds, admissibility certification and subordination trials for Janowski-type targets", "subord"};
  app.require_subcommand(0, 1);
  Options o;
  bool list = false;
  app.add_flag("--list-theorems", list, "Print theorem ids with their quote anchors");

  auto add_params = [&](CLI::App* c) {
    c->add_option("--theorem", o.theorem, "Theorem id (T1a, T1b, T2a, T2b, T3, T3a0, T4, T5, S1a, S1b, S1c, S2)");
    c->add_option("--A", o.A, "Janowski parameter A");
    c->add_option("--B", o.B, "Janowski parameter B");
    c->add_option("--k", o.k, "Exponent k (non-negative integer)");
    c->add_option("--alpha", o.alpha, "alpha in [0,1] (T3)");
    c->add_option("--beta", o.beta, "beta");
    c->add_option("--gamma", o.gamma, "gamma");
  };
  auto add_output = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format");
    c->add_option("--out", o.out, "Write the report to this path (atomically) instead of stdout");
  };
  auto add_grid = [&](CLI::App* c) {
    c->add_option("--n-theta", o.n_theta, "Number of theta samples");
    c->add_option("--m-list", o.m_list, "m values (each >= 1, increasing)")->delimiter(',');
    c->add_option("--tol", o.tol, "Membership tolerance");
  };

  auto* beta0_cmd = app.add_subcommand("beta0", "Root of the quartic defining beta0");
  add_output(beta0_cmd);
  auto* bound_cmd = app.add_subcommand("bound", "Printed minimum beta of T1a..T4");
  add_params(bound_cmd);
  add_output(bound_cmd);
  auto* cond_cmd = app.add_subcommand("condition", "Evaluate the printed inequality of T5 or the S-family");
  add_params(cond_cmd);
  add_output(cond_cmd);
  cond_cmd->add_flag("--b0-limit", o.b0_limit, "S-family at B = 0 (extension, not a printed statement)");
  auto* verify_cmd = app.add_subcommand("verify", "Grid certification of admissibility");
  add_params(verify_cmd);
  add_grid(verify_cmd);
  add_output(verify_cmd);
  auto* probe_cmd = app.add_subcommand("probe", "Bisect the smallest passing beta");
  add_params(probe_cmd);
  add_grid(probe_cmd);
  add_output(probe_cmd);
  auto* sub_cmd = app.add_subcommand("subcheck", "Implication trial on one family or the whole battery");
  add_params(sub_cmd);
  add_output(sub_cmd);
  sub_cmd->add_option("--family", o.family, "Candidate p, e.g. janowski:A=0.5,B=-0.5 (default: the battery)");
  sub_cmd->add_option("--radii", o.radii, "Sampling radii in (0,1)")->delimiter(',');
  sub_cmd->add_option("--n-theta", o.n_theta, "Samples per circle");
  auto* star_cmd = app.add_subcommand("starlike", "Check z f'/f against the Janowski region");
  star_cmd->add_option("--f", o.f, "Normalized f, e.g. koebe or poly:0,1,0.5");
  star_cmd->add_option("--A", o.A, "Janowski parameter A");
  star_cmd->add_option("--B", o.B, "Janowski parameter B");
  star_cmd->add_option("--radii", o.radii, "Sampling radii in (0,1)")->delimiter(',');
  star_cmd->add_option("--n-theta", o.n_theta, "Samples per circle");
  add_output(star_cmd);
  auto* regions_cmd = app.add_subcommand("regions", "Export boundary curves k, d, g or a region boundary");
  regions_cmd->add_flag("--curve", o.curve, "Curves k, d, g on theta = 2 pi j/n");
  regions_cmd->add_option("--boundary", o.boundary, "Region boundary: sigmoid, exp, janowski or disk");
  regions_cmd->add_option("--A", o.A, "Janowski parameter A");
  regions_cmd->add_option("--B", o.B, "Janowski parameter B");
  regions_cmd->add_option("--n", o.n, "Number of samples");
  add_output(regions_cmd);
  auto* schema_cmd = app.add_subcommand("schema", "Print the JSON schema of all reports");
  add_output(schema_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (list) {
      list_theorems();
      return 0;
    }
    if (beta0_cmd->parsed()) return cmd_beta0(o);
    if (bound_cmd->parsed()) return cmd_bound(o);
    if (cond_cmd->parsed()) return cmd_condition(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (probe_cmd->parsed()) return cmd_probe(o);
    if (sub_cmd->parsed()) return cmd_subcheck(o);
    if (star_cmd->parsed()) return cmd_starlike(o);
    if (regions_cmd->parsed()) return cmd_regions(o);
    if (schema_cmd->parsed()) return cmd_schema(o);
    std::cerr << app.help();
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
