#include "subord/report.hpp"

#include <cmath>

namespace subord {

namespace {

ojson header(const char* kind) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

void add_beta0(ojson& j) {
  j["beta0"] = beta0();
  j["beta0_source"] = "computed-root";
  j["beta0_printed_variants"] = {kPrintedBeta0Variants[0], kPrintedBeta0Variants[1]};
}

ojson cjson(cplx z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; }

ojson grid_json(const GridSpec& g) {
  return ojson{{"n_theta", g.n_theta}, {"theta_grid", "half-offset, open interval (0, 2pi)"},
               {"m_values", g.m_values}, {"t_rays", g.t_rays}, {"t_depth", g.t_depth}, {"tol", g.tol}};
}

// ---- schema helpers ----

ojson t(const char* type) { return ojson{{"type", type}}; }
ojson num() { return t("number"); }
ojson integer() { return t("integer"); }
ojson str() { return t("string"); }
ojson boolean() { return t("boolean"); }
ojson arr(ojson items) { return ojson{{"type", "array"}, {"items", std::move(items)}}; }
ojson complex_schema() {
  return ojson{{"type", "object"}, {"required", {"re", "im"}}, {"properties", {{"re", num()}, {"im", num()}}}};
}

ojson object_schema(const char* kind, ojson props, std::vector<std::string> required) {
  ojson p;
  p["schema_version"] = ojson{{"const", kSchemaVersion}};
  p["kind"] = ojson{{"const", kind}};
  p["beta0"] = num();
  p["beta0_source"] = ojson{{"const", "computed-root"}};
  p["beta0_printed_variants"] = arr(num());
  for (auto& [k, v] : props.items()) p[k] = v;
  std::vector<std::string> req{"schema_version", "kind", "beta0", "beta0_source"};
  req.insert(req.end(), required.begin(), required.end());
  return ojson{{"type", "object"}, {"required", req}, {"properties", p}};
}

bool type_matches(const ojson& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "boolean") return v.is_boolean();
  if (type == "integer") return v.is_number_integer();
  if (type == "number") return v.is_number();
  if (type == "null") return v.is_null();
  return false;
}

void check(const ojson& v, const ojson& schema, const ojson& root, const std::string& path,
           std::vector<std::string>& errors) {
  if (schema.contains("$ref")) {
    const std::string ref = schema["$ref"];
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0 || !root["$defs"].contains(ref.substr(prefix.size()))) {
      errors.push_back(path + ": unresolvable $ref " + ref);
      return;
    }
    check(v, root["$defs"][ref.substr(prefix.size())], root, path, errors);
    return;
  }
  if (schema.contains("type")) {
    const auto& ty = schema["type"];
    bool ok = false;
    if (ty.is_array()) {
      for (const auto& one : ty) ok = ok || type_matches(v, one.get<std::string>());
    } else {
      ok = type_matches(v, ty.get<std::string>());
    }
    if (!ok) {
      errors.push_back(path + ": expected type " + ty.dump());
      return;
    }
  }
  if (schema.contains("const") && v != schema["const"]) errors.push_back(path + ": expected " + schema["const"].dump());
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == v;
    if (!found) errors.push_back(path + ": value not in enum " + schema["enum"].dump());
  }
  if (schema.contains("minimum") && v.is_number() && v.get<double>() < schema["minimum"].get<double>()) {
    errors.push_back(path + ": below minimum");
  }
  if (v.is_object()) {
    if (schema.contains("required")) {
      for (const auto& r : schema["required"]) {
        if (!v.contains(r.get<std::string>())) errors.push_back(path + ": missing required field " + r.dump());
      }
    }
    if (schema.contains("properties")) {
      for (auto& [k, sub] : schema["properties"].items()) {
        if (v.contains(k)) check(v[k], sub, root, path + "/" + k, errors);
      }
    }
  }
  if (v.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < v.size(); ++i) check(v[i], schema["items"], root, path + "/" + std::to_string(i), errors);
  }
}

}  // namespace

ojson beta0_report() {
  ojson j = header("beta0");
  add_beta0(j);
  j["quartic_residual"] = std::abs(quartic(beta0()));
  j["bracket"] = {0.0, 1.0};
  j["bisection_tolerance"] = "adjacent doubles (< 1e-12)";
  j["lemma_exp_threshold"] = lemma_exp_threshold();
  return j;
}

ojson bound_report(TheoremId id, const JanowskiParams& params, int k, std::optional<double> alpha) {
  const MinBeta mb = min_beta(id, params, k, alpha);
  ojson j = header("bound");
  j["theorem"] = theorem_name(id);
  j["A"] = params.A();
  j["B"] = params.B();
  j["k"] = k;
  if (id == TheoremId::T3 && alpha) j["alpha"] = *alpha;
  j["min_beta"] = mb.value;
  j["case"] = mb.case_label;
  add_beta0(j);
  if (id == TheoremId::T3 && alpha) {
    j["grouping"] = "three additive terms: beta0 X + (1-alpha) Y + alpha Z";
    j["alternative_grouping"] = ojson{{"reading", "beta0 X + (1-alpha)(Y + alpha Z)"},
                                      {"min_beta", t3_alternative_grouping(params, k, *alpha)}};
  }
  return j;
}

ojson condition_report(TheoremId id, const JanowskiParams& params, double beta, double gamma, int k) {
  const ConditionResult c = condition_holds(id, params, beta, gamma, k);
  ojson j = header("condition");
  j["theorem"] = theorem_name(id);
  j["A"] = params.A();
  j["B"] = params.B();
  if (id == TheoremId::T5) j["k"] = k;
  j["beta"] = beta;
  j["gamma"] = gamma;
  j["holds"] = c.holds;
  j["slack"] = c.slack;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["case"] = c.case_label;
  add_beta0(j);
  return j;
}

ojson condition_b0_report(TheoremId id, double A, double beta, double gamma) {
  const ConditionResult c = condition_b0_limit(id, A, beta, gamma);
  ojson j = header("condition");
  j["theorem"] = theorem_name(id);
  j["A"] = A;
  j["B"] = 0.0;
  j["beta"] = beta;
  j["gamma"] = gamma;
  j["holds"] = c.holds;
  j["slack"] = c.slack;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  j["case"] = c.case_label;
  j["extension"] = true;
  add_beta0(j);
  return j;
}

ojson verification_report(const VerificationReport& rep) {
  ojson j = header("verification");
  if (rep.theorem) j["theorem"] = theorem_name(*rep.theorem);
  j["form"] = rep.form;
  j["target"] = rep.target;
  j["A"] = rep.A;
  j["B"] = rep.B;
  j["order"] = rep.second_order ? 2 : 1;
  j["grid"] = grid_json(rep.grid);
  j["status"] = rep.status;
  j["pass"] = rep.pass;
  j["min_margin"] = rep.min_margin;
  j["min_margin_by_m"] = rep.min_margin_by_m;
  ojson w;
  w["theta"] = rep.worst.theta;
  w["m"] = rep.worst.m;
  if (rep.second_order) {
    w["c_offset"] = rep.worst.c_offset;
    w["y"] = rep.worst.y;
  }
  w["psi"] = cjson(rep.worst.psi);
  w["margin"] = rep.worst.margin;
  j["worst_point"] = w;
  j["evaluations"] = rep.evaluations;
  j["skipped"] = rep.skipped;
  j["monotonicity_checked"] = rep.monotonicity_checked;
  j["monotone_in_m"] = rep.monotone_in_m;
  j["escape_in_m"] = rep.escape_in_m;
  if (rep.escape_in_t) j["escape_in_t"] = *rep.escape_in_t;
  j["warnings"] = rep.warnings;
  j["rigor"] = "grid evaluation with margins, not interval-rigorous";
  add_beta0(j);
  return j;
}

ojson probe_report(TheoremId id, const ProbeResult& res, const VerificationReport& at_bound) {
  ojson j = header("probe");
  j["theorem"] = theorem_name(id);
  j["form"] = at_bound.form;
  j["target"] = at_bound.target;
  j["A"] = at_bound.A;
  j["B"] = at_bound.B;
  j["grid"] = grid_json(at_bound.grid);
  j["printed_bound"] = res.printed_bound;
  j["threshold"] = res.threshold;
  j["gap"] = res.gap;
  j["bisection_tolerance"] = 1e-6;
  j["bisection_steps"] = res.bisection_steps;
  ojson scan = ojson::array();
  for (const auto& s : res.scan) scan.push_back({{"beta", s.beta}, {"pass", s.pass}, {"min_margin", s.min_margin}});
  j["scan"] = scan;
  j["status_at_printed_bound"] = at_bound.status;
  add_beta0(j);
  return j;
}

ojson probe_failure_report(TheoremId id, double printed_bound, const NonMonotoneProbeError& err) {
  ojson j = header("probe");
  j["theorem"] = theorem_name(id);
  j["printed_bound"] = printed_bound;
  j["error"] = err.what();
  ojson scan = ojson::array();
  for (const auto& s : err.scan()) scan.push_back({{"beta", s.beta}, {"pass", s.pass}, {"min_margin", s.min_margin}});
  j["scan"] = scan;
  add_beta0(j);
  return j;
}

ojson trial_report(const TrialReport& rep, std::optional<TheoremId> id) {
  ojson j = header("trial");
  if (id) j["theorem"] = theorem_name(*id);
  j["family"] = rep.family;
  j["family_battery_version"] = kFamilyBatteryVersion;
  j["form"] = rep.form;
  j["hypothesis_region"] = rep.hypothesis_region;
  j["A"] = rep.A;
  j["B"] = rep.B;
  j["hypothesis_satisfied"] = rep.hypothesis_satisfied;
  j["conclusion_satisfied"] = rep.conclusion_satisfied;
  j["vacuous"] = rep.vacuous;
  j["refutes"] = rep.refutes;
  j["worst_hypothesis_margin"] = rep.worst_hypothesis_margin;
  j["worst_conclusion_margin"] = rep.worst_conclusion_margin;
  j["radii"] = rep.radii;
  j["n_theta"] = rep.n_theta;
  j["samples"] = rep.samples;
  j["skipped"] = rep.skipped;
  add_beta0(j);
  return j;
}

ojson subordination_report(const std::string& kind, const std::string& function, const std::string& region,
                           const SubordinationResult& res, const std::vector<double>& radii, int n_theta) {
  ojson j = header("subordination");
  j["check"] = kind;
  j["function"] = function;
  j["region"] = region;
  j["holds"] = res.holds;
  j["min_margin"] = res.min_margin;
  j["min_margin_by_radius"] = res.min_margin_by_radius;
  j["worst_z"] = cjson(res.worst_z);
  j["radii"] = radii;
  j["n_theta"] = n_theta;
  j["samples"] = res.samples;
  j["skipped"] = res.skipped;
  add_beta0(j);
  return j;
}

ojson report_schema() {
  ojson defs;
  defs["beta0"] = object_schema("beta0", {{"quartic_residual", num()}, {"lemma_exp_threshold", num()}},
                                {"quartic_residual"});
  defs["bound"] = object_schema(
      "bound",
      {{"theorem", str()}, {"A", num()}, {"B", num()}, {"k", integer()}, {"alpha", num()},
       {"min_beta", ojson{{"type", "number"}, {"minimum", 0}}}, {"case", str()}},
      {"theorem", "A", "B", "k", "min_beta", "case"});
  defs["condition"] = object_schema("condition",
                                    {{"theorem", str()}, {"A", num()}, {"B", num()}, {"beta", num()},
                                     {"gamma", num()}, {"holds", boolean()}, {"slack", num()}, {"case", str()}},
                                    {"theorem", "A", "B", "holds", "slack", "case"});
  ojson worst = {{"type", "object"},
                 {"required", {"theta", "m", "psi", "margin"}},
                 {"properties",
                  {{"theta", num()}, {"m", num()}, {"c_offset", num()}, {"y", num()}, {"psi", complex_schema()},
                   {"margin", num()}}}};
  defs["verification"] = object_schema(
      "verification",
      {{"theorem", str()},
       {"form", str()},
       {"target", str()},
       {"A", num()},
       {"B", num()},
       {"order", ojson{{"enum", {1, 2}}}},
       {"grid", ojson{{"type", "object"}, {"required", {"n_theta", "m_values", "tol"}}}},
       {"status", ojson{{"enum", {"PASS", "PASS-WITH-WARNING", "FAIL"}}}},
       {"pass", boolean()},
       {"min_margin", num()},
       {"min_margin_by_m", arr(num())},
       {"worst_point", worst},
       {"evaluations", integer()},
       {"skipped", integer()},
       {"monotonicity_checked", boolean()},
       {"monotone_in_m", boolean()},
       {"escape_in_m", boolean()},
       {"escape_in_t", boolean()},
       {"warnings", arr(str())}},
      {"form", "target", "A", "B", "grid", "status", "pass", "min_margin", "worst_point", "evaluations", "skipped",
       "monotonicity_checked"});
  ojson step = {{"type", "object"},
                {"required", {"beta", "pass"}},
                {"properties", {{"beta", num()}, {"pass", boolean()}, {"min_margin", num()}}}};
  defs["probe"] = object_schema("probe",
                                {{"theorem", str()}, {"printed_bound", num()}, {"threshold", num()}, {"gap", num()},
                                 {"scan", arr(step)}, {"error", str()}},
                                {"theorem", "printed_bound", "scan"});
  defs["trial"] = object_schema("trial",
                                {{"family", str()},
                                 {"form", str()},
                                 {"hypothesis_satisfied", boolean()},
                                 {"conclusion_satisfied", boolean()},
                                 {"vacuous", boolean()},
                                 {"refutes", boolean()},
                                 {"worst_hypothesis_margin", num()},
                                 {"worst_conclusion_margin", num()},
                                 {"radii", arr(num())},
                                 {"n_theta", integer()}},
                                {"family", "form", "hypothesis_satisfied", "conclusion_satisfied", "vacuous",
                                 "refutes", "worst_hypothesis_margin", "worst_conclusion_margin", "radii"});
  defs["subordination"] = object_schema("subordination",
                                        {{"check", ojson{{"enum", {"empirical", "starlike"}}}},
                                         {"function", str()},
                                         {"region", str()},
                                         {"holds", boolean()},
                                         {"min_margin", num()},
                                         {"min_margin_by_radius", arr(num())},
                                         {"worst_z", complex_schema()}},
                                        {"check", "function", "region", "holds", "min_margin"});
  ojson kinds = ojson::array();
  for (auto& [k, v] : defs.items()) kinds.push_back(k);
  ojson s;
  s["$schema"] = "https://json-schema.org/draft/2020-12/schema";
  s["$id"] = kSchemaVersion;
  s["title"] = "subord reports";
  s["schema_version"] = kSchemaVersion;
  s["description"] = "Every report carries kind; the definition of that name applies. beta0_source records that "
                     "beta0 is the computed quartic root rather than either printed value.";
  s["type"] = "object";
  s["required"] = {"schema_version", "kind"};
  s["properties"] = {{"kind", {{"enum", kinds}}}};
  s["$defs"] = defs;
  return s;
}

std::vector<std::string> validate_report(const ojson& doc) {
  const ojson schema = report_schema();
  std::vector<std::string> errors;
  check(doc, schema, schema, "", errors);
  if (!errors.empty()) return errors;
  const std::string kind = doc["kind"];
  check(doc, schema["$defs"][kind], schema, "", errors);
  return errors;
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

}  // namespace subord
