#pragma once

// JSON serialization of every result type, the versioned report schema and
// a small validator for it. Output has a stable key order and no
// timestamps, so identical inputs give byte-identical documents.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "subord/admissibility.hpp"
#include "subord/bounds.hpp"
#include "subord/subordination.hpp"

namespace subord {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "subord-report/1";

ojson beta0_report();
ojson bound_report(TheoremId id, const JanowskiParams& params, int k, std::optional<double> alpha);
ojson condition_report(TheoremId id, const JanowskiParams& params, double beta, double gamma, int k);
ojson condition_b0_report(TheoremId id, double A, double beta, double gamma);
ojson verification_report(const VerificationReport& rep);
ojson probe_report(TheoremId id, const ProbeResult& res, const VerificationReport& at_bound);
ojson probe_failure_report(TheoremId id, double printed_bound, const NonMonotoneProbeError& err);
ojson trial_report(const TrialReport& rep, std::optional<TheoremId> id);
ojson subordination_report(const std::string& kind, const std::string& function, const std::string& region,
                           const SubordinationResult& res, const std::vector<double>& radii, int n_theta);

/// JSON Schema (draft 2020-12 subset) covering every report kind.
ojson report_schema();

/// Checks doc against report_schema(), picking the definition named by
/// doc["kind"]. Returns a list of problems, empty when valid.
std::vector<std::string> validate_report(const ojson& doc);

/// Pretty-printed with a trailing newline.
std::string dump(const ojson& doc);

}  // namespace subord
