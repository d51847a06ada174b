#pragma once

// vendored single-header nlohmann/json
#include <json.hpp>

#include "pierce/report.hpp"
#include "pierce/skew.hpp"

namespace pierce {

/// A parsed spec document; kind is one of algebra | module | idempotent |
/// group-action | context-job. Numeric scalars travel as strings ("3/4").
struct SpecDocument {
    std::string kind;
    nlohmann::ordered_json raw;
};

SpecDocument parse_spec(const std::string& text);
SpecDocument load_spec_file(const std::string& path);

AlgP algebra_from_doc(const SpecDocument& doc);
RightModule module_from_doc(const SpecDocument& doc, const AlgP& A);
Idempotent idempotent_from_doc(const SpecDocument& doc, const AlgP& A);
GroupAction action_from_doc(const SpecDocument& doc, const AlgP& S);

struct JobParams {
    long cutoff = 5;
    long bar_cap = 200000;
    long resolution_cap = 20000;
};
JobParams job_from_doc(const SpecDocument& doc);

/// Canonical serialization; parse -> emit -> parse is the identity.
std::string emit_algebra(const Algebra& a, const std::string& name = "");
std::string emit_module(const RightModule& m, const std::string& name = "");
std::string emit_idempotent(const Vec& v, const std::string& name = "");
std::string emit_action(const GroupAction& act, const std::string& name = "");
std::string emit_job(const JobParams& p);

std::string report_to_json(const Report& r);

}  // namespace pierce
