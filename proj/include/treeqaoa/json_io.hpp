#pragma once

// JSON documents for certificates, optimization results and sample reports.
// The shapes are pinned by the schema files under schemas/.

#include <nlohmann/json.hpp>

#include "treeqaoa/certificate.hpp"
#include "treeqaoa/schedule.hpp"
#include "treeqaoa/statevector.hpp"

namespace treeqaoa {

nlohmann::json to_json(const ParamSet &params);
nlohmann::json to_json(const OptimizationResult &result);
nlohmann::json to_json(const BoundCertificate &cert);
nlohmann::json to_json(const SampleReport &report);

/// Accepts a bare ParamSet object or any document with a "params" member.
/// Throws ParseError on missing or mistyped fields.
ParamSet params_from_json(const nlohmann::json &doc);

} // namespace treeqaoa
