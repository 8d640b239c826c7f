#pragma once

#include <string>

#include <json.hpp>

#include "numsg/core.hpp"
#include "numsg/harness.hpp"
#include "numsg/nu.hpp"
#include "numsg/predict.hpp"

namespace numsg {

nlohmann::json semigroup_to_json(const Semigroup& s);

/// Accepts {"gaps":[...]} , {"gaps":[...],"c":int} or {"gens":[...]}.
Semigroup semigroup_from_json(const nlohmann::json& j);

nlohmann::json invariants_to_json(const InvariantRecord& rec);
nlohmann::json nu_table_to_json(const NuTable& table);
nlohmann::json prediction_to_json(const Prediction& pred);
nlohmann::json rule_hits_to_json(const std::vector<RuleHit>& hits);
nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace numsg
