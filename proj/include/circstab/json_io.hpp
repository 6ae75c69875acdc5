#pragma once

#include <json.hpp>

#include "circstab/autgroup.hpp"
#include "circstab/compat.hpp"
#include "circstab/stability.hpp"
#include "circstab/survey.hpp"
#include "circstab/wilson.hpp"

namespace circstab {

nlohmann::json perm_json(const Permutation& p);
nlohmann::json permgroup_json(const PermGroup& g);
nlohmann::json verdict_json(const StabilityVerdict& v, bool include_witness = true);
nlohmann::json report_json(const ConditionReport& r);
nlohmann::json compat_json(const CompatibilityResult& r);
nlohmann::json thm3_json(const Thm3Certificate& c);
nlohmann::json graph_json(const Graph& g);
nlohmann::json record_json(const SurveyRecord& r);
nlohmann::json aggregate_json(const SurveyAggregate& a);

SurveyRecord record_from_json(const nlohmann::json& j);

}  // namespace circstab
