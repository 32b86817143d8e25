#pragma once

#include <nlohmann/json.hpp>

#include "seaweed/enumeration.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/oracle.hpp"
#include "seaweed/panyushev.hpp"
#include "seaweed/signature.hpp"

namespace seaweed::cli {

using nlohmann::json;

inline constexpr int schema_version = 1;

json spec_json(const SeaweedSpec& spec);
json composition_json(const Composition& c);
json component_json(const ComponentReport& c);
json move_step_json(const MoveStep& step);
json reduction_step_json(const ReductionStep& step);
json oracle_json(const SeaweedSpec& spec, const OracleResult& r, bool agrees);
json sweep_json(const SweepReport& report);

}  // namespace seaweed::cli
