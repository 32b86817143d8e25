#include "json_io.hpp"

namespace seaweed::cli {

json composition_json(const Composition& c) {
  return json(std::vector<int>(c.begin(), c.end()));
}

json spec_json(const SeaweedSpec& spec) {
  return json{{"text", render_spec(spec)},
              {"algebra", std::string(1, to_char(spec.algebra))},
              {"n", spec.n},
              {"a", composition_json(spec.a)},
              {"b", composition_json(spec.b)}};
}

json component_json(const ComponentReport& c) {
  return json{{"vertices", c.vertices},
              {"is_cycle", c.is_cycle},
              {"tail_count", c.tail_count},
              {"contribution", c.contribution}};
}

json move_step_json(const MoveStep& step) {
  auto pair = [](const CompositionPair& p) {
    return json{{"top", composition_json(p.top)}, {"bottom", composition_json(p.bottom)}};
  };
  return json{{"move", std::string(1, to_char(step.move))},
              {"before", pair(step.before)},
              {"after", pair(step.after)},
              {"circles", step.circles},
              {"points", step.points}};
}

json reduction_step_json(const ReductionStep& step) {
  return json{{"rule", to_string(step.rule)},
              {"before", spec_json(step.before)},
              {"after", spec_json(step.after)},
              {"increment", step.increment}};
}

json oracle_json(const SeaweedSpec& spec, const OracleResult& r, bool agrees) {
  return json{{"version", schema_version},
              {"spec", render_spec(spec)},
              {"dim", r.dim},
              {"trials", r.trials},
              {"seed", r.seed},
              {"ranks", r.ranks},
              {"index", r.index},
              {"agrees_with_meander", agrees}};
}

json sweep_json(const SweepReport& report) {
  json breakdown = json::array();
  for (const auto& [label, count] : report.breakdown) {
    breakdown.push_back(json{{"label", label}, {"instances", count}});
  }
  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    json values = json::object();
    for (const auto& [method, value] : m.values) values[method] = value;
    mismatches.push_back(
        json{{"spec", render_spec(m.spec)}, {"family", m.family}, {"values", values}});
  }
  return json{{"domain", report.domain},
              {"instances", report.instances},
              {"breakdown", breakdown},
              {"mismatches", mismatches},
              {"elapsed_ms", report.elapsed_ms},
              {"seed", report.seed},
              {"passed", report.passed()}};
}

}  // namespace seaweed::cli
