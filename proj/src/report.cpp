#include "szf/report.hpp"

namespace szf {

nlohmann::json to_json(const ThrottleResult& result) {
  nlohmann::json per_k = nlohmann::json::array();
  for (std::size_t k = 0; k < result.per_k.size(); ++k) {
    nlohmann::json row{{"k", k}};
    row["th"] = result.per_k[k] ? nlohmann::json(*result.per_k[k]) : nlohmann::json(nullptr);
    per_k.push_back(std::move(row));
  }
  return {{"th", result.th},           {"k", result.k},
          {"pt", result.pt},           {"witness", result.witness},
          {"per_k", std::move(per_k)}, {"z_minus", result.z_minus},
          {"pt_minimum", result.pt_minimum}};
}

ThrottleResult throttle_result_from_json(const nlohmann::json& j) {
  ThrottleResult r;
  r.th = j.at("th").get<int>();
  r.k = j.at("k").get<int>();
  r.pt = j.at("pt").get<int>();
  r.witness = j.at("witness").get<VertexSet>();
  r.z_minus = j.at("z_minus").get<int>();
  r.pt_minimum = j.at("pt_minimum").get<int>();
  for (const auto& row : j.at("per_k")) {
    const auto& th = row.at("th");
    r.per_k.push_back(th.is_null() ? std::nullopt : std::optional<int>(th.get<int>()));
  }
  return r;
}

nlohmann::json to_json(const ExtremeClassification& c) {
  return {{"label", std::string(to_string(c.label))},
          {"predicted", c.predicted ? nlohmann::json(*c.predicted) : nlohmann::json(nullptr)},
          {"evidence", c.evidence_summary()}};
}

nlohmann::json trace_json(const PropagationTrace& trace, int order) { return trace_lines(trace, order); }

}  // namespace szf
