#pragma once

#include <json.hpp>

#include "szf/forcing.hpp"
#include "szf/graph.hpp"
#include "szf/structure.hpp"
#include "szf/throttling.hpp"

namespace szf {

// JSON keys are part of the external contract:
//   throttle:  th, k, pt, witness, per_k [{k, th|null}], z_minus, pt_minimum
//   classify:  label, predicted (int|null), evidence (string)

nlohmann::json to_json(const ThrottleResult& result);
nlohmann::json to_json(const ExtremeClassification& c);
/// Trace in the line format of write_trace, one string per line.
nlohmann::json trace_json(const PropagationTrace& trace, int order);

/// Inverse of to_json(ThrottleResult); throws nlohmann::json::exception on a
/// malformed object.
ThrottleResult throttle_result_from_json(const nlohmann::json& j);

}  // namespace szf
