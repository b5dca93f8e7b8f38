#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "szf/families.hpp"
#include "szf/report.hpp"

using namespace szf;

TEST_CASE("throttle result JSON keys and round trip") {
  const auto r = throttle(cycle(8));
  const auto j = to_json(r);
  for (const char* key : {"th", "k", "pt", "witness", "per_k", "z_minus", "pt_minimum"}) CHECK(j.contains(key));
  CHECK(j["th"] == 4);
  CHECK(j["per_k"][0]["th"].is_null());
  CHECK(j["per_k"][2]["th"] == 4);

  const auto back = throttle_result_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.th == r.th);
  CHECK(back.witness == r.witness);
  CHECK(back.per_k == r.per_k);
  CHECK(back.z_minus == r.z_minus);
  CHECK(back.pt_minimum == r.pt_minimum);
  CHECK(throttling_number_of_set(cycle(8), back.witness) == back.th);

  CHECK_THROWS_AS(throttle_result_from_json(nlohmann::json::object()), nlohmann::json::exception);
}

TEST_CASE("classification JSON") {
  const auto j = to_json(classify_extremes(empty_graph(4)));
  CHECK(j["label"] == "th_equals_n");
  CHECK(j["predicted"] == 4);
  CHECK(j["evidence"].is_string());
  CHECK(to_json(classify_extremes(cycle(8)))["predicted"].is_null());
}

TEST_CASE("trace JSON") {
  const auto j = trace_json(propagate(path(2), {}), 2);
  CHECK(j == nlohmann::json{"1 0 1", "1 1 0", "completed pt=1"});
}
