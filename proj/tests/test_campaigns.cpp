#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "szf/campaigns.hpp"

using namespace szf;

namespace {

std::string csv_without_runtime(const std::vector<VerificationRow>& rows) {
  auto copy = rows;
  for (auto& r : copy) r.runtime_ms = 0;
  std::ostringstream out;
  write_csv(out, copy);
  return out.str();
}

}  // namespace

TEST_CASE("cycles campaign") {
  CampaignRequest req{"cycles", std::pair{3, 18}};
  const auto rows = run_campaign(req);
  REQUIRE(rows.size() == 16);
  for (const auto& r : rows) CHECK(r.match);
  CHECK(rows.front().spec == "cycle:3");
  CHECK(rows.front().relation == Relation::eq);
}

TEST_CASE("rows are deterministic and independent of jobs") {
  CampaignRequest serial{"paths", std::pair{3, 12}};
  CampaignRequest parallel = serial;
  parallel.jobs = 4;
  CHECK(csv_without_runtime(run_campaign(serial)) == csv_without_runtime(run_campaign(parallel)));

  CampaignRequest ext{"extremes"};
  ext.n_max = 4;
  auto ext_parallel = ext;
  ext_parallel.jobs = 3;
  CHECK(csv_without_runtime(run_campaign(ext)) == csv_without_runtime(run_campaign(ext_parallel)));
}

TEST_CASE("csv format") {
  std::ostringstream out;
  write_csv(out, {{"cycle:8", 8, 4, 4, Relation::eq, true, 1.5}});
  CHECK(out.str() == "spec,n,computed,predicted,relation,match,runtime_ms\ncycle:8,8,4,4,eq,true,1.5\n");
}

TEST_CASE("unknown campaign and timeouts") {
  CHECK_THROWS_AS(run_campaign({"nope"}), std::invalid_argument);
  CampaignRequest slow{"hypercubes", std::pair{4, 4}};
  slow.timeout_s = 1e-9;
  CHECK_THROWS_AS(run_campaign(slow), CampaignTimeout);
}

TEST_CASE("campaign parameters") {
  CHECK(campaign_names().size() == 8);
  CHECK(default_spiders().size() == 9);
  CHECK(paired_spacing(2) == 2);
  CHECK(paired_spacing(18) == 6);
  CHECK(paired_spacing(40) == 8);
}
