#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace szf {

/// How `computed` is compared with `predicted` in a row.
///   eq:       equality
///   le / ge:  computed <= predicted / computed >= predicted (bounds)
///   interior: computed is none of 1, 2, n-1, n (predicted is -1)
enum class Relation { eq, le, ge, interior };

std::string_view to_string(Relation r);

struct VerificationRow {
  std::string spec;
  int n = 0;
  long long computed = 0;
  long long predicted = 0;
  Relation relation = Relation::eq;
  bool match = false;
  double runtime_ms = 0.0;
};

struct CampaignRequest {
  std::string campaign;  // paths, cycles, spiders, hypercubes, coronas, extremes, diameter-bound, gadget-family
  std::optional<std::pair<int, int>> n_range;
  std::optional<int> n_max;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> seeds;
  int jobs = 1;
  double timeout_s = 300.0;
};

class CampaignTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& campaign_names();

/// Rows come back in the campaign's canonical order regardless of `jobs`.
/// Throws CampaignTimeout when an instance exceeds its time limit and
/// std::invalid_argument for an unknown campaign.
std::vector<VerificationRow> run_campaign(const CampaignRequest& request);

/// Header: spec,n,computed,predicted,relation,match,runtime_ms
void write_csv(std::ostream& out, const std::vector<VerificationRow>& rows);

/// Spacing used for paired-witness campaigns: max(2, floor(sqrt(2n))), capped at n.
int paired_spacing(int base_length);

/// The nine balanced spiders checked by default.
const std::vector<std::pair<int, int>>& default_spiders();

}  // namespace szf
