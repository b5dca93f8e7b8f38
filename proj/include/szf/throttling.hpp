#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "szf/graph.hpp"

namespace szf {

/// Serial is the reference enumeration; parallel splits each fixed-size
/// subset range across OpenMP threads. Both return identical results.
enum class Execution { serial, parallel };

struct SearchOptions {
  Execution execution = Execution::parallel;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class SearchTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest order the exhaustive search accepts.
inline constexpr int kMaxSearchOrder = 256;

/// Best throttling value among sets of one fixed size.
struct SizeOptimum {
  int value = 0;      // |S| + pt(G;S)
  VertexSet witness;  // lexicographically least set attaining value

  int pt() const noexcept { return value - static_cast<int>(witness.size()); }
};

struct ThrottleResult {
  int th = 0;
  VertexSet witness;
  int k = 0;
  int pt = 0;
  /// per_k[k] = th(G,k), or nullopt when no forcing set of size k exists.
  /// Covers k = 0..th-1, and k = 0..n for edgeless graphs.
  std::vector<std::optional<int>> per_k;
  int z_minus = 0;
  int pt_minimum = 0;
};

struct UpperBound {
  int value = 0;
  VertexSet witness;
};

/// |S| + pt(G;S), or nullopt if S is not a skew forcing set.
std::optional<int> throttling_number_of_set(const Graph& g, const VertexSet& s);

/// Minimum of |S| + pt(G;S) over forcing sets of size k whose value is at
/// most `value_cap`; nullopt if there is none.
std::optional<SizeOptimum> best_set_of_size(const Graph& g, int k, int value_cap,
                                            const SearchOptions& options = {});

/// th(G,k); nullopt when infeasible. Throws std::out_of_range unless 0 <= k <= n.
std::optional<int> throttling_at_k(const Graph& g, int k, const SearchOptions& options = {});

int skew_zero_forcing_number(const Graph& g, const SearchOptions& options = {});

/// Minimum propagation time over minimum skew forcing sets.
int min_propagation_time(const Graph& g, const SearchOptions& options = {});

/// Greedy forcing set, compared with V minus an edge and with V itself.
UpperBound greedy_upper_bound(const Graph& g);

ThrottleResult throttle(const Graph& g, const SearchOptions& options = {});

/// Same result as throttle(g) when upper >= th(G); skips every k >= upper.
/// Throws std::invalid_argument if the search proves upper < th(G).
ThrottleResult throttle_with_bound(const Graph& g, int upper, const SearchOptions& options = {});

/// First set (by size, then lexicographic order among the best of that
/// size) with |S| + pt(G;S) <= budget. nullopt certifies th(G) > budget.
std::optional<VertexSet> find_set_within(const Graph& g, int budget, const SearchOptions& options = {});

}  // namespace szf
