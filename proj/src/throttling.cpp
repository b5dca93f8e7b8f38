#include "szf/throttling.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>

#include "kernel.hpp"

namespace szf {

namespace {

using detail::Bits;
using detail::Kernel;
using detail::RunStatus;
using Clock = std::chrono::steady_clock;

// Search keys pack (value, lexicographic rank) so that a single integer
// minimum picks the best value and, among ties, the earliest subset.
constexpr int kRankBits = 55;
constexpr std::uint64_t kRankMask = (std::uint64_t{1} << kRankBits) - 1;

constexpr std::uint64_t make_key(int value, std::uint64_t rank) {
  return (static_cast<std::uint64_t>(value) << kRankBits) | rank;
}
constexpr int key_value(std::uint64_t key) { return static_cast<int>(key >> kRankBits); }
constexpr std::uint64_t key_rank(std::uint64_t key) { return key & kRankMask; }

/// C(n, k) saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

/// k-subset of {0..n-1} with the given rank in lexicographic order.
std::vector<Vertex> unrank(int n, int k, std::uint64_t rank) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(k));
  Vertex c = 0;
  for (int i = 0; i < k; ++i) {
    for (;; ++c) {
      const std::uint64_t block = binomial(n - c - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
    }
    out.push_back(c++);
  }
  return out;
}

/// Advances to the next k-subset in lexicographic order.
bool next_subset(std::vector<Vertex>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j) - 1] + 1;
  return true;
}

bool past(const std::optional<Clock::time_point>& deadline) {
  return deadline && Clock::now() >= *deadline;
}

[[noreturn]] void timed_out() { throw SearchTimeout("search exceeded its deadline"); }

template <std::size_t W>
std::optional<SizeOptimum> search_serial(const Kernel<W>& kernel, int k, int cap, const SearchOptions& options) {
  const int n = kernel.order();
  std::vector<Vertex> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;

  std::optional<SizeOptimum> best;
  std::uint64_t visited = 0;
  do {
    // Later subsets only replace the incumbent with a strictly better value.
    const int allowed = best ? best->value - 1 : cap;
    if (allowed < k) break;
    if ((++visited & 0xfff) == 0 && past(options.deadline)) timed_out();
    const auto r = kernel.run(kernel.mask_of(subset), allowed - k);
    if (r.status == RunStatus::completed) best = SizeOptimum{k + r.rounds, subset};
  } while (next_subset(subset, n));
  return best;
}

template <std::size_t W>
std::optional<SizeOptimum> search_parallel(const Kernel<W>& kernel, int k, int cap, const SearchOptions& options) {
  const int n = kernel.order();
  const std::uint64_t total = binomial(n, k);
  if (total > kRankMask) throw std::length_error("too many subsets of size " + std::to_string(k));

  const std::uint64_t none = make_key(cap + 1, 0);
  std::atomic<std::uint64_t> best{none};
  std::atomic<bool> expired{false};

  constexpr std::uint64_t kChunk = 2048;
  const auto chunks = static_cast<long long>((total + kChunk - 1) / kChunk);

#pragma omp parallel for schedule(dynamic, 1)
  for (long long chunk = 0; chunk < chunks; ++chunk) {
    if (expired.load(std::memory_order_relaxed)) continue;
    if (past(options.deadline)) {
      expired.store(true, std::memory_order_relaxed);
      continue;
    }
    const std::uint64_t first = static_cast<std::uint64_t>(chunk) * kChunk;
    const std::uint64_t last = std::min(total, first + kChunk);
    std::vector<Vertex> subset = unrank(n, k, first);
    for (std::uint64_t rank = first; rank < last; ++rank) {
      const std::uint64_t incumbent = best.load(std::memory_order_relaxed);
      // Ties still matter for subsets ranked before the incumbent.
      const int allowed = rank < key_rank(incumbent) ? key_value(incumbent) : key_value(incumbent) - 1;
      if (allowed >= k) {
        const auto r = kernel.run(kernel.mask_of(subset), allowed - k);
        if (r.status == RunStatus::completed) {
          const std::uint64_t key = make_key(k + r.rounds, rank);
          std::uint64_t seen = best.load(std::memory_order_relaxed);
          while (key < seen && !best.compare_exchange_weak(seen, key, std::memory_order_relaxed)) {
          }
        }
      }
      if (rank + 1 < last) next_subset(subset, n);
    }
  }
  if (expired.load()) timed_out();

  const std::uint64_t found = best.load();
  if (found == none || key_value(found) > cap) return std::nullopt;
  return SizeOptimum{key_value(found), unrank(n, k, key_rank(found))};
}

template <std::size_t W>
std::optional<SizeOptimum> search_with(const Graph& g, int k, int cap, const SearchOptions& options) {
  const Kernel<W> kernel(g);
  if (options.execution == Execution::serial) return search_serial(kernel, k, cap, options);
  return search_parallel(kernel, k, cap, options);
}

void check_order(const Graph& g) {
  if (g.order() > kMaxSearchOrder) {
    throw std::length_error("exhaustive search supports at most " + std::to_string(kMaxSearchOrder) + " vertices");
  }
}

template <std::size_t W>
UpperBound greedy_with(const Graph& g) {
  const Kernel<W> kernel(g);
  const int n = g.order();
  const int unlimited = n + 1;

  VertexSet chosen;
  Bits<W> blue;
  auto r = kernel.run(blue, unlimited);
  while (r.status != RunStatus::completed) {
    Vertex pick = -1;
    int fewest_white = n + 1;
    for (Vertex v = 0; v < n; ++v) {
      if (blue.test(v)) continue;
      Bits<W> trial = blue;
      trial.set(v);
      const auto t = kernel.run(trial, unlimited);
      const int white = n - t.blue_count;
      if (white < fewest_white) {
        fewest_white = white;
        pick = v;
      }
    }
    blue.set(pick);
    chosen.push_back(pick);
    r = kernel.run(blue, unlimited);
  }
  std::sort(chosen.begin(), chosen.end());
  UpperBound best{static_cast<int>(chosen.size()) + r.rounds, chosen};

  // V minus the endpoints of an edge colors everything in one round.
  const auto edges = g.edges();
  if (!edges.empty() && n - 1 < best.value) {
    VertexSet rest;
    for (Vertex v = 0; v < n; ++v) {
      if (v != edges.front().first && v != edges.front().second) rest.push_back(v);
    }
    best = {n - 1, rest};
  }
  return best;
}

}  // namespace

std::optional<int> throttling_number_of_set(const Graph& g, const VertexSet& s) {
  check_order(g);
  for (Vertex v : s) {
    if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
  auto eval = [&](const auto& kernel) -> std::optional<int> {
    const auto r = kernel.run(kernel.mask_of(s), g.order() + 1);
    if (r.status != RunStatus::completed) return std::nullopt;
    return static_cast<int>(s.size()) + r.rounds;
  };
  if (g.order() <= 64) return eval(Kernel<1>(g));
  if (g.order() <= 128) return eval(Kernel<2>(g));
  return eval(Kernel<4>(g));
}

std::optional<SizeOptimum> best_set_of_size(const Graph& g, int k, int value_cap, const SearchOptions& options) {
  check_order(g);
  if (k < 0 || k > g.order()) throw std::out_of_range("subset size " + std::to_string(k) + " out of range");
  if (value_cap < k) return std::nullopt;
  value_cap = std::min(value_cap, g.order());
  if (g.order() <= 64) return search_with<1>(g, k, value_cap, options);
  if (g.order() <= 128) return search_with<2>(g, k, value_cap, options);
  return search_with<4>(g, k, value_cap, options);
}

std::optional<int> throttling_at_k(const Graph& g, int k, const SearchOptions& options) {
  const auto best = best_set_of_size(g, k, g.order(), options);
  if (!best) return std::nullopt;
  return best->value;
}

int skew_zero_forcing_number(const Graph& g, const SearchOptions& options) {
  for (int k = 0; k <= g.order(); ++k) {
    if (best_set_of_size(g, k, g.order(), options)) return k;
  }
  return g.order();  // unreachable: V(G) always forces
}

int min_propagation_time(const Graph& g, const SearchOptions& options) {
  const int z = skew_zero_forcing_number(g, options);
  return best_set_of_size(g, z, g.order(), options)->pt();
}

UpperBound greedy_upper_bound(const Graph& g) {
  check_order(g);
  if (g.order() <= 64) return greedy_with<1>(g);
  if (g.order() <= 128) return greedy_with<2>(g);
  return greedy_with<4>(g);
}

ThrottleResult throttle_with_bound(const Graph& g, int upper, const SearchOptions& options) {
  check_order(g);
  const int n = g.order();
  ThrottleResult result;
  std::optional<SizeOptimum> best;
  int limit = upper;
  for (int k = 0; k <= n; ++k) {
    // th(G,k) >= k+1 for k < n, so sizes at or beyond the bound cannot
    // improve on it; k = n (pt = 0) only matters for edgeless graphs.
    const bool needed = k < limit || (k == n && limit >= n);
    if (!needed) break;
    auto at_k = best_set_of_size(g, k, n, options);
    result.per_k.push_back(at_k ? std::optional<int>(at_k->value) : std::nullopt);
    if (at_k && (!best || at_k->value < best->value)) {
      best = std::move(at_k);
      limit = std::min(limit, best->value);
    }
  }
  if (!best || best->value > upper) {
    throw std::invalid_argument("bound " + std::to_string(upper) + " is below the skew throttling number");
  }
  result.th = best->value;
  result.witness = best->witness;
  result.k = static_cast<int>(best->witness.size());
  result.pt = best->pt();
  for (std::size_t k = 0; k < result.per_k.size(); ++k) {
    if (result.per_k[k]) {
      result.z_minus = static_cast<int>(k);
      result.pt_minimum = *result.per_k[k] - result.z_minus;
      break;
    }
  }
  return result;
}

ThrottleResult throttle(const Graph& g, const SearchOptions& options) {
  return throttle_with_bound(g, greedy_upper_bound(g).value, options);
}

std::optional<VertexSet> find_set_within(const Graph& g, int budget, const SearchOptions& options) {
  check_order(g);
  for (int k = 0; k <= std::min(budget, g.order()); ++k) {
    if (auto best = best_set_of_size(g, k, budget, options)) return best->witness;
  }
  return std::nullopt;
}

}  // namespace szf
