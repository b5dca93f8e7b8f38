#pragma once

// Fixed-width bitset propagation used by the exhaustive search. The
// readable reference simulator lives in forcing.cpp; tests cross-check the
// two on random graphs.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "szf/graph.hpp"

namespace szf::detail {

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> word{};

  void set(int v) noexcept { word[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  bool test(int v) const noexcept { return (word[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; }

  int count() const noexcept {
    int c = 0;
    for (auto x : word) c += std::popcount(x);
    return c;
  }

  /// True iff (*this & ~mask) has exactly one bit set.
  bool single_outside(const Bits& mask) const noexcept {
    bool seen = false;
    for (std::size_t i = 0; i < W; ++i) {
      const std::uint64_t x = word[i] & ~mask.word[i];
      if (x == 0) continue;
      if (seen || (x & (x - 1)) != 0) return false;
      seen = true;
    }
    return seen;
  }

  void merge_outside(const Bits& other, const Bits& mask) noexcept {
    for (std::size_t i = 0; i < W; ++i) word[i] |= other.word[i] & ~mask.word[i];
  }

  bool operator==(const Bits&) const = default;
};

enum class RunStatus { completed, stalled, aborted };

struct RunResult {
  RunStatus status;
  int rounds;      // rounds executed that produced a force
  int blue_count;  // blue vertices when the run ended
};

template <std::size_t W>
class Kernel {
 public:
  explicit Kernel(const Graph& g) : order_(g.order()), adj_(static_cast<std::size_t>(g.order())) {
    for (Vertex v = 0; v < order_; ++v) {
      full_.set(v);
      for (Vertex u : g.neighbors(v)) adj_[static_cast<std::size_t>(v)].set(u);
    }
  }

  int order() const noexcept { return order_; }

  Bits<W> mask_of(std::span<const Vertex> vertices) const {
    Bits<W> b;
    for (Vertex v : vertices) b.set(v);
    return b;
  }

  /// Simultaneous-round propagation. Stops with `aborted` once max_rounds
  /// rounds have run without coloring everything.
  RunResult run(Bits<W> blue, int max_rounds) const {
    int rounds = 0;
    while (!(blue == full_)) {
      if (rounds >= max_rounds) return {RunStatus::aborted, rounds, blue.count()};
      Bits<W> next = blue;
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (adj_[u].single_outside(blue)) next.merge_outside(adj_[u], blue);
      }
      if (next == blue) return {RunStatus::stalled, rounds, blue.count()};
      blue = next;
      ++rounds;
    }
    return {RunStatus::completed, rounds, order_};
  }

 private:
  int order_;
  std::vector<Bits<W>> adj_;
  Bits<W> full_;
};

}  // namespace szf::detail
