#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "szf/graph.hpp"

namespace szf {

/// Blue/white state of every vertex; white is the complement of blue.
class Coloring {
 public:
  explicit Coloring(int order = 0) : blue_(static_cast<std::size_t>(order), 0) {}
  /// Throws GraphError if a vertex of `blue` is outside 0..order-1.
  static Coloring from_set(int order, const VertexSet& blue);

  int order() const noexcept { return static_cast<int>(blue_.size()); }
  bool is_blue(Vertex v) const { return blue_.at(static_cast<std::size_t>(v)) != 0; }
  void make_blue(Vertex v);
  int blue_count() const noexcept { return blue_count_; }
  bool all_blue() const noexcept { return blue_count_ == order(); }
  VertexSet blue_vertices() const;

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<char> blue_;
  int blue_count_ = 0;
};

struct ForceEvent {
  Vertex forcer = 0;
  Vertex forced = 0;
  int round = 0;

  bool operator==(const ForceEvent&) const = default;
};

enum class Outcome { completed, stalled };

struct PropagationTrace {
  VertexSet initial;
  /// rounds[i] holds the events of round i+1; every stored round is nonempty.
  std::vector<std::vector<ForceEvent>> rounds;
  Outcome outcome = Outcome::stalled;
  VertexSet final_blue;

  bool completed() const noexcept { return outcome == Outcome::completed; }
  /// Propagation time; nullopt when the initial set is not a forcing set.
  std::optional<int> pt() const {
    if (!completed()) return std::nullopt;
    return static_cast<int>(rounds.size());
  }
};

/// Pairs (u, w) such that w is white and is the only white neighbor of u.
/// u may itself be white. Sorted by (forcer, forced).
std::vector<std::pair<Vertex, Vertex>> eligible_forces(const Graph& g, const Coloring& c);

struct StepResult {
  Coloring coloring;
  std::vector<ForceEvent> events;
};

/// One simultaneous round: every force eligible at the start of the round
/// fires. All events are recorded, even when several target one vertex.
StepResult step(const Graph& g, const Coloring& c, int round = 1);

PropagationTrace propagate(const Graph& g, const VertexSet& initial);

bool is_skew_forcing_set(const Graph& g, const VertexSet& initial);

/// Checks that every vertex lies within distance 2t of a leaf or an
/// initially blue vertex, where t is the trace's propagation time.
/// Throws std::logic_error for a stalled trace.
bool verify_ball_cover(const Graph& g, const VertexSet& initial, const PropagationTrace& trace);

/// Line-delimited export: one "round forcer forced" line per event, then a
/// summary line "completed pt=<t>" or "stalled blue=<b>/<n>".
void write_trace(std::ostream& out, const PropagationTrace& trace, int order);
std::vector<std::string> trace_lines(const PropagationTrace& trace, int order);

}  // namespace szf
