#include "szf/forcing.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace szf {

Coloring Coloring::from_set(int order, const VertexSet& blue) {
  Coloring c(order);
  for (Vertex v : blue) {
    if (v < 0 || v >= order) throw GraphError("initial vertex " + std::to_string(v) + " out of range");
    c.make_blue(v);
  }
  return c;
}

void Coloring::make_blue(Vertex v) {
  auto& slot = blue_.at(static_cast<std::size_t>(v));
  if (!slot) {
    slot = 1;
    ++blue_count_;
  }
}

VertexSet Coloring::blue_vertices() const {
  VertexSet out;
  for (Vertex v = 0; v < order(); ++v) {
    if (blue_[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> eligible_forces(const Graph& g, const Coloring& c) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    int white = 0;
    Vertex target = -1;
    for (Vertex w : g.neighbors(u)) {
      if (!c.is_blue(w)) {
        target = w;
        if (++white > 1) break;
      }
    }
    if (white == 1) out.emplace_back(u, target);
  }
  return out;
}

StepResult step(const Graph& g, const Coloring& c, int round) {
  StepResult result{c, {}};
  for (auto [u, w] : eligible_forces(g, c)) {
    result.events.push_back({u, w, round});
    result.coloring.make_blue(w);
  }
  return result;
}

PropagationTrace propagate(const Graph& g, const VertexSet& initial) {
  PropagationTrace trace;
  Coloring current = Coloring::from_set(g.order(), initial);
  trace.initial = current.blue_vertices();
  while (!current.all_blue()) {
    auto next = step(g, current, static_cast<int>(trace.rounds.size()) + 1);
    if (next.events.empty()) break;
    trace.rounds.push_back(std::move(next.events));
    current = std::move(next.coloring);
  }
  trace.outcome = current.all_blue() ? Outcome::completed : Outcome::stalled;
  trace.final_blue = current.blue_vertices();
  return trace;
}

bool is_skew_forcing_set(const Graph& g, const VertexSet& initial) {
  return propagate(g, initial).completed();
}

bool verify_ball_cover(const Graph& g, const VertexSet& initial, const PropagationTrace& trace) {
  if (!trace.completed()) throw std::logic_error("ball cover is only defined for completed propagation");
  const int radius = 2 * *trace.pt();
  VertexSet centers = leaves(g);
  centers.insert(centers.end(), initial.begin(), initial.end());
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (Vertex c : centers) {
    for (Vertex v : ball(g, c, radius)) covered[static_cast<std::size_t>(v)] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char x) { return x != 0; });
}

std::vector<std::string> trace_lines(const PropagationTrace& trace, int order) {
  std::vector<std::string> out;
  for (const auto& round : trace.rounds) {
    for (const auto& e : round) {
      out.push_back(std::to_string(e.round) + ' ' + std::to_string(e.forcer) + ' ' + std::to_string(e.forced));
    }
  }
  if (trace.completed()) {
    out.push_back("completed pt=" + std::to_string(*trace.pt()));
  } else {
    out.push_back("stalled blue=" + std::to_string(trace.final_blue.size()) + "/" + std::to_string(order));
  }
  return out;
}

void write_trace(std::ostream& out, const PropagationTrace& trace, int order) {
  for (const auto& line : trace_lines(trace, order)) out << line << '\n';
}

}  // namespace szf
