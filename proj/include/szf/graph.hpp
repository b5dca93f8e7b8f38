#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace szf {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the graph6 and edge-list readers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as sorted neighbor lists. Every constructor
/// guarantees symmetry, no loops and no parallel edges, so a Graph can be
/// shared freely between threads once built.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list; duplicate edges are merged.
  /// Throws GraphError on a loop or an out-of-range endpoint.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adj_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<std::vector<Vertex>> adj);

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// Construction operators.

/// g2's vertices are shifted by |g1|.
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Disjoint union plus every edge between the two sides.
Graph join(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);

/// Corona g∘h: g's vertices keep their ids; copy i of h occupies the ids
/// |g| + i·|h| .. |g| + (i+1)·|h| - 1 and is fully joined to vertex i.
Graph corona(const Graph& g, const Graph& h);

/// Relabels the selected vertices to 0..k-1 in increasing id order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Metrics. Distances are edge counts; std::nullopt means "infinite".

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
std::vector<std::optional<int>> distances_from(const Graph& g, Vertex source);
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);
/// Infinite (nullopt) for a disconnected graph; throws GraphError on K0.
std::optional<int> diameter(const Graph& g);
VertexSet leaves(const Graph& g);
/// Minimum degree; 0 for the empty graph.
int min_degree(const Graph& g);
VertexSet ball(const Graph& g, Vertex v, int radius);

// Serialization.

/// graph6 encoding without header; supports n ≤ 258047.
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph from_graph6(std::string_view text);

/// Plain text: first line "n m", then m lines "u v". Lines starting with
/// '#' are comments and are skipped by the reader.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

std::string to_string(const VertexSet& s);

}  // namespace szf
