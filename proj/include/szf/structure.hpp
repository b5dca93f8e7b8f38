#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "szf/graph.hpp"

namespace szf {

using Quad = std::array<Vertex, 4>;

/// Sorted 4-set inducing P4 (resp. 2K2); first hit in lexicographic order.
std::optional<Quad> find_induced_p4(const Graph& g);
std::optional<Quad> find_induced_2k2(const Graph& g);

/// Binary union/join decomposition tree of a cograph. Leaves carry the
/// original vertex ids.
struct Cotree {
  enum class Kind { leaf, disjoint_union, join };
  struct Node {
    Kind kind = Kind::leaf;
    Vertex vertex = -1;  // leaves only
    int left = -1;
    int right = -1;
  };

  std::vector<Node> nodes;
  int root = -1;

  /// Applies the node operations bottom-up on the original ids.
  Graph evaluate() const;
  /// Nested form such as "join(K1,union(K1,K1))".
  std::string shape() const;
};

/// Splits by components (union) or co-components (join), binarizing
/// right-nested; nullopt when some induced subgraph of order > 1 is
/// connected with a connected complement, i.e. g is not a cograph.
std::optional<Cotree> build_cotree(const Graph& g);

struct HParams {
  int s = 0;  // pendant paths b - x - y
  int t = 0;  // triangles b z w
  int r = 0;  // extra K2 components

  bool operator==(const HParams&) const = default;
};

struct HForm {
  HParams params;
  Vertex hub = 0;  // b
};

/// Structural recognition of H(s,t) ∪ rK2 with s + t + r >= 1.
std::optional<HForm> recognize_h_graph(const Graph& g);

struct CoronaK1Form {
  Graph core;              // Ĝ, induced on the non-leaf vertices
  VertexSet core_vertices; // their ids in g
  int r = 0;               // K2 components stripped off
};

/// Recognizes (Ĝ∘K1) ∪ rK2 with |Ĝ| >= 2 and an edge in every component of Ĝ.
std::optional<CoronaK1Form> recognize_corona_k1(const Graph& g);

enum class ExtremeLabel { th_equals_1, th_equals_2, th_equals_n_minus_1, th_equals_n, interior };

std::string_view to_string(ExtremeLabel label);

struct ExtremeClassification {
  ExtremeLabel label = ExtremeLabel::interior;
  /// Predicted th; nullopt for interior.
  std::optional<int> predicted;
  // Evidence; which fields are set depends on the label.
  std::optional<HForm> h;
  std::optional<CoronaK1Form> corona;
  std::optional<int> matching_edges;  // rK2 (label 1)
  std::optional<Quad> induced_p4;
  std::optional<Quad> induced_2k2;
  std::optional<Cotree> cotree;  // label n-1

  std::string evidence_summary() const;
};

/// Label precedence: 1, 2, n, n-1, interior. K1 is reported as th=1 and 2K1
/// as th=2; both values coincide with the other applicable label.
ExtremeClassification classify_extremes(const Graph& g);

/// Re-checks the evidence attached to a classification against g.
bool evidence_certifies(const Graph& g, const ExtremeClassification& c);

}  // namespace szf
