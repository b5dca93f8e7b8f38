#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "szf/graph.hpp"

namespace szf {

// Generators. Labelings are part of the contract so witness sets can be read
// back against the construction.

Graph empty_graph(int n);
/// rK2: edges (2i, 2i+1).
Graph matching(int r);
/// 0 - 1 - ... - (n-1).
Graph path(int n);
/// path(n) plus the edge (n-1, 0); n >= 3.
Graph cycle(int n);
Graph complete(int n);
/// K_{1,p}: center 0, leaves 1..p.
Graph star(int p);
/// Parts occupy consecutive id ranges in the given order.
Graph complete_multipartite(const std::vector<int>& parts);
/// Q_n: vertex ids are n-bit strings, edges at Hamming distance 1.
Graph hypercube(int n);
/// Balanced spider T_{p,l}: center 0, leg j is 1+j*l .. (j+1)*l walking outward.
Graph spider(int legs, int leg_length);
/// H(s,t) ∪ rK2. b = 0; pendant paths (x_i, y_i) = (1+2i, 2+2i); triangles
/// (z_i, w_i) follow; then the r matching edges.
Graph h_graph(int s, int t, int r);
/// F_n = H(n triangles).
Graph friendship(int n);
Graph corona_k1(const Graph& g);
Graph corona_k2(const Graph& g);

/// splitmix64; documented so generated corpora can be reproduced elsewhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// next() % bound.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Connected graph on n vertices: vertex i > 0 attaches to a uniformly drawn
/// earlier vertex; each remaining pair then becomes an edge when
/// below(3) == 0, unless `tree_only`.
Graph random_connected(int n, std::uint64_t seed, bool tree_only = false);

// Family of graphs built from a path or cycle by hanging K2 gadgets.

enum class BaseKind { path, cycle };
enum class GadgetKind { single_edge, double_edge };

struct GadgetFamilySpec {
  BaseKind base = BaseKind::cycle;
  int base_length = 3;
  /// attachments[v] lists the gadgets hung on base vertex v. A single-edge
  /// gadget (a, b) has a ~ v; a double-edge gadget also has b ~ v.
  std::vector<std::vector<GadgetKind>> attachments;
};

/// Base vertices are 0..n-1 in path/cycle order; gadgets follow in order of
/// base vertex then attachment index, each as the pair (a, b).
Graph gadget_family(const GadgetFamilySpec& spec);

/// Draws 0..max_per_vertex gadgets per base vertex; gadgets are double-edge
/// unless allow_single and the coin below(2) comes up 0.
GadgetFamilySpec random_gadget_spec(BaseKind base, int base_length, std::uint64_t seed, int max_per_vertex = 1,
                                    bool allow_single = false);

/// Adjacent base pairs (i, i+1) at i = 0, spacing, 2*spacing, ...; path bases
/// also get the pair at the far end. Base vertices must carry ids 0..n-1.
VertexSet paired_blue_witness(BaseKind base, int base_length, int spacing);

// Closed forms. All square-root ceilings are exact integer computations.

/// Integer square root, floor.
std::uint64_t isqrt(std::uint64_t x);
/// ceil(sqrt(x) - half_units/2).
std::int64_t ceil_sqrt_minus_halves(std::uint64_t x, int half_units);

int th_path_formula(int n);
int th_cycle_formula(int n);
int th_spider_formula(int legs, int leg_length);
std::int64_t th_hypercube_formula(int n);

/// coefficient * sqrt(radicand) with a rational coefficient; exact compare.
struct Surd {
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::int64_t radicand = 1;

  /// value <= x and value >= x for integer x.
  bool at_most(std::int64_t x) const;
  bool at_least(std::int64_t x) const;
  double approx() const;
};

struct SpiderFBound {
  Surd f;
  Surd lower;  // f / 2
  Surd upper;  // 3 f

  bool contains(std::int64_t th) const { return lower.at_most(th) && upper.at_least(th); }
};

SpiderFBound spider_f_bound(int legs, int leg_length);

/// th >= sqrt(d) - 1/4, evaluated as (4 th + 1)^2 >= 16 d.
bool diameter_bound_holds(std::int64_t th, std::int64_t d);
/// Least integer th with diameter_bound_holds(th, d).
std::int64_t min_throttling_for_diameter(std::int64_t d);

// "family:param,param,..." descriptors used by the CLI.

enum class Family {
  path,
  cycle,
  complete,
  star,
  complete_multipartite,
  hypercube,
  spider,
  friendship,
  h_graph,
  empty,
  matching,
  corona,
  gadget
};

struct FamilySpec {
  Family family = Family::path;
  std::vector<int> params;

  auto operator<=>(const FamilySpec&) const = default;
};

/// Throws GraphError on an unknown family or bad parameters.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
std::string_view family_name(Family f);
Graph build(const FamilySpec& spec);
/// One-line description of the vertex labeling used by build(spec).
std::string labeling_note(const FamilySpec& spec);

}  // namespace szf
