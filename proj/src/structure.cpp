#include "szf/structure.hpp"

#include <algorithm>
#include <functional>

#include "szf/forcing.hpp"

namespace szf {

namespace {

enum class QuadShape { other, p4, two_k2 };

QuadShape quad_shape(const Graph& g, const Quad& q) {
  std::array<int, 4> deg{};
  int edges = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (g.adjacent(q[static_cast<std::size_t>(i)], q[static_cast<std::size_t>(j)])) {
        ++edges;
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
      }
    }
  }
  std::sort(deg.begin(), deg.end());
  if (edges == 3 && deg == std::array<int, 4>{1, 1, 2, 2}) return QuadShape::p4;
  if (edges == 2 && deg == std::array<int, 4>{1, 1, 1, 1}) return QuadShape::two_k2;
  return QuadShape::other;
}

std::optional<Quad> find_quad(const Graph& g, QuadShape wanted) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        for (Vertex d = c + 1; d < n; ++d) {
          const Quad q{a, b, c, d};
          if (quad_shape(g, q) == wanted) return q;
        }
      }
    }
  }
  return std::nullopt;
}

/// Components of g[subset] (complemented when `co`), each sorted.
std::vector<VertexSet> restricted_components(const Graph& g, const VertexSet& subset, bool co) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<VertexSet> out;
  for (Vertex s : subset) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex v : subset) {
        if (seen[static_cast<std::size_t>(v)] || v == comp[i]) continue;
        if (g.adjacent(comp[i], v) != co) {
          seen[static_cast<std::size_t>(v)] = 1;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_matching(const Graph& g) {
  if (g.size() == 0) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) return false;
  }
  return true;
}

}  // namespace

std::optional<Quad> find_induced_p4(const Graph& g) { return find_quad(g, QuadShape::p4); }
std::optional<Quad> find_induced_2k2(const Graph& g) { return find_quad(g, QuadShape::two_k2); }

// Cotree ------------------------------------------------------------------

std::optional<Cotree> build_cotree(const Graph& g) {
  if (g.empty()) return std::nullopt;
  Cotree tree;
  std::function<int(const VertexSet&)> build = [&](const VertexSet& subset) -> int {
    if (subset.size() == 1) {
      tree.nodes.push_back({Cotree::Kind::leaf, subset.front(), -1, -1});
      return static_cast<int>(tree.nodes.size()) - 1;
    }
    auto parts = restricted_components(g, subset, false);
    Cotree::Kind kind = Cotree::Kind::disjoint_union;
    if (parts.size() == 1) {
      parts = restricted_components(g, subset, true);
      kind = Cotree::Kind::join;
      if (parts.size() == 1) return -1;
    }
    std::vector<int> children;
    for (const auto& part : parts) {
      const int child = build(part);
      if (child < 0) return -1;
      children.push_back(child);
    }
    int acc = children.back();
    for (auto it = children.rbegin() + 1; it != children.rend(); ++it) {
      tree.nodes.push_back({kind, -1, *it, acc});
      acc = static_cast<int>(tree.nodes.size()) - 1;
    }
    return acc;
  };
  VertexSet all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  tree.root = build(all);
  if (tree.root < 0) return std::nullopt;
  return tree;
}

Graph Cotree::evaluate() const {
  std::vector<Edge> edges;
  int order = 0;
  std::function<VertexSet(int)> walk = [&](int id) -> VertexSet {
    const Node& node = nodes.at(static_cast<std::size_t>(id));
    if (node.kind == Kind::leaf) {
      order = std::max(order, node.vertex + 1);
      return {node.vertex};
    }
    VertexSet left = walk(node.left);
    VertexSet right = walk(node.right);
    if (node.kind == Kind::join) {
      for (Vertex u : left) {
        for (Vertex v : right) edges.emplace_back(u, v);
      }
    }
    left.insert(left.end(), right.begin(), right.end());
    return left;
  };
  if (root >= 0) walk(root);
  return Graph::from_edge_list(order, edges);
}

std::string Cotree::shape() const {
  std::function<std::string(int)> walk = [&](int id) -> std::string {
    const Node& node = nodes.at(static_cast<std::size_t>(id));
    if (node.kind == Kind::leaf) return "K1";
    return std::string(node.kind == Kind::join ? "join(" : "union(") + walk(node.left) + "," + walk(node.right) + ")";
  };
  return root < 0 ? "" : walk(root);
}

// H(s,t) ∪ rK2 ---------------------------------------------------------------

std::optional<HForm> recognize_h_graph(const Graph& g) {
  int r = 0;
  std::vector<VertexSet> rest;
  for (auto& comp : components(g)) {
    if (comp.size() == 2) {
      ++r;
    } else {
      rest.push_back(std::move(comp));
    }
  }
  if (rest.size() != 1) return std::nullopt;
  const VertexSet& core = rest.front();
  if (core.size() == 1) {
    if (r == 0) return std::nullopt;
    return HForm{{0, 0, r}, core.front()};
  }
  if (core.size() % 2 == 0) return std::nullopt;

  std::vector<char> in_core(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : core) in_core[static_cast<std::size_t>(v)] = 1;
  for (Vertex hub : core) {
    // Removing the hub must leave a perfect matching of K2s.
    bool ok = true;
    int s = 0;
    int t = 0;
    for (Vertex v : core) {
      if (v == hub) continue;
      Vertex partner = -1;
      int count = 0;
      for (Vertex u : g.neighbors(v)) {
        if (u != hub && in_core[static_cast<std::size_t>(u)]) {
          partner = u;
          ++count;
        }
      }
      if (count != 1) {
        ok = false;
        break;
      }
      if (v < partner) {
        const int links = (g.adjacent(hub, v) ? 1 : 0) + (g.adjacent(hub, partner) ? 1 : 0);
        if (links == 0) {
          ok = false;
          break;
        }
        (links == 1 ? s : t) += 1;
      }
    }
    if (ok) return HForm{{s, t, r}, hub};
  }
  return std::nullopt;
}

// (Ĝ∘K1) ∪ rK2 ---------------------------------------------------------------

std::optional<CoronaK1Form> recognize_corona_k1(const Graph& g) {
  int r = 0;
  VertexSet rest;
  for (const auto& comp : components(g)) {
    if (comp.size() == 2) {
      ++r;
    } else {
      rest.insert(rest.end(), comp.begin(), comp.end());
    }
  }
  if (rest.empty()) return std::nullopt;
  std::sort(rest.begin(), rest.end());

  VertexSet core;
  for (Vertex v : rest) {
    const int deg = g.degree(v);
    if (deg == 0) return std::nullopt;
    if (deg == 1) {
      if (g.degree(g.neighbors(v).front()) == 1) return std::nullopt;
      continue;
    }
    int leaf_nbrs = 0;
    for (Vertex u : g.neighbors(v)) leaf_nbrs += g.degree(u) == 1 ? 1 : 0;
    if (leaf_nbrs != 1) return std::nullopt;
    core.push_back(v);
  }
  if (core.size() < 2) return std::nullopt;
  Graph hat = induced_subgraph(g, core);
  if (min_degree(hat) == 0) return std::nullopt;
  return CoronaK1Form{std::move(hat), std::move(core), r};
}

// Classification ------------------------------------------------------------

std::string_view to_string(ExtremeLabel label) {
  switch (label) {
    case ExtremeLabel::th_equals_1: return "th_equals_1";
    case ExtremeLabel::th_equals_2: return "th_equals_2";
    case ExtremeLabel::th_equals_n_minus_1: return "th_equals_n_minus_1";
    case ExtremeLabel::th_equals_n: return "th_equals_n";
    case ExtremeLabel::interior: return "interior";
  }
  return "";
}

ExtremeClassification classify_extremes(const Graph& g) {
  const int n = g.order();
  ExtremeClassification c;
  auto label = [&](ExtremeLabel l, std::optional<int> value) {
    c.label = l;
    c.predicted = value;
    return c;
  };

  if (n == 1) return label(ExtremeLabel::th_equals_1, 1);
  if (is_matching(g)) {
    c.matching_edges = static_cast<int>(g.size());
    return label(ExtremeLabel::th_equals_1, 1);
  }
  if (n == 2 && g.size() == 0) return label(ExtremeLabel::th_equals_2, 2);
  if (auto h = recognize_h_graph(g)) {
    c.h = std::move(h);
    return label(ExtremeLabel::th_equals_2, 2);
  }
  if (auto form = recognize_corona_k1(g)) {
    c.corona = std::move(form);
    return label(ExtremeLabel::th_equals_2, 2);
  }
  if (g.size() == 0) return label(ExtremeLabel::th_equals_n, n);

  c.induced_p4 = find_induced_p4(g);
  c.induced_2k2 = find_induced_2k2(g);
  if (!c.induced_p4 && !c.induced_2k2) {
    c.cotree = build_cotree(g);
    return label(ExtremeLabel::th_equals_n_minus_1, n - 1);
  }
  return label(ExtremeLabel::interior, std::nullopt);
}

namespace {

/// |S| + pt(G;S) via the reference simulator.
std::optional<int> set_value(const Graph& g, const VertexSet& s) {
  const auto trace = propagate(g, s);
  if (!trace.completed()) return std::nullopt;
  return static_cast<int>(s.size()) + *trace.pt();
}

VertexSet all_but(const Graph& g, const Quad& q) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (std::find(q.begin(), q.end(), v) == q.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

bool evidence_certifies(const Graph& g, const ExtremeClassification& c) {
  const int n = g.order();
  switch (c.label) {
    case ExtremeLabel::th_equals_1:
      if (n == 1) return g.size() == 0;
      return c.matching_edges && is_matching(g) && *c.matching_edges == static_cast<int>(g.size()) &&
             set_value(g, {}) == 1;
    case ExtremeLabel::th_equals_2: {
      if (is_matching(g) || n == 1) return false;  // those have th = 1
      if (n == 2) return g.size() == 0;
      if (c.h) {
        const auto& p = c.h->params;
        return n == 1 + 2 * (p.s + p.t + p.r) && static_cast<int>(g.size()) == 2 * p.s + 3 * p.t + p.r &&
               set_value(g, {c.h->hub}) == 2;
      }
      if (c.corona) return set_value(g, {}) == 2 && c.corona->core.order() >= 2;
      return false;
    }
    case ExtremeLabel::th_equals_n:
      return g.size() == 0;
    case ExtremeLabel::th_equals_n_minus_1:
      return g.size() > 0 && c.cotree && c.cotree->evaluate() == g && !find_induced_2k2(g);
    case ExtremeLabel::interior:
      // V minus an induced 2K2 throttles in n-3; V minus an induced P4 in at most n-2.
      if (c.induced_2k2 && quad_shape(g, *c.induced_2k2) == QuadShape::two_k2) {
        return set_value(g, all_but(g, *c.induced_2k2)) == n - 3;
      }
      if (c.induced_p4 && quad_shape(g, *c.induced_p4) == QuadShape::p4) {
        const auto v = set_value(g, all_but(g, *c.induced_p4));
        return v && *v <= n - 2;
      }
      return false;
  }
  return false;
}

std::string ExtremeClassification::evidence_summary() const {
  if (matching_edges) return "matching r=" + std::to_string(*matching_edges);
  if (h) {
    return "H(s=" + std::to_string(h->params.s) + ",t=" + std::to_string(h->params.t) + ") + " +
           std::to_string(h->params.r) + "K2, hub " + std::to_string(h->hub);
  }
  if (corona) return "corona core " + szf::to_string(corona->core_vertices) + " + " + std::to_string(corona->r) + "K2";
  if (cotree) return "cograph without induced 2K2: " + cotree->shape();
  if (induced_2k2) return "induced 2K2 " + szf::to_string(VertexSet(induced_2k2->begin(), induced_2k2->end()));
  if (induced_p4) return "induced P4 " + szf::to_string(VertexSet(induced_p4->begin(), induced_p4->end()));
  switch (label) {
    case ExtremeLabel::th_equals_1: return "K1";
    case ExtremeLabel::th_equals_2: return "2K1";
    case ExtremeLabel::th_equals_n: return "edgeless";
    default: return "";
  }
}

}  // namespace szf
