#include "szf/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace szf {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

Graph empty_graph(int n) {
  require(n >= 0, "empty graph needs n >= 0");
  return Graph::from_edge_list(n, {});
}

Graph matching(int r) {
  require(r >= 0, "matching needs r >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i < r; ++i) edges.emplace_back(2 * i, 2 * i + 1);
  return Graph::from_edge_list(2 * r, edges);
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges);
}

Graph star(int p) {
  require(p >= 1, "star needs p >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= p; ++i) edges.emplace_back(0, i);
  return Graph::from_edge_list(p + 1, edges);
}

Graph complete_multipartite(const std::vector<int>& parts) {
  require(!parts.empty(), "complete multipartite graph needs at least one part");
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require(parts[i] >= 1, "complete multipartite parts must be >= 1");
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph hypercube(int n) {
  require(n >= 1 && n <= 20, "hypercube needs 1 <= n <= 20");
  const int order = 1 << n;
  std::vector<Edge> edges;
  for (int v = 0; v < order; ++v) {
    for (int bit = 0; bit < n; ++bit) {
      const int u = v ^ (1 << bit);
      if (v < u) edges.emplace_back(v, u);
    }
  }
  return Graph::from_edge_list(order, edges);
}

Graph spider(int legs, int leg_length) {
  require(legs >= 3, "spider needs at least 3 legs");
  require(leg_length >= 1, "spider legs need length >= 1");
  std::vector<Edge> edges;
  for (int j = 0; j < legs; ++j) {
    const int first = 1 + j * leg_length;
    edges.emplace_back(0, first);
    for (int i = 0; i + 1 < leg_length; ++i) edges.emplace_back(first + i, first + i + 1);
  }
  return Graph::from_edge_list(1 + legs * leg_length, edges);
}

Graph h_graph(int s, int t, int r) {
  require(s >= 0 && t >= 0 && r >= 0, "h_graph parameters must be >= 0");
  require(s + t + r >= 1, "h_graph needs s + t + r >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) {
    edges.emplace_back(0, 1 + 2 * i);
    edges.emplace_back(1 + 2 * i, 2 + 2 * i);
  }
  const int tri = 1 + 2 * s;
  for (int i = 0; i < t; ++i) {
    edges.emplace_back(0, tri + 2 * i);
    edges.emplace_back(0, tri + 2 * i + 1);
    edges.emplace_back(tri + 2 * i, tri + 2 * i + 1);
  }
  const int pairs = tri + 2 * t;
  for (int i = 0; i < r; ++i) edges.emplace_back(pairs + 2 * i, pairs + 2 * i + 1);
  return Graph::from_edge_list(1 + 2 * s + 2 * t + 2 * r, edges);
}

Graph friendship(int n) {
  require(n >= 1, "friendship graph needs n >= 1");
  return h_graph(0, n, 0);
}

Graph corona_k1(const Graph& g) { return corona(g, complete(1)); }
Graph corona_k2(const Graph& g) { return corona(g, complete(2)); }

Graph random_connected(int n, std::uint64_t seed, bool tree_only) {
  require(n >= 1, "random connected graph needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  std::vector<char> present(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto at = [n](int u, int v) { return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v); };
  for (int i = 1; i < n; ++i) {
    const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
    edges.emplace_back(j, i);
    present[at(j, i)] = 1;
  }
  if (!tree_only) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!present[at(u, v)] && rng.below(3) == 0) edges.emplace_back(u, v);
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph gadget_family(const GadgetFamilySpec& spec) {
  const int n = spec.base_length;
  require(spec.base == BaseKind::cycle ? n >= 3 : n >= 1,
          spec.base == BaseKind::cycle ? "cycle base needs length >= 3" : "path base needs length >= 1");
  require(spec.attachments.empty() || static_cast<int>(spec.attachments.size()) == n,
          "gadget attachments must list every base vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (spec.base == BaseKind::cycle) edges.emplace_back(n - 1, 0);
  int next = n;
  for (std::size_t v = 0; v < spec.attachments.size(); ++v) {
    for (GadgetKind kind : spec.attachments[v]) {
      const int a = next++;
      const int b = next++;
      edges.emplace_back(static_cast<int>(v), a);
      edges.emplace_back(a, b);
      if (kind == GadgetKind::double_edge) edges.emplace_back(static_cast<int>(v), b);
    }
  }
  return Graph::from_edge_list(next, edges);
}

GadgetFamilySpec random_gadget_spec(BaseKind base, int base_length, std::uint64_t seed, int max_per_vertex,
                                    bool allow_single) {
  require(base_length >= 1, "gadget base needs length >= 1");
  require(max_per_vertex >= 0, "max gadgets per vertex must be >= 0");
  SplitMix64 rng(seed);
  GadgetFamilySpec spec{base, base_length, std::vector<std::vector<GadgetKind>>(static_cast<std::size_t>(base_length))};
  for (auto& slot : spec.attachments) {
    const auto count = rng.below(static_cast<std::uint64_t>(max_per_vertex) + 1);
    for (std::uint64_t i = 0; i < count; ++i) {
      const bool single = allow_single && rng.below(2) == 0;
      slot.push_back(single ? GadgetKind::single_edge : GadgetKind::double_edge);
    }
  }
  return spec;
}

VertexSet paired_blue_witness(BaseKind base, int base_length, int spacing) {
  const int n = base_length;
  require(base == BaseKind::cycle ? n >= 3 : n >= 2, "base too short for paired witness");
  require(spacing >= 1, "spacing must be >= 1");
  require(spacing <= n, "spacing exceeds base length");
  VertexSet out;
  if (base == BaseKind::cycle) {
    for (int i = 0; i < n; i += spacing) {
      out.push_back(i);
      out.push_back((i + 1) % n);
    }
  } else {
    for (int i = 0; i + 1 < n; i += spacing) {
      out.push_back(i);
      out.push_back(i + 1);
    }
    out.push_back(n - 2);
    out.push_back(n - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Closed forms --------------------------------------------------------------

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (static_cast<unsigned __int128>(r) * r > x) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::int64_t ceil_sqrt_minus_halves(std::uint64_t x, int half_units) {
  // Least t with 2t + h >= 2 sqrt(x), i.e. 2t + h >= m where m = ceil(sqrt(4x)).
  const std::uint64_t four_x = 4 * x;
  std::uint64_t m = isqrt(four_x);
  if (m * m < four_x) ++m;
  return ceil_div(static_cast<std::int64_t>(m) - half_units, 2);
}

int th_path_formula(int n) {
  require(n >= 3, "path formula needs n >= 3");
  return static_cast<int>(ceil_sqrt_minus_halves(2 * static_cast<std::uint64_t>(n + 1), 3));
}

int th_cycle_formula(int n) {
  require(n >= 3, "cycle formula needs n >= 3");
  return static_cast<int>(ceil_sqrt_minus_halves(2 * static_cast<std::uint64_t>(n), 1));
}

int th_spider_formula(int legs, int leg_length) {
  require(leg_length >= 2, "spider formula needs leg length >= 2");
  require(2 * legs > leg_length + 2, "spider formula needs p > l/2 + 1");
  if (leg_length % 2 == 0) return 1 + leg_length / 2;
  if (leg_length % 4 == 1) return 1 + legs + (leg_length - 1) / 4;
  return 1 + legs + (leg_length + 1) / 4;
}

std::int64_t th_hypercube_formula(int n) {
  require(n >= 2 && n <= 62, "hypercube formula needs 2 <= n <= 62");
  return (std::int64_t{1} << (n - 1)) + 1;
}

bool Surd::at_most(std::int64_t x) const {
  const __int128 rhs = static_cast<__int128>(x) * den;
  if (rhs < 0) return false;
  return static_cast<__int128>(num) * num * radicand <= rhs * rhs;
}

bool Surd::at_least(std::int64_t x) const {
  const __int128 rhs = static_cast<__int128>(x) * den;
  if (rhs <= 0) return true;
  return static_cast<__int128>(num) * num * radicand >= rhs * rhs;
}

double Surd::approx() const {
  return static_cast<double>(num) / static_cast<double>(den) * std::sqrt(static_cast<double>(radicand));
}

SpiderFBound spider_f_bound(int legs, int leg_length) {
  require(legs >= 2 && leg_length >= 2, "spider f bound needs p, l >= 2");
  const std::int64_t p = legs;
  const std::int64_t l = leg_length;
  Surd f;
  // l <= sqrt(pl) and p >= sqrt(pl) both reduce to l <= p.
  if (l <= p) {
    f = {l % 2 == 0 ? l : p, 1, 1};
  } else {
    const auto root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(p * l)));
    f = root * root == p * l ? Surd{root, 1, 1} : Surd{1, 1, p * l};
  }
  return {f, Surd{f.num, f.den * 2, f.radicand}, Surd{3 * f.num, f.den, f.radicand}};
}

bool diameter_bound_holds(std::int64_t th, std::int64_t d) {
  require(d >= 4, "diameter bound needs d >= 4");
  const __int128 lhs = 4 * static_cast<__int128>(th) + 1;
  return lhs >= 0 && lhs * lhs >= 16 * static_cast<__int128>(d);
}

std::int64_t min_throttling_for_diameter(std::int64_t d) {
  std::int64_t th = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(d)));
  while (th > 0 && diameter_bound_holds(th - 1, d)) --th;
  while (!diameter_bound_holds(th, d)) ++th;
  return th;
}

// FamilySpec ----------------------------------------------------------------

namespace {

struct FamilyEntry {
  Family family;
  std::string_view name;
};

constexpr std::array kFamilies{
    FamilyEntry{Family::path, "path"},
    FamilyEntry{Family::cycle, "cycle"},
    FamilyEntry{Family::complete, "complete"},
    FamilyEntry{Family::star, "star"},
    FamilyEntry{Family::complete_multipartite, "complete_multipartite"},
    FamilyEntry{Family::hypercube, "hypercube"},
    FamilyEntry{Family::spider, "spider"},
    FamilyEntry{Family::friendship, "friendship"},
    FamilyEntry{Family::h_graph, "h"},
    FamilyEntry{Family::empty, "empty"},
    FamilyEntry{Family::matching, "matching"},
    FamilyEntry{Family::corona, "corona"},
    FamilyEntry{Family::gadget, "gadget"},
};

void expect_params(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
  const auto n = spec.params.size();
  if (n < lo || n > hi) {
    throw GraphError(std::string(family_name(spec.family)) + " expects " + std::to_string(lo) +
                     (lo == hi ? "" : ".." + std::to_string(hi)) + " parameters, got " + std::to_string(n));
  }
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& e : kFamilies) {
    if (e.family == f) return e.name;
  }
  return "unknown";
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  FamilySpec spec;
  bool known = false;
  for (const auto& e : kFamilies) {
    if (e.name == name) {
      spec.family = e.family;
      known = true;
    }
  }
  if (name == "multipartite") {
    spec.family = Family::complete_multipartite;
    known = true;
  } else if (name == "h_graph") {
    spec.family = Family::h_graph;
    known = true;
  }
  if (!known) throw GraphError("unknown family '" + std::string(name) + "'");

  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        throw GraphError("bad family parameter '" + std::string(item) + "' in '" + std::string(text) + "'");
      }
      spec.params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  build(spec);  // validates parameters
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out(family_name(spec.family));
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    out += i == 0 ? ':' : ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

Graph build(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path: expect_params(spec, 1, 1); return path(p[0]);
    case Family::cycle: expect_params(spec, 1, 1); return cycle(p[0]);
    case Family::complete: expect_params(spec, 1, 1); return complete(p[0]);
    case Family::star: expect_params(spec, 1, 1); return star(p[0]);
    case Family::complete_multipartite: expect_params(spec, 1, 64); return complete_multipartite(p);
    case Family::hypercube: expect_params(spec, 1, 1); return hypercube(p[0]);
    case Family::spider: expect_params(spec, 2, 2); return spider(p[0], p[1]);
    case Family::friendship: expect_params(spec, 1, 1); return friendship(p[0]);
    case Family::h_graph: expect_params(spec, 3, 3); return h_graph(p[0], p[1], p[2]);
    case Family::empty: expect_params(spec, 1, 1); return empty_graph(p[0]);
    case Family::matching: expect_params(spec, 1, 1); return matching(p[0]);
    case Family::corona: {
      expect_params(spec, 3, 4);
      require(p[0] >= 1 && p[1] >= 0 && p[2] >= 1, "corona expects order >= 1, seed >= 0, m >= 1");
      const bool tree_only = p.size() > 3 && p[3] != 0;
      return corona(random_connected(p[0], static_cast<std::uint64_t>(p[1]), tree_only), complete(p[2]));
    }
    case Family::gadget: {
      expect_params(spec, 3, 5);
      require(p[0] == 0 || p[0] == 1, "gadget base must be 0 (path) or 1 (cycle)");
      require(p[2] >= 0, "gadget seed must be >= 0");
      const int max_per_vertex = p.size() > 3 ? p[3] : 1;
      const bool allow_single = p.size() > 4 && p[4] != 0;
      return gadget_family(random_gadget_spec(p[0] == 1 ? BaseKind::cycle : BaseKind::path, p[1],
                                              static_cast<std::uint64_t>(p[2]), max_per_vertex, allow_single));
    }
  }
  throw GraphError("unknown family");
}

std::string labeling_note(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path: return "path 0-1-...-(n-1)";
    case Family::cycle: return "cycle 0-1-...-(n-1)-0";
    case Family::complete: return "complete graph on 0..n-1";
    case Family::star: return "center 0, leaves 1..p";
    case Family::complete_multipartite: return "parts occupy consecutive id ranges in the given order";
    case Family::hypercube: return "vertex ids are bit strings, edges at Hamming distance 1";
    case Family::spider: return "center 0, leg j is 1+j*l..(j+1)*l outward";
    case Family::friendship: return "hub 0, triangle i is (1+2i, 2+2i)";
    case Family::h_graph: return "b=0, pendant paths (x_i,y_i), then triangles (z_i,w_i), then matching edges";
    case Family::empty: return "isolated vertices 0..n-1";
    case Family::matching: return "edges (2i, 2i+1)";
    case Family::corona: return "random connected base (order, seed[, tree]) on 0..order-1, then K_m copies in base order";
    case Family::gadget: return "base 0..n-1 in order, then gadget pairs (a,b) by base vertex; a~v, b~v if double";
  }
  return "";
}

}  // namespace szf
