#include "szf/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace szf {

Graph::Graph(std::vector<std::vector<Vertex>> adj) : adj_(std::move(adj)) {
  std::size_t degree_sum = 0;
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += nbrs.size();
  }
  edge_count_ = degree_sum / 2;
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n));
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return Graph(std::move(adj));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int offset = g1.order();
  auto edges = g1.edges();
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph::from_edge_list(g1.order() + g2.order(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int offset = g1.order();
  auto edges = disjoint_union(g1, g2).edges();
  for (Vertex u = 0; u < g1.order(); ++u) {
    for (Vertex v = 0; v < g2.order(); ++v) edges.emplace_back(u, v + offset);
  }
  return Graph::from_edge_list(g1.order() + g2.order(), edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edge_list(g.order(), edges);
}

Graph corona(const Graph& g, const Graph& h) {
  const int n = g.order();
  const int m = h.order();
  auto edges = g.edges();
  const auto h_edges = h.edges();
  for (Vertex i = 0; i < n; ++i) {
    const int base = n + i * m;
    for (auto [u, v] : h_edges) edges.emplace_back(base + u, base + v);
    for (Vertex x = 0; x < m; ++x) edges.emplace_back(i, base + x);
  }
  return Graph::from_edge_list(n + n * m, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  VertexSet sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!g.contains(sorted[i])) {
      throw GraphError("vertex " + std::to_string(sorted[i]) + " out of range");
    }
    index[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : sorted) {
    for (Vertex v : g.neighbors(u)) {
      const int iu = index[static_cast<std::size_t>(u)];
      const int iv = index[static_cast<std::size_t>(v)];
      if (iv >= 0 && iu < iv) edges.emplace_back(iu, iv);
    }
  }
  return Graph::from_edge_list(static_cast<int>(sorted.size()), edges);
}

std::vector<std::optional<int>> distances_from(const Graph& g, Vertex source) {
  if (!g.contains(source)) throw GraphError("vertex " + std::to_string(source) + " out of range");
  std::vector<std::optional<int>> dist(static_cast<std::size_t>(g.order()));
  std::queue<Vertex> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : g.neighbors(u)) {
      auto& dv = dist[static_cast<std::size_t>(v)];
      if (!dv) {
        dv = *dist[static_cast<std::size_t>(u)] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex v : g.neighbors(comp[i])) {
        if (!seen[static_cast<std::size_t>(v)]) {
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

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return distances_from(g, u)[static_cast<std::size_t>(v)];
}

std::optional<int> diameter(const Graph& g) {
  if (g.empty()) throw GraphError("diameter of the empty graph");
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (const auto& d : distances_from(g, s)) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

int min_degree(const Graph& g) {
  if (g.empty()) return 0;
  int best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

VertexSet ball(const Graph& g, Vertex v, int radius) {
  if (radius < 0) throw GraphError("negative ball radius");
  VertexSet out;
  const auto dist = distances_from(g, v);
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto& d = dist[static_cast<std::size_t>(u)];
    if (d && *d <= radius) out.push_back(u);
  }
  return out;
}

// graph6 ------------------------------------------------------------------

namespace {

constexpr int kGraph6Offset = 63;
constexpr int kGraph6MaxOrder = 258047;
constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw GraphError("graph6 encoder supports n <= 258047");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kGraph6Offset));
    }
  }
  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kGraph6Offset));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kGraph6Offset));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw ParseError("graph6: invalid character code " +
                       std::to_string(static_cast<int>(static_cast<unsigned char>(c))));
    }
  }
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw ParseError("graph6: truncated input");
    return text[pos++] - kGraph6Offset;
  };
  int n = next();
  if (n == 63) {
    if (text.size() > 1 && text[1] == '~') throw ParseError("graph6: orders above 258047 unsupported");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | next();
  }
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) < need) throw ParseError("graph6: truncated bit stream");
  if (static_cast<long long>(text.size() - pos) > need) throw ParseError("graph6: trailing data");

  std::vector<Edge> edges;
  int group = 0;
  int left = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (left == 0) {
        group = next();
        left = 6;
      }
      --left;
      if ((group >> left) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(n, edges);
}

// Edge list ---------------------------------------------------------------

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("edge list: missing header line");

  auto parse_pair = [](const std::string& text, long long& a, long long& b) {
    std::istringstream ss(text);
    std::string extra;
    if (!(ss >> a >> b) || (ss >> extra)) throw ParseError("edge list: malformed line '" + text + "'");
  };
  long long n = 0;
  long long m = 0;
  parse_pair(lines[0], n, m);
  if (n < 0 || m < 0 || n > kGraph6MaxOrder) throw ParseError("edge list: bad header '" + lines[0] + "'");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("edge list: header promises " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    long long u = 0;
    long long v = 0;
    parse_pair(lines[i], u, v);
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("edge list: invalid edge '" + lines[i] + "'");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace szf
