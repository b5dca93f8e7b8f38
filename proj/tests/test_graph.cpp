#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "szf/families.hpp"
#include "szf/graph.hpp"

using namespace szf;

TEST_CASE("construction normalizes and validates") {
  const Graph g = Graph::from_edge_list(4, {{2, 1}, {0, 1}, {1, 2}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK(g.degree(1) == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edge_list(-1, {}), GraphError);
  CHECK(Graph::from_edge_list(0, {}).empty());
}

TEST_CASE("operations") {
  const Graph p3 = path(3);
  const Graph k2 = complete(2);

  const Graph u = disjoint_union(p3, k2);
  CHECK(u.order() == 5);
  CHECK(u.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}});

  const Graph j = join(complete(1), empty_graph(3));
  CHECK(oracle::isomorphic(j, star(3)));

  CHECK(complement(complete(4)).size() == 0);
  CHECK(oracle::isomorphic(complement(path(4)), path(4)));

  // Corona P3∘K1 is P3 with a pendant leaf at each vertex.
  const Graph c = corona(p3, complete(1));
  CHECK(c.order() == 6);
  CHECK(c.adjacent(0, 3));
  CHECK(c.adjacent(2, 5));
  CHECK(leaves(c) == VertexSet{3, 4, 5});

  const std::vector<Vertex> keep{4, 1, 2};
  const Graph sub = induced_subgraph(u, keep);
  CHECK(sub.order() == 3);
  CHECK(sub.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("connectivity and distances") {
  const Graph g = disjoint_union(path(4), complete(2));
  CHECK(components(g) == std::vector<VertexSet>{{0, 1, 2, 3}, {4, 5}});
  CHECK_FALSE(is_connected(g));
  CHECK(distance(g, 0, 3) == 3);
  CHECK_FALSE(distance(g, 0, 4).has_value());
  CHECK_FALSE(diameter(g).has_value());
  CHECK(diameter(cycle(9)) == 4);
  CHECK(diameter(complete(1)) == 0);
  CHECK_THROWS(diameter(Graph{}));
  CHECK(ball(path(7), 3, 2) == VertexSet{1, 2, 3, 4, 5});
  CHECK(min_degree(cycle(5)) == 2);
  CHECK(min_degree(Graph{}) == 0);
}

TEST_CASE("ball agrees with the oracle on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 9, 0.3);
    const auto adj = oracle::adjacency(g);
    for (int v = 0; v < g.order(); ++v) {
      for (int r = 0; r <= 3; ++r) CHECK(oracle::mask_of(ball(g, v, r)) == oracle::ball(adj, v, r));
    }
  }
}

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(complete(1)) == "@");
  CHECK(to_graph6(Graph{}) == "?");
  CHECK(to_graph6(cycle(4)) == "Cl");
  CHECK(to_graph6(complete(4)) == "C~");
  CHECK(from_graph6(">>graph6<<Cl\n") == cycle(4));
  CHECK(from_graph6("@") == complete(1));
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("C"), ParseError);      // truncated
  CHECK_THROWS_AS(from_graph6("Cl?"), ParseError);    // trailing data
  CHECK_THROWS_AS(from_graph6("C\x01"), ParseError);  // invalid byte
}

TEST_CASE("graph6 round trip on 1000 random graphs") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> order(0, 70);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = oracle::random_graph(rng, order(rng), density(rng));
    REQUIRE(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("edge list round trip and errors") {
  const Graph g = spider(3, 2);
  std::stringstream buf;
  write_edge_list(buf, g);
  CHECK(read_edge_list(buf) == g);

  std::istringstream commented("# comment\n3 2\n0 1\n# inner\n1 2\n");
  CHECK(read_edge_list(commented) == path(3));

  std::istringstream short_list("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(short_list), ParseError);
  std::istringstream bad_vertex("2 1\n0 5\n");
  CHECK_THROWS(read_edge_list(bad_vertex));
  std::istringstream junk("x y\n");
  CHECK_THROWS_AS(read_edge_list(junk), ParseError);
}

TEST_CASE("vertex set formatting") {
  CHECK(to_string(VertexSet{}) == "{}");
  CHECK(to_string(VertexSet{0, 3}) == "{0,3}");
}
