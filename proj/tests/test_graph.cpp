#include "doctest.h"

#include "equicolor/error.hpp"
#include "equicolor/generators.hpp"
#include "equicolor/graph.hpp"

#include <random>

using namespace equicolor;

TEST_CASE("load_graph parses DIMACS") {
  Graph g = load_graph_text("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 2));

  Graph dup = load_graph_text("p edge 2 2\ne 1 2\ne 2 1\n");
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("load_graph rejects bad input") {
  try {
    load_graph_text("p edge 2 1\ne 1 1\n");
    FAIL("expected InvalidEdge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidEdge);
  }
  try {
    load_graph_text("p edge 3 1\ne 1\n");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(load_graph_text("e 1 2\n"), Error);
  CHECK_THROWS_AS(load_graph_text("p edge 2 1\ne 1 5\n"), Error);
}

TEST_CASE("dimacs round trip") {
  Graph g = theta_graph(5, 5, 5);
  Graph h = load_graph_text(to_dimacs(g));
  CHECK(h == g);
  Graph c14 = load_graph_text(to_dimacs(cycle_graph(14)));
  CHECK(c14.edge_count() == 14);
  CHECK(c14.min_degree() == 2);
  CHECK(c14.max_degree() == 2);
}

TEST_CASE("delete_vertices") {
  Graph c6 = cycle_graph(6);
  std::vector<VertexId> s{0, 1};
  Graph p4 = delete_vertices(c6, s);
  CHECK(c6.vertex_count() == 6);
  CHECK(p4.vertex_count() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.has_vertex(2));
  CHECK_FALSE(p4.has_vertex(0));

  CHECK(delete_vertices(c6, std::vector<VertexId>{}) == c6);

  Graph th = theta_graph(5, 5, 5);
  std::vector<VertexId> interior{2, 3, 4, 5};
  Graph c10 = delete_vertices(th, interior);
  CHECK(c10.vertex_count() == 10);
  CHECK(girth(c10) == 10);
  CHECK(c10.max_degree() == 2);

  std::vector<VertexId> bad{99};
  try {
    delete_vertices(c6, bad);
    FAIL("expected UnknownVertex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVertex);
  }
}

TEST_CASE("components") {
  Graph g(12);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  for (int i = 0; i < 7; ++i) g.add_edge(5 + i, 5 + (i + 1) % 7);
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 5);
  CHECK(comps[1].size() == 7);
  CHECK(components(Graph()).empty());
  CHECK(components(theta_graph(5, 5, 5)).size() == 1);
}

TEST_CASE("girth") {
  CHECK(girth(cycle_graph(14)) == 14);
  CHECK(girth(theta_graph(5, 5, 5)) == 10);
  CHECK(girth(petersen_graph()) == 5);
  CHECK(girth(complete_graph(4)) == 3);
  Graph tree(4);
  tree.add_edge(0, 1);
  tree.add_edge(1, 2);
  tree.add_edge(1, 3);
  CHECK_FALSE(girth(tree).has_value());
  CHECK_FALSE(girth_serial(tree).has_value());
}

TEST_CASE("girth agrees with serial and edge-based references") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 20);
    Graph g(n);
    const int m = n + static_cast<int>(rng() % (2 * n));
    for (int i = 0; i < m; ++i) {
      VertexId u = static_cast<VertexId>(rng() % n), v = static_cast<VertexId>(rng() % n);
      if (u != v) g.add_edge(u, v);
    }
    CHECK(girth(g) == girth_serial(g));
    CHECK(girth(g) == girth_by_edges(g));
  }
}

TEST_CASE("mad_exact") {
  CHECK(mad_exact(cycle_graph(9)) == Rational(2));
  CHECK(mad_exact(complete_graph(4)) == Rational(3));
  CHECK(mad_exact(subdivide_uniform(complete_graph(4), 1)) == Rational(12, 5));
  CHECK_THROWS_AS(mad_exact(Graph()), Error);
  Graph g = complete_graph(4);
  VertexId a = g.add_vertex(), b = g.add_vertex();
  g.add_edge(0, a);
  g.add_edge(a, b);
  auto d = densest_subgraph(g);
  CHECK(d.density == Rational(3));
  CHECK(d.vertices == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("mad_exact matches exhaustive enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 17);
    Graph g(n);
    const int m = static_cast<int>(rng() % (2 * n + 1));
    for (int i = 0; i < m; ++i) {
      VertexId u = static_cast<VertexId>(rng() % n), v = static_cast<VertexId>(rng() % n);
      if (u != v) g.add_edge(u, v);
    }
    const Rational mad = mad_exact(g);
    CHECK(mad == mad_bruteforce(g));
    CHECK(mad >= Rational(2 * static_cast<std::int64_t>(g.edge_count()), n));
    std::vector<VertexId> drop{static_cast<VertexId>(rng() % n)};
    Graph h = delete_vertices(g, drop);
    CHECK(mad_exact(h) <= mad);
  }
}
