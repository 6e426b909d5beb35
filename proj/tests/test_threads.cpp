#include "doctest.h"

#include "equicolor/error.hpp"
#include "equicolor/generators.hpp"
#include "equicolor/threads.hpp"

#include <algorithm>
#include <set>

using namespace equicolor;

namespace {

// Branch vertex 0 with a pendant cycle of `len` edges and two extra
// paths to a second branch vertex.
Graph lollipop_host(int len) {
  Graph g(2);
  VertexId prev = 0;
  for (int i = 1; i < len; ++i) {
    VertexId w = g.add_vertex();
    g.add_edge(prev, w);
    prev = w;
  }
  g.add_edge(prev, 0);
  for (int k = 0; k < 2; ++k) {
    VertexId a = g.add_vertex(), b = g.add_vertex();
    g.add_edge(0, a);
    g.add_edge(a, b);
    g.add_edge(b, 1);
  }
  g.add_edge(0, 1);
  return g;
}

// Branch vertex 0 with threads of the given lengths, each ending in its own
// branch vertex (degree 3, closed by a shared triangle-free skeleton is not
// needed for these structural checks).
Graph star_host(const std::vector<int>& lengths) {
  Graph g(1);
  for (int len : lengths) {
    VertexId prev = 0;
    for (int i = 0; i < len; ++i) {
      VertexId w = g.add_vertex();
      g.add_edge(prev, w);
      prev = w;
    }
    VertexId end = g.add_vertex();
    g.add_edge(prev, end);
    // give `end` degree 3 with a private 9-cycle
    VertexId p = end;
    for (int i = 0; i < 8; ++i) {
      VertexId w = g.add_vertex();
      g.add_edge(p, w);
      p = w;
    }
    g.add_edge(p, end);
  }
  return g;
}

}  // namespace

TEST_CASE("decompose theta and K4") {
  auto th = decompose(theta_graph(5, 5, 5));
  REQUIRE(th.size() == 3);
  for (const auto& t : th) {
    CHECK(t.length() == 4);
    CHECK(std::set<VertexId>{t.a, t.b} == std::set<VertexId>{0, 1});
  }
  auto k4 = decompose(complete_graph(4));
  CHECK(k4.size() == 6);
  for (const auto& t : k4) CHECK(t.length() == 0);
}

TEST_CASE("decompose reports thread-cycles and pure cycles") {
  Graph g = lollipop_host(9);
  auto th = decompose(g);
  int cycles = 0;
  for (const auto& t : th)
    if (t.is_cycle()) {
      ++cycles;
      CHECK(t.a == 0);
      CHECK(t.length() == 8);
    }
  CHECK(cycles == 1);
  auto p = ThreadIndex(g).profile(0);
  CHECK(p.has_thread_cycle);
  CHECK(p.degree() == g.degree(0));

  try {
    decompose(cycle_graph(14));
    FAIL("expected PureCycleComponent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PureCycleComponent);
  }
}

TEST_CASE("thread interiors partition the 2-vertices") {
  Graph g = subdivide(petersen_graph(), {0, 1, 2, 3, 0, 1, 2, 3, 4, 0, 1, 2, 3, 4, 5});
  ThreadIndex idx(g);
  std::multiset<VertexId> seen;
  for (const auto& t : idx.threads()) seen.insert(t.interior.begin(), t.interior.end());
  int twos = 0;
  for (VertexId v : g.vertices())
    if (g.degree(v) == 2) {
      ++twos;
      CHECK(seen.count(v) == 1);
    }
  CHECK(static_cast<int>(seen.size()) == twos);
  int incidences = 0;
  for (VertexId x : idx.branch_vertices()) {
    auto p = idx.profile(x);
    incidences += p.degree();
    int direct = 0;
    for (int l = 0; l < 12; ++l)
      for (VertexId w : loosely_adjacent(g, x, l)) direct += g.degree(w) == 2;
    CHECK(p.t == direct);
  }
  CHECK(incidences == 2 * static_cast<int>(idx.threads().size()));
}

TEST_CASE("profile") {
  Graph th = theta_graph(5, 5, 5);
  auto p = profile(th, 0);
  CHECK(p.a(4) == 3);
  CHECK(p.t == 12);
  CHECK_THROWS_AS(profile(th, 2), Error);

  Graph bad4 = star_host({2, 1, 1});
  auto q = profile(bad4, 0);
  CHECK(q.a(2) == 1);
  CHECK(q.a(1) == 2);
  CHECK(q.a(0) == 0);
  CHECK(q.t == 4);

  Graph bad3 = star_host({4, 1, 1});
  auto r = profile(bad3, 0);
  CHECK(r.a(4) == 1);
  CHECK(r.a(1) == 2);
  CHECK(r.t == 6);
}

TEST_CASE("loosely_adjacent") {
  Graph g = star_host({1, 0, 0});
  VertexId w = 1, y = 2;
  CHECK(loosely_adjacent(g, 0, 0) == std::vector<VertexId>{1, 11, 20});
  auto l1 = loosely_adjacent(g, 0, 1);
  CHECK(std::find(l1.begin(), l1.end(), y) != l1.end());
  CHECK(loosely_adjacent(g, w, 0) == std::vector<VertexId>{0, 2});

  Graph th = theta_graph(5, 5, 5);
  auto near_v = loosely_adjacent(th, 0, 3);
  CHECK(near_v.size() == 3);
  for (VertexId x : near_v) CHECK(th.has_edge(x, 1));
  CHECK(loosely_adjacent(complete_graph(4), 0, 1).empty());
}

TEST_CASE("star_subgraph") {
  Graph g = star_host({4, 2, 2});
  auto s = star_subgraph(g, 0);
  CHECK(s.graph.vertex_count() == 9);
  CHECK(s.boundary.size() == 3);

  Graph th = theta_graph(5, 5, 5);
  auto t = star_subgraph(th, 0);
  CHECK(t.graph.vertex_count() == 13);
  CHECK(t.boundary.size() == 3);
  for (auto [in, out] : t.boundary) CHECK(out == 1);

  auto k = star_subgraph(star_host({0, 0, 0}), 0);
  CHECK(k.graph.vertex_count() == 1);
  CHECK(k.boundary.size() == 3);

  CHECK_THROWS_AS(star_subgraph(lollipop_host(9), 0), Error);
}

TEST_CASE("pair_subgraph") {
  // x -w- y; x has a 4-thread to A and a 1-thread to B; y has a 2-thread to
  // A and a 1-thread to B; A and B are adjacent.
  Graph g(5);
  const VertexId x = 0, y = 1, a = 2, b = 3, w = 4;
  g.add_edge(x, w);
  g.add_edge(w, y);
  auto path = [&](VertexId from, VertexId to, int len) {
    VertexId prev = from;
    for (int i = 0; i < len; ++i) {
      VertexId v = g.add_vertex();
      g.add_edge(prev, v);
      prev = v;
    }
    g.add_edge(prev, to);
  };
  path(x, a, 4);
  path(x, b, 1);
  path(y, a, 2);
  path(y, b, 1);
  g.add_edge(a, b);
  auto p = pair_subgraph(g, x, y);
  CHECK(p.graph.vertex_count() == 11);
  CHECK(p.graph.has_vertex(w));
  CHECK_FALSE(p.graph.has_vertex(a));
  CHECK(p.roots == std::vector<VertexId>{x, y});
  CHECK(p.boundary.size() == 4);
  for (auto [in, out] : p.boundary) CHECK((out == a || out == b));

  auto s = star_subgraph(g, x);
  CHECK(s.graph.vertex_count() == 7);

  try {
    pair_subgraph(g, x, a);
    FAIL("expected NotOneThreadPair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotOneThreadPair);
  }
}
