#include "equicolor/error.hpp"
#include "equicolor/generators.hpp"
#include "equicolor/solver.hpp"

namespace equicolor {

namespace {

struct Edge {
  VertexId a, b;
  int q;
};

Graph from_spec(VertexId n0, std::initializer_list<Edge> spec) {
  Graph base(n0);
  for (const Edge& e : spec) base.add_edge(e.a, e.b);
  std::vector<int> q;
  for (auto [a, b] : base.edges())
    for (const Edge& e : spec)
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) q.push_back(e.q);
  return subdivide(base, q);
}

void hang_cycle(Graph& g, VertexId at, int interior) {
  VertexId prev = at;
  for (int i = 0; i < interior; ++i) {
    const VertexId w = g.add_vertex();
    g.add_edge(prev, w);
    prev = w;
  }
  g.add_edge(prev, at);
}

void join(Graph& g, VertexId a, VertexId b, int interior) {
  VertexId prev = a;
  for (int i = 0; i < interior; ++i) {
    const VertexId w = g.add_vertex();
    g.add_edge(prev, w);
    prev = w;
  }
  g.add_edge(prev, b);
}

// Two branch vertices, each closing a 10-cycle on itself, joined by a thread.
Graph dumbbell(int link) {
  Graph g(2);
  hang_cycle(g, 0, 9);
  hang_cycle(g, 1, 9);
  join(g, 0, 1, link);
  return g;
}

// Two 4-vertices joined by a 4-thread and a 5-thread, each closing a 10-cycle.
Graph double_loop() {
  Graph g(2);
  hang_cycle(g, 0, 9);
  join(g, 0, 1, 4);
  join(g, 0, 1, 5);
  hang_cycle(g, 1, 9);
  return g;
}

Graph all_bad_petersen() {
  const Graph p = petersen_graph();
  std::vector<int> q;
  for (auto [a, b] : p.edges()) q.push_back(b - a == 5 ? 2 : 1);
  return subdivide(p, q);
}

}  // namespace

std::vector<Gadget> gadget_catalog() {
  using K = ConfigKind;
  std::vector<Gadget> c;
  c.push_back({"long-thread", K::LongThread, "open", 4, theta_graph(5, 5, 5),
               "theta(5,5,5): three 4-threads between two 3-vertices"});
  c.push_back({"long-thread-closed", K::LongThread, "closed", 4, double_loop(),
               "two 4-vertices, each on a 9-thread closing back on itself"});
  c.push_back({"equal-endpoint-anchor", K::EqualEndpointThread, "anchor", 4, dumbbell(0),
               "3-vertex on a thread-cycle whose third neighbour is a branch vertex"});
  c.push_back({"equal-endpoint-via-thread", K::EqualEndpointThread, "via-thread", 4, dumbbell(1),
               "3-vertex on a thread-cycle whose third neighbour is a 2-vertex"});
  c.push_back({"four-vertex-three-2-threads", K::FourVertexOverload, "three-2-threads", 4,
               from_spec(9, {{0, 1, 2}, {0, 2, 2}, {0, 3, 2}, {0, 8, 2}, {1, 4, 2}, {1, 6, 1}, {2, 6, 2},
                             {2, 7, 2}, {3, 4, 0}, {3, 5, 1}, {4, 8, 2}, {5, 6, 1}, {5, 7, 2}, {7, 8, 0}}),
               "4-vertex with four 2-threads, t = 8"});
  c.push_back({"four-vertex-three-2-threads-0", K::FourVertexOverload, "three-2-threads-0", 4,
               from_spec(9, {{0, 2, 0}, {0, 3, 2}, {0, 4, 2}, {0, 5, 2}, {1, 5, 1}, {1, 6, 2}, {1, 7, 1},
                             {2, 6, 2}, {2, 7, 2}, {3, 7, 2}, {3, 8, 2}, {4, 6, 2}, {4, 8, 1}, {5, 8, 1}}),
               "4-vertex with T = (3,0,1), t = 6"});
  c.push_back({"four-vertex-two-2-threads", K::FourVertexOverload, "two-2-threads", 4,
               from_spec(9, {{0, 2, 1}, {0, 5, 2}, {0, 6, 1}, {0, 8, 2}, {1, 3, 0}, {1, 6, 2}, {1, 8, 1},
                             {2, 3, 2}, {2, 7, 2}, {3, 5, 2}, {4, 5, 2}, {4, 6, 1}, {4, 7, 0}, {7, 8, 1}}),
               "4-vertex with T = (2,2,0), t = 6"});
  c.push_back({"three-vertex-heavy", K::ThreeVertexOverload, "heavy", 4,
               from_spec(6, {{0, 3, 1}, {0, 4, 1}, {0, 5, 2}, {1, 3, 2}, {1, 4, 2}, {1, 5, 1}, {2, 3, 2},
                             {2, 4, 2}, {2, 5, 1}}),
               "3-vertex with T = (3,0,0), t = 6"});
  c.push_back({"three-vertex-three-1-threads", K::ThreeVertexOverload, "three-1-threads", 4,
               from_spec(6, {{0, 2, 1}, {0, 3, 1}, {0, 5, 1}, {1, 2, 2}, {1, 3, 2}, {1, 5, 2}, {2, 4, 2},
                             {3, 4, 2}, {4, 5, 2}}),
               "3-vertex with T = (0,3,0)"});
  c.push_back({"three-vertex-three-1-threads-m5", K::ThreeVertexOverload, "three-1-threads", 5,
               subdivide_uniform(petersen_graph(), 1), "Petersen graph with every edge subdivided once"});
  c.push_back({"three-vertex-zero-thread", K::ThreeVertexOverload, "zero-thread", 4,
               from_spec(6, {{0, 1, 0}, {0, 4, 2}, {0, 5, 2}, {1, 2, 2}, {1, 3, 2}, {2, 4, 2}, {2, 5, 2},
                             {3, 4, 2}, {3, 5, 2}}),
               "3-vertex with T = (2,0,1)"});
  c.push_back({"three-vertex-bad-m5", K::ThreeVertexOverload, "bad-m5", 5,
               from_spec(6, {{0, 1, 1}, {0, 2, 2}, {0, 4, 1}, {1, 3, 2}, {1, 5, 2}, {2, 3, 2}, {2, 5, 2},
                             {3, 4, 2}, {4, 5, 2}}),
               "3-vertex with T = (1,2,0) under m = 5"});
  c.push_back({"bad-neighborhood-one", K::BadNeighborhood, "one", 4, all_bad_petersen(),
               "Petersen graph, cycles subdivided once and spokes twice: every 3-vertex is bad"});
  c.push_back({"bad-neighborhood-two-k0", K::BadNeighborhood, "two-k0", 4,
               from_spec(11, {{0, 1, 2}, {0, 2, 1}, {0, 3, 0}, {0, 4, 1}, {1, 5, 1}, {1, 10, 1}, {2, 6, 1},
                              {2, 10, 2}, {3, 8, 1}, {3, 9, 1}, {4, 5, 2}, {4, 7, 1}, {5, 9, 1}, {6, 7, 1},
                              {6, 8, 2}, {7, 9, 2}, {8, 10, 1}}),
               "4-vertex loosely 1-adjacent to two bad 3-vertices, other threads 0 and 2"});
  c.push_back({"bad-neighborhood-two-k1", K::BadNeighborhood, "two-k1", 4,
               from_spec(13, {{0, 3, 1}, {0, 4, 2}, {0, 8, 1}, {0, 12, 1}, {1, 9, 1}, {1, 11, 1}, {1, 12, 0},
                              {2, 4, 1}, {2, 6, 0}, {2, 10, 0}, {3, 10, 1}, {3, 11, 2}, {4, 11, 1}, {5, 8, 2},
                              {5, 9, 1}, {5, 10, 1}, {6, 7, 1}, {6, 12, 1}, {7, 8, 1}, {7, 9, 2}}),
               "4-vertex loosely 1-adjacent to two bad 3-vertices, one further 1-thread"});
  c.push_back({"bad-neighborhood-two-k2", K::BadNeighborhood, "two-k2", 4,
               from_spec(13, {{0, 4, 1}, {0, 10, 1}, {0, 11, 1}, {0, 12, 1}, {1, 5, 1}, {1, 6, 2}, {1, 10, 1},
                              {2, 7, 1}, {2, 9, 1}, {2, 10, 2}, {3, 4, 1}, {3, 5, 1}, {3, 7, 2}, {4, 9, 0},
                              {5, 11, 2}, {6, 8, 1}, {6, 11, 1}, {7, 12, 1}, {8, 9, 1}, {8, 12, 2}}),
               "4-vertex with four 1-threads, two of them to bad 3-vertices"});
  c.push_back({"m3-long-thread", K::M3LongThread, "open", 3, theta_graph(7, 7, 7),
               "theta(7,7,7): three 6-threads between two 3-vertices"});
  c.push_back({"m3-star", K::M3StarViolation, "star", 3, subdivide_uniform(complete_graph(4), 4),
               "K4 with every edge subdivided four times: T = (3,0,0,0)"});
  c.push_back({"m3-bad-pair", K::M3BadPairThread, "pair", 3,
               from_spec(10, {{0, 5, 1}, {0, 6, 1}, {0, 8, 4}, {1, 4, 1}, {1, 6, 4}, {1, 8, 1}, {2, 3, 4},
                              {2, 7, 1}, {2, 9, 1}, {3, 4, 1}, {3, 5, 1}, {4, 9, 4}, {5, 7, 4}, {6, 9, 1},
                              {7, 8, 1}}),
               "every 3-vertex bad; a bad vertex 1-adjacent to a 3-vertex with a 4-thread"});
  c.push_back({"m3-double-bad-y0", K::M3DoubleBad, "y-0-thread", 3,
               from_spec(18, {{0, 1, 1},  {0, 5, 4},   {0, 17, 1},  {1, 2, 1},   {1, 10, 0},  {2, 3, 1},
                              {2, 15, 4}, {3, 4, 1},   {3, 8, 4},   {4, 5, 1},   {4, 13, 0},  {5, 6, 1},
                              {6, 7, 1},  {6, 11, 4},  {7, 8, 1},   {7, 16, 0},  {8, 9, 1},   {9, 10, 1},
                              {9, 14, 4}, {10, 11, 1}, {11, 12, 1}, {12, 13, 1}, {12, 17, 4}, {13, 14, 1},
                              {14, 15, 1}, {15, 16, 1}, {16, 17, 1}}),
               "path v1 w1 x w2 y w3 z w4 v2 with 4-threads at x and z, y's third thread a 0-thread"});
  c.push_back({"m3-double-bad-y1", K::M3DoubleBad, "y-1-thread", 3,
               from_spec(18, {{0, 1, 1},  {0, 5, 4},   {0, 17, 1},  {1, 2, 1},   {1, 13, 1},  {2, 3, 1},
                              {2, 8, 4},  {3, 4, 1},   {3, 15, 4},  {4, 5, 1},   {4, 10, 1},  {5, 6, 1},
                              {6, 7, 1},  {6, 12, 4},  {7, 8, 1},   {7, 16, 1},  {8, 9, 1},   {9, 10, 1},
                              {9, 14, 4}, {10, 11, 1}, {11, 12, 1}, {11, 17, 4}, {12, 13, 1}, {13, 14, 1},
                              {14, 15, 1}, {15, 16, 1}, {16, 17, 1}}),
               "path v1 w1 x w2 y w3 z w4 v2 with 4-threads at x and z, y's third thread a 1-thread"});
  return c;
}

Graph gadget(ConfigKind kind) {
  for (Gadget& g : gadget_catalog())
    if (g.kind == kind) return std::move(g.graph);
  throw Error(ErrorCode::UnknownFamily, "no gadget for " + std::string(kind_name(kind)));
}

Gadget gadget_named(const std::string& name) {
  for (Gadget& g : gadget_catalog())
    if (g.name == name) return std::move(g);
  throw Error(ErrorCode::UnknownFamily, "no gadget named '" + name + "'");
}

}  // namespace equicolor
