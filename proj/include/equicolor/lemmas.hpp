#pragma once

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

#include <array>
#include <span>
#include <vector>

namespace equicolor {

// Extension steps. Each one takes a coloring f of the graph without the new
// vertices, colors the new vertices in place and leaves the old ones alone.
// Colors are picked by ascending class rank (rank 1 is a smallest class), so
// callers never relabel f themselves. `g` may be any supergraph of the
// current graph; only the listed path edges are consulted.

// path = v0, v1, ..., vt, v(t+1); v0 may equal v(t+1).
void extend_long_thread(const Graph& g, Coloring& f, std::span<const VertexId> path);

// Thread-cycle v0 v1 ... vt v0 where d(v0) = 3 and the third neighbour x of
// v0 is a branch vertex; all cycle vertices are uncolored, x is colored.
void extend_cycle_anchor(const Graph& g, Coloring& f, std::span<const VertexId> cycle, VertexId x);

// Thread-cycle at v0 whose third neighbour starts the thread
// q = v0, x1, ..., xq, x(q+1); only x(q+1) is colored.
void extend_cycle_via_thread(const Graph& g, Coloring& f, std::span<const VertexId> cycle,
                             std::span<const VertexId> q);

// path = y0, y1, ..., yt, y(t+1) with t in {4, 5}. An end may be kNoVertex
// (no constraint). Guarantees f(x) not in {a, b}; pass 0 for an unused slot.
void extend_45_thread(const Graph& g, Coloring& f, std::span<const VertexId> path, VertexId x, Color a, Color b);

// 2-thread x y1 y2 y.
void extend_2_thread(const Graph& g, Coloring& f, VertexId x, VertexId y1, VertexId y2, VertexId y);

// 2-thread x y1 y2 y and 1-thread x y3 z.
void extend_2_1_thread(const Graph& g, Coloring& f, VertexId x, VertexId y1, VertexId y2, VertexId y, VertexId y3,
                       VertexId z);

// Legs run outward from their root; the last vertex of a leg is its leaf.
struct Leg {
  VertexId root = kNoVertex;
  std::vector<VertexId> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexId leaf() const { return vertices.back(); }
};

struct StarInstance {
  Graph star;
  VertexId root = kNoVertex;
  std::vector<Leg> legs;
  ListAssignment lists;
  int d_x = 0;

  int s() const { return static_cast<int>(star.vertex_count()); }
  int eps() const { return (3 - s() % 3) % 3; }
  int a(int l) const;  // a_0 is d_x minus the number of legs
};

StarInstance make_star_instance(const Graph& star, VertexId root, ListAssignment lists, int d_x);

struct PairInstance {
  Graph graph;
  VertexId x = kNoVertex;
  VertexId y = kNoVertex;
  VertexId w = kNoVertex;  // the 2-vertex of the x-y 1-thread
  std::vector<Leg> legs;   // legs of both roots, connector excluded
  ListAssignment lists;
  int d_x = 0;
  int d_y = 0;

  int s() const { return static_cast<int>(graph.vertex_count()); }
  int eps() const { return (3 - s() % 3) % 3; }
  int b(int l) const;  // b_1 counts the connector once
};

PairInstance make_pair_instance(const Graph& graph, VertexId x, VertexId y, ListAssignment lists, int d_x, int d_y);

// Descending-equitable L-colorings; class sizes are target_sizes(s, 3) in
// color order.
Coloring reduce_star(const StarInstance& inst);
Coloring reduce_pair(const PairInstance& inst);

// v1 w1 x w2 y w3 z w4 v2 with 4-threads x x1..x4 v3 and z z1..z4 v4; y1 is
// the 2-vertex of an optional third 1-thread at y.
struct BadPairLabels {
  VertexId w1 = kNoVertex, x = kNoVertex, w2 = kNoVertex, y = kNoVertex;
  VertexId w3 = kNoVertex, z = kNoVertex, w4 = kNoVertex;
  std::array<VertexId, 4> xs{kNoVertex, kNoVertex, kNoVertex, kNoVertex};
  std::array<VertexId, 4> zs{kNoVertex, kNoVertex, kNoVertex, kNoVertex};
  VertexId y1 = kNoVertex;
};

Coloring color_bad_pair_m3(const Graph& h, const BadPairLabels& labels, const ListAssignment& lists);

}  // namespace equicolor
