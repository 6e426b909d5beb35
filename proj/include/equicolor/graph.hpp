#pragma once

#include "equicolor/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace equicolor {

// Internal ids are 0-based; DIMACS and JSON use id + 1.
using VertexId = std::int32_t;
inline constexpr VertexId kNoVertex = -1;

class Graph {
 public:
  Graph() = default;
  explicit Graph(VertexId n);

  VertexId add_vertex();
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const {
    return v >= 0 && v < id_bound() && alive_[static_cast<std::size_t>(v)];
  }
  bool has_edge(VertexId u, VertexId v) const;

  std::span<const VertexId> neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  VertexId id_bound() const { return static_cast<VertexId>(alive_.size()); }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return vertex_count_ == 0; }

  std::vector<VertexId> vertices() const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  int min_degree() const;
  int max_degree() const;

  void require_vertex(VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.alive_ == b.alive_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::vector<VertexId>> adj_;
  std::vector<char> alive_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
};

Graph load_graph(std::istream& in);
Graph load_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path);

// Vertices are renumbered 1..n in ascending id order.
void write_dimacs(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
std::string to_dimacs(const Graph& g, const std::vector<std::string>& comments = {});

Graph delete_vertices(const Graph& g, std::span<const VertexId> s);
Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);
std::vector<std::vector<VertexId>> components(const Graph& g);

// nullopt encodes an infinite girth (forest).
using Girth = std::optional<int>;
Girth girth(const Graph& g);
Girth girth_serial(const Graph& g);
Girth girth_by_edges(const Graph& g);

struct DensestSubgraph {
  Rational density;  // 2|E(H)| / |V(H)|
  std::vector<VertexId> vertices;
};

DensestSubgraph densest_subgraph(const Graph& g);
Rational mad_exact(const Graph& g);
Rational mad_bruteforce(const Graph& g);

struct Metrics {
  Girth girth;
  Rational mad;
  int min_degree = 0;
  int max_degree = 0;
};

Metrics compute_metrics(const Graph& g);

}  // namespace equicolor
