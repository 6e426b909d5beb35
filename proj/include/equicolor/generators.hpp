#pragma once

#include "equicolor/graph.hpp"
#include "equicolor/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace equicolor {

enum class ConfigKind;

// Families: cycle(n), theta(a,b,c), star(n) = K_{1,n},
// complete_bipartite(a,b) = K_{a,b}, k77, petersen, path(n), complete(n).
Graph family(const std::string& name, const std::vector<int>& params);

Graph cycle_graph(int n);
Graph theta_graph(int a, int b, int c);
Graph complete_bipartite(int a, int b);
Graph complete_graph(int n);
Graph petersen_graph();

// Replaces edge i of `base` (in Graph::edges() order) by a path with
// q[i] interior vertices. Base vertices keep their ids.
Graph subdivide(const Graph& base, const std::vector<int>& q);
Graph subdivide_uniform(const Graph& base, int q);

struct RandomSpec {
  int base_size = 8;   // n0
  int q_min = 3;
  int q_max = 5;
  int girth_min = 10;
  Rational mad_max{5, 2};
  std::uint64_t seed = 1;
  int base_girth = 3;  // chords never close a base cycle shorter than this
  int max_attempts = 200;
};

RandomSpec parse_random_spec(const std::string& text);  // "n0=8,q=3..5,girth=10,seed=42"
Graph random_sparse(const RandomSpec& spec);

struct Gadget {
  std::string name;
  ConfigKind kind;
  std::string variant;
  int m = 4;
  Graph graph;
  std::string provenance;
};

// Hand-picked hosts meeting the hypotheses for `m`, on which find_config
// returns `kind` / `variant` first. Frozen as tests/fixtures/gadgets/<name>.col.
std::vector<Gadget> gadget_catalog();
Graph gadget(ConfigKind kind);
Gadget gadget_named(const std::string& name);

}  // namespace equicolor
