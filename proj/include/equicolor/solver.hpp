#pragma once

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/threads.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace equicolor {

enum class ConfigKind {
  LongThread,
  EqualEndpointThread,
  FourVertexOverload,
  ThreeVertexOverload,
  BadNeighborhood,
  M3LongThread,
  M3StarViolation,
  M3BadPairThread,
  M3DoubleBad,
};

inline constexpr ConfigKind kAllKinds[] = {
    ConfigKind::LongThread,         ConfigKind::EqualEndpointThread, ConfigKind::FourVertexOverload,
    ConfigKind::ThreeVertexOverload, ConfigKind::BadNeighborhood,    ConfigKind::M3LongThread,
    ConfigKind::M3StarViolation,    ConfigKind::M3BadPairThread,     ConfigKind::M3DoubleBad,
};

std::string_view kind_name(ConfigKind kind);
std::optional<ConfigKind> parse_kind(std::string_view name);

// A reducible configuration found in the current graph. `paths` and the
// named anchors are what the extension recipe of `kind`/`variant` reads.
struct Config {
  ConfigKind kind = ConfigKind::LongThread;
  std::string variant;
  VertexId center = kNoVertex;
  std::vector<VertexId> deletion;
  std::vector<std::pair<std::string, VertexId>> anchors;
  std::vector<std::vector<VertexId>> paths;

  VertexId anchor(std::string_view name) const;  // kNoVertex when absent
};

// Which family of configurations applies: m = 3 uses the girth-14 catalog,
// every m >= 4 the girth-10 one.
enum class Catalog { M3, M4 };
Catalog catalog_for(int m);

// First configuration in priority order: threads, vertex overloads by
// ascending id, then bad-vertex neighborhoods.
Config find_config(const Graph& g, int m);
Config find_config(const Graph& g, int m, const ThreadIndex& idx);

// Every configuration the finder recognizes, without priority pruning.
std::vector<Config> all_configs(const Graph& g, int m);

// `host` is any supergraph in which the neighbours of the configuration are
// colored by f and the deletion set is uncolored; only colored vertices and
// the deletion set are consulted.
void extend_config(const Graph& host, const Config& cfg, Coloring& f);

struct SolveOptions {
  bool check_hypotheses = true;
  bool paranoid = false;  // full re-verification after every step
  bool trace = false;
};

struct SolveResult {
  Coloring coloring;
  std::vector<Config> trace;
  int steps = 0;
};

SolveResult solve(const Graph& g, int m, const SolveOptions& options = {});
Coloring equitable_color(const Graph& g, int m, const SolveOptions& options = {});

// Proper equitable coloring of the cycle 0, 1, ..., n-1.
Coloring color_cycle(int n, int m);
// Same, on an arbitrary cycle walk.
Coloring color_cycle(std::span<const VertexId> walk, int m, VertexId id_bound);

// 3 or 4 when a covering theorem applies, nullopt otherwise.
std::optional<int> upper_threshold(const Graph& g);

// Empty when the hypotheses for m hold, otherwise the reason.
std::string hypothesis_failure(const Graph& g, int m);

}  // namespace equicolor
