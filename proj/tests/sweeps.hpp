#pragma once

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/lemmas.hpp"

#include <functional>
#include <string>
#include <vector>

// Exhaustive extension sweeps shared by the unit tests and the acceptance run.
namespace equicolor::sweeps {

// A path host plus isolated padding vertices, so the prior class sizes are
// exactly `sizes`.
struct Host {
  Graph g;
  Coloring f;
  std::vector<VertexId> path;
};

Host path_host(int m, int len);
bool pad(Host& h, const std::vector<int>& sizes);

// Every equitable prior size pattern with base 2 (all 2^m ceilings).
void for_each_pattern(int m, const std::function<void(const std::vector<int>&)>& fn);

// Extension must keep old colors and give an equitable proper coloring.
bool sound(const Host& h, const Coloring& before, const Coloring& after);

struct Profile {
  int a1 = 0, a2 = 0, a4 = 0;
};

// Legs hung on `root` in order: 1-legs, 2-legs, 4-legs.
Graph build_star(const Profile& p, Graph g, VertexId root);
// x = 0, w = 1, y = 2.
Graph build_pair(const Profile& px, const Profile& py);

extern const std::vector<std::vector<Color>> kPairs;
extern const std::vector<std::vector<Color>> kRootLists;

// Calls fn for every admissible list assignment on h; `relaxed` gets a list
// of size >= 2, leaves 2-lists, everything else full.
void for_each_lists(const Graph& h, VertexId relaxed, bool relaxed_full_only,
                    const std::function<void(const ListAssignment&)>& fn);

struct BadPairHost {
  Graph h;
  BadPairLabels lb;
};

BadPairHost bad_pair_host(bool with_y1);
ListAssignment full_lists(const Graph& h);

struct Tally {
  long runs = 0;
  long failures = 0;       // unsound result or unexpected error
  long exceptions = 0;     // expected ExceptionCase outcomes
  long oracle_checks = 0;  // brute-force cross-checks
  std::string first_failure;

  void fail(std::string what);
};

Tally long_thread();
Tally cycle_anchor();
Tally cycle_via_thread();
Tally thread_45();
Tally two_thread();
Tally two_one_thread();
// Every `oracle_every`-th instance is cross-checked with brute_descending_L.
Tally star(int oracle_every = 97);
Tally pair(int oracle_every = 97);
Tally double_bad();

struct Sweep {
  const char* name;
  std::function<Tally(int oracle_every)> run;
};

const std::vector<Sweep>& all();

}  // namespace equicolor::sweeps
