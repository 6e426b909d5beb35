#pragma once

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace equicolor {

inline constexpr int kDefaultOracleCap = 24;

// EQUICOLOR_ORACLE_CAP when set, else the default.
int oracle_cap();

struct SearchStats {
  std::uint64_t nodes = 0;
};

// nullopt is a proven Infeasible.
std::optional<Coloring> brute_equitable(const Graph& g, int m, int cap = oracle_cap(), SearchStats* stats = nullptr);

struct ThresholdResult {
  int chi_eq = 0;
  int chi_eq_star = 0;
  std::map<int, bool> per_k;
};

ThresholdResult brute_threshold(const Graph& g, int cap = oracle_cap());
ThresholdResult brute_threshold_serial(const Graph& g, int cap = oracle_cap());

// Class sizes are forced to target_sizes(|H|, m) in color order.
std::optional<Coloring> brute_descending_L(const Graph& h, const ListAssignment& lists, int cap = oracle_cap(),
                                           SearchStats* stats = nullptr);

}  // namespace equicolor
