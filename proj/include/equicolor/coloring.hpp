#pragma once

#include "equicolor/graph.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace equicolor {

// Colors are 1..m; 0 marks an uncolored vertex.
using Color = int;

class Coloring {
 public:
  Coloring() = default;
  Coloring(int m, VertexId id_bound);

  int m() const { return m_; }
  VertexId id_bound() const { return static_cast<VertexId>(color_.size()); }
  void reserve_ids(VertexId id_bound);

  Color operator[](VertexId v) const {
    return v >= 0 && v < id_bound() ? color_[static_cast<std::size_t>(v)] : 0;
  }
  bool is_colored(VertexId v) const { return (*this)[v] != 0; }
  void assign(VertexId v, Color c);
  void unassign(VertexId v);
  void swap_colors(VertexId u, VertexId v);

  std::span<const int> class_sizes() const { return sizes_; }
  int class_size(Color c) const { return sizes_[static_cast<std::size_t>(c - 1)]; }
  std::size_t colored_count() const { return colored_; }
  std::vector<VertexId> domain() const;

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.m_ == b.m_ && a.domain() == b.domain() && a.sizes_ == b.sizes_ && a.same_on_domain(b);
  }

 private:
  bool same_on_domain(const Coloring& other) const;

  int m_ = 0;
  std::vector<Color> color_;
  std::vector<int> sizes_;
  std::size_t colored_ = 0;
};

// Colors ordered by ascending class size, ties by color index. Rank 1 is a
// smallest class; the lemma constructions work in rank space.
struct RankMap {
  std::vector<Color> color_of_rank;  // index 1..m
  std::vector<int> rank_of_color;    // index 1..m

  Color color(int rank) const { return color_of_rank[static_cast<std::size_t>(rank)]; }
  int rank(Color c) const { return c == 0 ? 0 : rank_of_color[static_cast<std::size_t>(c)]; }
};

RankMap ascending_ranks(const Coloring& f);

std::vector<int> target_sizes(long long n, int m);

struct EquitableReport {
  bool valid = false;
  std::vector<std::pair<VertexId, VertexId>> edge_violations;
  std::vector<int> class_sizes;
  bool sizes_ok = false;
};

EquitableReport verify_equitable(const Graph& g, const Coloring& f);

enum class SortOrder { Ascending, Descending };

// permutation[old color] = new color (index 0 unused).
std::pair<Coloring, std::vector<Color>> sort_relabel(const Coloring& f, SortOrder order);
Coloring apply_permutation(const Coloring& f, const std::vector<Color>& permutation);

Coloring merge_components(const Coloring& f, const Coloring& g);

struct ListAssignment {
  int m = 0;
  std::map<VertexId, std::vector<Color>> lists;

  const std::vector<Color>& at(VertexId v) const { return lists.at(v); }
  bool allows(VertexId v, Color c) const;
};

ListAssignment lists_from_boundary(const Graph& g, std::span<const VertexId> h, const Coloring& f, int m);

struct ListReport {
  bool valid = false;
  std::vector<std::pair<VertexId, VertexId>> edge_violations;
  std::vector<VertexId> list_violations;
  std::vector<VertexId> uncolored;
  std::vector<int> class_sizes;
  bool sizes_ok = false;
};

// Class sizes must satisfy |V_1| >= ... >= |V_m| >= |V_1| - 1.
bool descending_equitable(std::span<const int> sizes);
ListReport verify_descending_L(const Graph& h, const ListAssignment& lists, const Coloring& f);

}  // namespace equicolor
