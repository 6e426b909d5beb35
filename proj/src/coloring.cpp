#include "equicolor/coloring.hpp"
#include "equicolor/error.hpp"

#include <algorithm>
#include <numeric>

namespace equicolor {

Coloring::Coloring(int m, VertexId id_bound)
    : m_(m), color_(static_cast<std::size_t>(id_bound), 0), sizes_(static_cast<std::size_t>(m), 0) {
  if (m <= 0) throw Error(ErrorCode::InvalidColorCount, "m = " + std::to_string(m));
}

void Coloring::reserve_ids(VertexId id_bound) {
  if (id_bound > this->id_bound()) color_.resize(static_cast<std::size_t>(id_bound), 0);
}

void Coloring::assign(VertexId v, Color c) {
  if (c < 1 || c > m_) throw Error(ErrorCode::InvalidColorCount, "color " + std::to_string(c) + " outside 1.." + std::to_string(m_));
  if (v < 0) throw Error(ErrorCode::UnknownVertex, "negative vertex id");
  reserve_ids(v + 1);
  Color& slot = color_[static_cast<std::size_t>(v)];
  if (slot != 0) --sizes_[static_cast<std::size_t>(slot - 1)];
  else ++colored_;
  slot = c;
  ++sizes_[static_cast<std::size_t>(c - 1)];
}

void Coloring::unassign(VertexId v) {
  if (!is_colored(v)) return;
  Color& slot = color_[static_cast<std::size_t>(v)];
  --sizes_[static_cast<std::size_t>(slot - 1)];
  slot = 0;
  --colored_;
}

void Coloring::swap_colors(VertexId u, VertexId v) {
  std::swap(color_[static_cast<std::size_t>(u)], color_[static_cast<std::size_t>(v)]);
}

std::vector<VertexId> Coloring::domain() const {
  std::vector<VertexId> out;
  out.reserve(colored_);
  for (VertexId v = 0; v < id_bound(); ++v)
    if (color_[static_cast<std::size_t>(v)] != 0) out.push_back(v);
  return out;
}

bool Coloring::same_on_domain(const Coloring& other) const {
  for (VertexId v : domain())
    if (other[v] != (*this)[v]) return false;
  return true;
}

RankMap ascending_ranks(const Coloring& f) {
  const int m = f.m();
  std::vector<Color> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](Color a, Color b) { return f.class_size(a) < f.class_size(b); });
  RankMap r;
  r.color_of_rank.assign(static_cast<std::size_t>(m) + 1, 0);
  r.rank_of_color.assign(static_cast<std::size_t>(m) + 1, 0);
  for (int i = 0; i < m; ++i) {
    r.color_of_rank[static_cast<std::size_t>(i) + 1] = order[static_cast<std::size_t>(i)];
    r.rank_of_color[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i + 1;
  }
  return r;
}

std::vector<int> target_sizes(long long n, int m) {
  if (m <= 0) throw Error(ErrorCode::InvalidColorCount, "m = " + std::to_string(m));
  if (n < 0) throw Error(ErrorCode::PreconditionViolated, "negative vertex count");
  const long long q = n / m, r = n % m;
  std::vector<int> out(static_cast<std::size_t>(m), static_cast<int>(q));
  for (long long i = 0; i < r; ++i) out[static_cast<std::size_t>(i)] += 1;
  return out;
}

EquitableReport verify_equitable(const Graph& g, const Coloring& f) {
  EquitableReport rep;
  for (VertexId v : g.vertices())
    if (!f.is_colored(v)) throw Error(ErrorCode::IncompleteColoring, "vertex " + std::to_string(v + 1) + " is uncolored");
  for (auto [u, v] : g.edges())
    if (f[u] == f[v]) rep.edge_violations.emplace_back(u, v);
  // Only vertices of G count; extra colored ids outside G are ignored.
  rep.class_sizes.assign(static_cast<std::size_t>(f.m()), 0);
  for (VertexId v : g.vertices()) ++rep.class_sizes[static_cast<std::size_t>(f[v] - 1)];
  auto [lo, hi] = std::minmax_element(rep.class_sizes.begin(), rep.class_sizes.end());
  rep.sizes_ok = *hi - *lo <= 1;
  rep.valid = rep.sizes_ok && rep.edge_violations.empty();
  return rep;
}

Coloring apply_permutation(const Coloring& f, const std::vector<Color>& permutation) {
  Coloring out(f.m(), f.id_bound());
  for (VertexId v : f.domain()) out.assign(v, permutation[static_cast<std::size_t>(f[v])]);
  return out;
}

std::pair<Coloring, std::vector<Color>> sort_relabel(const Coloring& f, SortOrder order) {
  RankMap r = ascending_ranks(f);
  std::vector<Color> perm(static_cast<std::size_t>(f.m()) + 1, 0);
  if (order == SortOrder::Ascending) {
    for (Color c = 1; c <= f.m(); ++c) perm[static_cast<std::size_t>(c)] = r.rank(c);
  } else {
    std::vector<Color> byc(static_cast<std::size_t>(f.m()));
    std::iota(byc.begin(), byc.end(), 1);
    std::stable_sort(byc.begin(), byc.end(), [&](Color a, Color b) { return f.class_size(a) > f.class_size(b); });
    for (int i = 0; i < f.m(); ++i) perm[static_cast<std::size_t>(byc[static_cast<std::size_t>(i)])] = i + 1;
  }
  return {apply_permutation(f, perm), perm};
}

Coloring merge_components(const Coloring& f, const Coloring& g) {
  if (f.m() != g.m()) throw Error(ErrorCode::ColorCountMismatch, std::to_string(f.m()) + " vs " + std::to_string(g.m()));
  Coloring out = sort_relabel(f, SortOrder::Descending).first;
  Coloring rest = sort_relabel(g, SortOrder::Ascending).first;
  out.reserve_ids(rest.id_bound());
  for (VertexId v : rest.domain()) {
    if (out.is_colored(v)) throw Error(ErrorCode::VertexCollision, "vertex " + std::to_string(v + 1) + " colored twice");
    out.assign(v, rest[v]);
  }
  return out;
}

bool ListAssignment::allows(VertexId v, Color c) const {
  auto it = lists.find(v);
  if (it == lists.end()) return false;
  return std::find(it->second.begin(), it->second.end(), c) != it->second.end();
}

ListAssignment lists_from_boundary(const Graph& g, std::span<const VertexId> h, const Coloring& f, int m) {
  std::vector<char> in_h(static_cast<std::size_t>(g.id_bound()), 0);
  for (VertexId v : h) in_h[static_cast<std::size_t>(v)] = 1;
  ListAssignment out;
  out.m = m;
  for (VertexId v : h) {
    std::vector<char> banned(static_cast<std::size_t>(m) + 1, 0);
    for (VertexId w : g.neighbors(v))
      if (!in_h[static_cast<std::size_t>(w)] && f[w] >= 1 && f[w] <= m) banned[static_cast<std::size_t>(f[w])] = 1;
    auto& list = out.lists[v];
    for (Color c = 1; c <= m; ++c)
      if (!banned[static_cast<std::size_t>(c)]) list.push_back(c);
  }
  return out;
}

bool descending_equitable(std::span<const int> sizes) {
  if (sizes.empty()) return true;
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] > sizes[i - 1]) return false;
  return sizes.back() >= sizes.front() - 1;
}

ListReport verify_descending_L(const Graph& h, const ListAssignment& lists, const Coloring& f) {
  ListReport rep;
  rep.class_sizes.assign(static_cast<std::size_t>(f.m()), 0);
  for (VertexId v : h.vertices()) {
    if (!f.is_colored(v)) {
      rep.uncolored.push_back(v);
      continue;
    }
    ++rep.class_sizes[static_cast<std::size_t>(f[v] - 1)];
    if (!lists.allows(v, f[v])) rep.list_violations.push_back(v);
  }
  for (auto [u, v] : h.edges())
    if (f.is_colored(u) && f[u] == f[v]) rep.edge_violations.emplace_back(u, v);
  rep.sizes_ok = descending_equitable(rep.class_sizes);
  rep.valid = rep.sizes_ok && rep.uncolored.empty() && rep.edge_violations.empty() && rep.list_violations.empty();
  return rep;
}

}  // namespace equicolor
