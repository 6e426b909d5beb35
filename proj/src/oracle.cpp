#include "equicolor/oracle.hpp"
#include "equicolor/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace equicolor {

int oracle_cap() {
  if (const char* env = std::getenv("EQUICOLOR_ORACLE_CAP")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultOracleCap;
}

namespace {

void check_cap(const Graph& g, int cap) {
  if (static_cast<long long>(g.vertex_count()) > cap)
    throw Error(ErrorCode::TooLarge, std::to_string(g.vertex_count()) + " vertices exceed oracle cap " + std::to_string(cap));
}

// Smallest-last order, reversed: high-core vertices are branched on first.
std::vector<VertexId> degeneracy_order(const Graph& g) {
  auto verts = g.vertices();
  std::vector<int> deg(static_cast<std::size_t>(g.id_bound()), 0);
  std::vector<char> gone(static_cast<std::size_t>(g.id_bound()), 0);
  for (VertexId v : verts) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<VertexId> removed;
  for (std::size_t step = 0; step < verts.size(); ++step) {
    VertexId best = kNoVertex;
    for (VertexId v : verts)
      if (!gone[static_cast<std::size_t>(v)] && (best == kNoVertex || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]))
        best = v;
    gone[static_cast<std::size_t>(best)] = 1;
    removed.push_back(best);
    for (VertexId w : g.neighbors(best)) --deg[static_cast<std::size_t>(w)];
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

struct EquitableSearch {
  const Graph& g;
  int m;
  std::vector<VertexId> order;
  std::vector<std::vector<int>> earlier;  // neighbors earlier in `order`, as positions
  std::vector<int> color;                 // by position
  std::vector<int> size;
  int floor_size = 0, ceil_size = 0, ceil_slots = 0, at_ceil = 0;
  std::uint64_t nodes = 0;

  bool run(std::size_t i, int used) {
    ++nodes;
    const int n = static_cast<int>(order.size());
    if (static_cast<int>(i) == n) return true;
    int deficit = 0;
    for (int c = 0; c < m; ++c) deficit += std::max(0, floor_size - size[static_cast<std::size_t>(c)]);
    if (deficit > n - static_cast<int>(i)) return false;
    const int limit = std::min(m, used + 1);
    for (int c = 0; c < limit; ++c) {
      int& sz = size[static_cast<std::size_t>(c)];
      if (sz >= ceil_size) continue;
      const bool to_ceil = ceil_size > floor_size && sz + 1 == ceil_size;
      if (to_ceil && at_ceil >= ceil_slots) continue;
      bool clash = false;
      for (int p : earlier[i])
        if (color[static_cast<std::size_t>(p)] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      color[i] = c;
      ++sz;
      at_ceil += to_ceil;
      if (run(i + 1, std::max(used, c + 1))) return true;
      --sz;
      at_ceil -= to_ceil;
      color[i] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Coloring> brute_equitable(const Graph& g, int m, int cap, SearchStats* stats) {
  if (m <= 0) throw Error(ErrorCode::InvalidColorCount, "m = " + std::to_string(m));
  check_cap(g, cap);
  EquitableSearch s{g, m, degeneracy_order(g), {}, {}, {}};
  const auto n = static_cast<long long>(s.order.size());
  std::vector<int> pos(static_cast<std::size_t>(g.id_bound()), -1);
  for (std::size_t i = 0; i < s.order.size(); ++i) pos[static_cast<std::size_t>(s.order[i])] = static_cast<int>(i);
  s.earlier.resize(s.order.size());
  for (std::size_t i = 0; i < s.order.size(); ++i)
    for (VertexId w : g.neighbors(s.order[i]))
      if (pos[static_cast<std::size_t>(w)] < static_cast<int>(i)) s.earlier[i].push_back(pos[static_cast<std::size_t>(w)]);
  s.color.assign(s.order.size(), -1);
  s.size.assign(static_cast<std::size_t>(m), 0);
  s.floor_size = static_cast<int>(n / m);
  s.ceil_size = static_cast<int>((n + m - 1) / m);
  s.ceil_slots = static_cast<int>(n % m);
  if (s.ceil_size == s.floor_size) s.ceil_slots = m;
  const bool found = s.run(0, 0);
  if (stats) stats->nodes = s.nodes;
  if (!found) return std::nullopt;
  Coloring f(m, g.id_bound());
  for (std::size_t i = 0; i < s.order.size(); ++i) f.assign(s.order[i], s.color[i] + 1);
  return f;
}

namespace {

ThresholdResult summarize(const Graph& g, std::map<int, bool> per_k) {
  const int n = static_cast<int>(g.vertex_count());
  ThresholdResult r;
  r.per_k = std::move(per_k);
  r.chi_eq = n;
  for (auto [k, ok] : r.per_k)
    if (ok) {
      r.chi_eq = k;
      break;
    }
  r.chi_eq_star = std::max(1, n);
  for (int k = n; k >= 1; --k) {
    if (!r.per_k[k]) break;
    r.chi_eq_star = k;
  }
  if (n == 0) r.chi_eq = r.chi_eq_star = 1;
  return r;
}

}  // namespace

ThresholdResult brute_threshold_serial(const Graph& g, int cap) {
  check_cap(g, cap);
  const int n = static_cast<int>(g.vertex_count());
  std::map<int, bool> per_k;
  for (int k = 1; k < n; ++k) per_k[k] = brute_equitable(g, k, cap).has_value();
  if (n >= 1) per_k[n] = true;
  return summarize(g, std::move(per_k));
}

ThresholdResult brute_threshold(const Graph& g, int cap) {
  check_cap(g, cap);
  const int n = static_cast<int>(g.vertex_count());
  std::vector<char> ok(static_cast<std::size_t>(std::max(n, 1)), 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 1; k < n; ++k) ok[static_cast<std::size_t>(k)] = brute_equitable(g, k, cap).has_value();
  std::map<int, bool> per_k;
  for (int k = 1; k < n; ++k) per_k[k] = ok[static_cast<std::size_t>(k)] != 0;
  if (n >= 1) per_k[n] = true;
  return summarize(g, std::move(per_k));
}

namespace {

struct ListSearch {
  std::vector<VertexId> order;
  std::vector<std::vector<int>> earlier;
  std::vector<std::vector<Color>> allowed;
  std::vector<int> target;
  std::vector<int> size;
  std::vector<Color> color;
  std::uint64_t nodes = 0;

  bool run(std::size_t i) {
    ++nodes;
    if (i == order.size()) return true;
    for (Color c : allowed[i]) {
      auto ci = static_cast<std::size_t>(c - 1);
      if (size[ci] >= target[ci]) continue;
      bool clash = false;
      for (int p : earlier[i])
        if (color[static_cast<std::size_t>(p)] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      color[i] = c;
      ++size[ci];
      if (run(i + 1)) return true;
      --size[ci];
      color[i] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Coloring> brute_descending_L(const Graph& h, const ListAssignment& lists, int cap, SearchStats* stats) {
  check_cap(h, cap);
  const int m = lists.m;
  if (m <= 0) throw Error(ErrorCode::InvalidColorCount, "list assignment without colors");
  ListSearch s;
  // BFS order keeps each vertex next to an already-placed neighbor.
  std::vector<char> seen(static_cast<std::size_t>(h.id_bound()), 0);
  for (VertexId r : h.vertices()) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    std::size_t head = s.order.size();
    s.order.push_back(r);
    seen[static_cast<std::size_t>(r)] = 1;
    for (; head < s.order.size(); ++head)
      for (VertexId w : h.neighbors(s.order[head]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          s.order.push_back(w);
        }
  }
  std::vector<int> pos(static_cast<std::size_t>(h.id_bound()), -1);
  for (std::size_t i = 0; i < s.order.size(); ++i) pos[static_cast<std::size_t>(s.order[i])] = static_cast<int>(i);
  s.earlier.resize(s.order.size());
  s.allowed.resize(s.order.size());
  for (std::size_t i = 0; i < s.order.size(); ++i) {
    VertexId v = s.order[i];
    for (VertexId w : h.neighbors(v))
      if (pos[static_cast<std::size_t>(w)] < static_cast<int>(i)) s.earlier[i].push_back(pos[static_cast<std::size_t>(w)]);
    if (auto it = lists.lists.find(v); it != lists.lists.end()) s.allowed[i] = it->second;
  }
  s.target = target_sizes(static_cast<long long>(s.order.size()), m);
  s.size.assign(static_cast<std::size_t>(m), 0);
  s.color.assign(s.order.size(), 0);
  const bool found = s.run(0);
  if (stats) stats->nodes = s.nodes;
  if (!found) return std::nullopt;
  Coloring f(m, h.id_bound());
  for (std::size_t i = 0; i < s.order.size(); ++i) f.assign(s.order[i], s.color[i]);
  return f;
}

}  // namespace equicolor
