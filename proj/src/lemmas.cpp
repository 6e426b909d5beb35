#include "equicolor/lemmas.hpp"
#include "equicolor/error.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>

namespace equicolor {

namespace {

std::string vname(VertexId v) { return std::to_string(v + 1); }

void need(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::PreconditionViolated, what);
}

void require_uncolored(const Coloring& f, std::span<const VertexId> vs) {
  for (VertexId v : vs) need(!f.is_colored(v), "vertex " + vname(v) + " is already colored");
}

void require_path(const Graph& g, std::span<const VertexId> path) {
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] == kNoVertex) continue;
    g.require_vertex(path[i]);
    if (i > 0 && path[i - 1] != kNoVertex)
      need(g.has_edge(path[i - 1], path[i]), "vertices " + vname(path[i - 1]) + " and " + vname(path[i]) + " are not adjacent");
  }
}

// Checks that consecutive colored vertices of `walk` differ.
void check_walk(const Coloring& f, std::span<const VertexId> walk, const char* who) {
  for (std::size_t i = 1; i < walk.size(); ++i) {
    VertexId u = walk[i - 1], v = walk[i];
    if (u == kNoVertex || v == kNoVertex) continue;
    if (f.is_colored(u) && f[u] == f[v])
      throw Error(ErrorCode::ExtensionFailed, std::string(who) + ": " + vname(u) + " and " + vname(v) + " share color " +
                                                  std::to_string(f[u]));
  }
}

Color color_at(const Coloring& f, VertexId v) { return v == kNoVertex ? 0 : f[v]; }

}  // namespace

void extend_long_thread(const Graph& g, Coloring& f, std::span<const VertexId> path) {
  const int m = f.m();
  need(path.size() >= 5, "thread needs at least 3 interior vertices");
  const int t = static_cast<int>(path.size()) - 2;
  need(m >= 3, "long-thread extension needs m >= 3");
  need(m != 3 || t == 3 || t >= 5, "for m = 3 the thread length must be 3 or at least 5");
  require_path(g, path);
  need(f.is_colored(path.front()) && f.is_colored(path.back()), "thread endpoints must be colored");
  require_uncolored(f, path.subspan(1, static_cast<std::size_t>(t)));

  const RankMap r = ascending_ranks(f);
  std::vector<Color> c(path.size(), 0);
  c.front() = f[path.front()];
  c.back() = f[path.back()];
  for (int i = 1; i <= t; ++i) c[static_cast<std::size_t>(i)] = r.color((i - 1) % m + 1);
  if (c[1] == c[0]) std::swap(c[1], c[2]);
  if (c[static_cast<std::size_t>(t)] == c[static_cast<std::size_t>(t) + 1])
    std::swap(c[static_cast<std::size_t>(t) - 1], c[static_cast<std::size_t>(t)]);
  for (int i = 1; i <= t; ++i) f.assign(path[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]);
  check_walk(f, path, "long thread");
}

namespace {

std::vector<Color> cycle_pattern(const RankMap& r, int m, int len) {
  std::vector<Color> c(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) c[static_cast<std::size_t>(i)] = r.color(i % m + 1);
  if (len > 1 && c.back() == c.front()) std::swap(c[static_cast<std::size_t>(len) - 1], c[static_cast<std::size_t>(len) - 2]);
  return c;
}

bool proper_cycle(const std::vector<Color>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] == c[(i + 1) % c.size()]) return false;
  return true;
}

}  // namespace

void extend_cycle_anchor(const Graph& g, Coloring& f, std::span<const VertexId> cycle, VertexId x) {
  const int m = f.m();
  need(m >= 3, "cycle extension needs m >= 3");
  need(cycle.size() >= 3, "cycle too short");
  std::vector<VertexId> closed(cycle.begin(), cycle.end());
  closed.push_back(cycle.front());
  require_path(g, closed);
  need(g.has_edge(cycle.front(), x), "anchor is not adjacent to the cycle vertex");
  need(f.is_colored(x), "anchor must be colored");
  require_uncolored(f, cycle);

  const RankMap r = ascending_ranks(f);
  const int len = static_cast<int>(cycle.size());
  const int t = len - 1;
  std::vector<Color> c = cycle_pattern(r, m, len);
  if (c[0] == f[x]) {
    for (int i : {1, 2})
      if (c[static_cast<std::size_t>(i)] != c[static_cast<std::size_t>(t)]) {
        std::swap(c[0], c[static_cast<std::size_t>(i)]);
        break;
      }
  }
  if (!proper_cycle(c) || c[0] == f[x]) {
    // Shift the pattern along the cycle; the color multiset is unchanged.
    const std::vector<Color> base = cycle_pattern(r, m, len);
    for (int s = 0; s < len; ++s)
      if (base[static_cast<std::size_t>(s)] != f[x]) {
        for (int i = 0; i < len; ++i) c[static_cast<std::size_t>(i)] = base[static_cast<std::size_t>((i + s) % len)];
        break;
      }
  }
  for (int i = 0; i < len; ++i) f.assign(cycle[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]);
  check_walk(f, closed, "thread-cycle");
  const VertexId anchor[] = {x, cycle.front()};
  check_walk(f, anchor, "thread-cycle anchor");
}

void extend_cycle_via_thread(const Graph& g, Coloring& f, std::span<const VertexId> cycle,
                             std::span<const VertexId> q) {
  const int m = f.m();
  need(m >= 3, "cycle extension needs m >= 3");
  need(q.size() >= 3 && q.front() == cycle.front(), "thread must start at the cycle vertex");
  require_path(g, q);
  need(f.is_colored(q.back()), "far end of the thread must be colored");
  const auto inner = q.first(q.size() - 1);
  require_uncolored(f, inner);

  const RankMap r = ascending_ranks(f);
  const int qn = static_cast<int>(q.size()) - 2;
  std::vector<Color> c(q.size(), 0);
  for (int i = 0; i <= qn; ++i) c[static_cast<std::size_t>(i)] = r.color(i % m + 1);
  c.back() = f[q.back()];
  if (c[static_cast<std::size_t>(qn)] == c.back()) std::swap(c[static_cast<std::size_t>(qn)], c[static_cast<std::size_t>(qn) - 1]);
  for (int i = 0; i <= qn; ++i) f.assign(q[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]);
  check_walk(f, q, "thread into a thread-cycle");

  std::vector<VertexId> path(cycle.begin(), cycle.end());
  path.push_back(cycle.front());
  extend_long_thread(g, f, path);
}

void extend_45_thread(const Graph& g, Coloring& f, std::span<const VertexId> path_in, VertexId x, Color a, Color b) {
  const int m = f.m();
  need(path_in.size() == 6 || path_in.size() == 7, "Lemma path must have 4 or 5 interior vertices");
  need(m >= 4, "4/5-thread extension needs m >= 4");
  const int t = static_cast<int>(path_in.size()) - 2;
  std::vector<VertexId> p(path_in.begin(), path_in.end());
  auto pos = std::find(p.begin() + 1, p.end() - 1, x);
  need(pos != p.end() - 1, "designated vertex is not interior to the thread");
  int i = static_cast<int>(pos - p.begin());
  if (m == 4 && t == 5 && (i == 2 || i == 4))
    throw Error(ErrorCode::ExceptionCase, "m = 4, t = 5 and the designated vertex is y2 or y4");
  require_path(g, p);
  require_uncolored(f, std::span<const VertexId>(p).subspan(1, static_cast<std::size_t>(t)));
  for (VertexId e : {p.front(), p.back()})
    need(e == kNoVertex || f.is_colored(e), "thread endpoints must be colored");
  if (i > (t + 1) / 2) {
    std::reverse(p.begin(), p.end());
    i = t + 1 - i;
  }

  const RankMap r = ascending_ranks(f);
  const int end0 = r.rank(color_at(f, p.front()));
  const int end1 = r.rank(color_at(f, p.back()));
  const int ra = a >= 1 && a <= m ? r.rank(a) : 0, rb = b >= 1 && b <= m ? r.rank(b) : 0;
  std::vector<int> rank(p.size(), 0);  // by path position

  if (m >= t) {
    std::vector<int> order{i};
    for (int j = 1; j <= t; ++j)
      if (j != i) order.push_back(j);
    if (order.back() == 1 || order.back() == t) std::swap(order[order.size() - 1], order[order.size() - 2]);
    std::vector<char> used(static_cast<std::size_t>(t) + 1, 0);
    for (int j : order) {
      int pick = 0;
      for (int k = 1; k <= t && !pick; ++k) {
        if (used[static_cast<std::size_t>(k)]) continue;
        if (j == i && (k == ra || k == rb)) continue;
        if (j == 1 && k == end0) continue;
        if (j == t && k == end1) continue;
        pick = k;
      }
      if (!pick) throw Error(ErrorCode::ExtensionFailed, "greedy 4/5-thread ordering ran out of colors");
      used[static_cast<std::size_t>(pick)] = 1;
      rank[static_cast<std::size_t>(j)] = pick;
    }
  } else {
    // m = 4, t = 5, x in {y1, y3}.
    auto first_of = [](std::initializer_list<int> from, std::initializer_list<int> banned) {
      for (int k : from)
        if (std::find(banned.begin(), banned.end(), k) == banned.end()) return k;
      return 0;
    };
    if (1 != ra && 1 != rb && 1 != end0) {
      rank[1] = rank[3] = 1;
      const int c = first_of({2, 3, 4}, {end1});
      rank[5] = c;
      std::vector<int> rest;
      for (int k : {2, 3, 4})
        if (k != c) rest.push_back(k);
      rank[2] = rest[0];
      rank[4] = rest[1];
    } else {
      const int xp = i == 1 ? 3 : 1;
      const int c2 = first_of({2, 3, 4}, {end0, ra, rb});
      if (!c2) throw Error(ErrorCode::ExtensionFailed, "no color left for the designated vertex");
      rank[2] = rank[4] = 1;
      rank[static_cast<std::size_t>(i)] = c2;
      const int c3 = first_of({2, 3, 4}, {c2, end0});
      rank[static_cast<std::size_t>(xp)] = c3;
      const int c4 = 9 - c2 - c3;
      rank[5] = c4;
      if (c4 == end1) std::swap(rank[4], rank[5]);
    }
  }
  for (int j = 1; j <= t; ++j) f.assign(p[static_cast<std::size_t>(j)], r.color(rank[static_cast<std::size_t>(j)]));
  check_walk(f, p, "4/5-thread");
  if (f[x] == a || f[x] == b)
    throw Error(ErrorCode::ExtensionFailed, "designated vertex received an excluded color");
}

void extend_2_thread(const Graph& g, Coloring& f, VertexId x, VertexId y1, VertexId y2, VertexId y) {
  need(f.m() >= 4, "2-thread extension needs m >= 4");
  const VertexId path[] = {x, y1, y2, y};
  require_path(g, path);
  need(f.is_colored(x) && f.is_colored(y), "thread endpoints must be colored");
  need(f[x] != f[y], "endpoints of the 2-thread share color " + std::to_string(f[x]));
  require_uncolored(f, std::span<const VertexId>(path).subspan(1, 2));
  const RankMap r = ascending_ranks(f);
  Color c1 = r.color(1), c2 = r.color(2);
  if (c1 == f[x] || c2 == f[y]) std::swap(c1, c2);
  f.assign(y1, c1);
  f.assign(y2, c2);
  check_walk(f, path, "2-thread");
}

void extend_2_1_thread(const Graph& g, Coloring& f, VertexId x, VertexId y1, VertexId y2, VertexId y, VertexId y3,
                       VertexId z) {
  need(f.m() >= 4, "2-1-thread extension needs m >= 4");
  const VertexId p2[] = {x, y1, y2, y};
  const VertexId p1[] = {x, y3, z};
  require_path(g, p2);
  require_path(g, p1);
  need(f.is_colored(x) && f.is_colored(y) && f.is_colored(z), "x, y and z must be colored");
  need(f[x] != f[y] && f[x] != f[z], "f(x) must differ from f(y) and f(z)");
  const VertexId fresh[] = {y1, y2, y3};
  require_uncolored(f, fresh);
  const RankMap r = ascending_ranks(f);
  const int fx = r.rank(f[x]), fy = r.rank(f[y]), fz = r.rank(f[z]);
  int a = 0;
  if (fx <= 3) a = fx;
  else
    for (int k = 1; k <= 3 && !a; ++k)
      if (k != fy) a = k;
  int b = 0;
  for (int k = 1; k <= 3 && !b; ++k)
    if (k != a && k != fz) b = k;
  const int c = 6 - a - b;
  f.assign(y2, r.color(a));
  f.assign(y3, r.color(b));
  f.assign(y1, r.color(c));
  check_walk(f, p2, "2-1-thread");
  check_walk(f, p1, "2-1-thread");
}

// ---------------------------------------------------------------------------
// Subdivided stars and pairs of stars.

namespace {

std::vector<Leg> walk_legs(const Graph& h, VertexId root, VertexId skip) {
  std::vector<Leg> legs;
  for (VertexId first : h.neighbors(root)) {
    if (first == skip) continue;
    Leg leg{root, {}};
    VertexId prev = root, cur = first;
    while (true) {
      leg.vertices.push_back(cur);
      if (h.degree(cur) != 2) break;
      auto nb = h.neighbors(cur);
      VertexId next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    need(h.degree(cur) == 1, "leg from " + vname(root) + " does not end in a leaf");
    legs.push_back(std::move(leg));
  }
  return legs;
}

int count_legs(const std::vector<Leg>& legs, int l) {
  return static_cast<int>(std::count_if(legs.begin(), legs.end(), [&](const Leg& leg) { return leg.length() == l; }));
}

void check_lists(const Graph& h, const ListAssignment& lists, std::span<const VertexId> relaxed) {
  need(lists.m == 3, "list assignment must use colors 1..3");
  for (VertexId v : h.vertices()) {
    auto it = lists.lists.find(v);
    need(it != lists.lists.end(), "vertex " + vname(v) + " has no list");
    for (Color c : it->second) need(c >= 1 && c <= 3, "list color outside 1..3");
    const auto size = it->second.size();
    const bool is_relaxed = std::find(relaxed.begin(), relaxed.end(), v) != relaxed.end();
    if (is_relaxed) need(size >= 2, "root " + vname(v) + " needs at least two colors");
    else if (h.degree(v) == 1) need(size == 2, "leaf " + vname(v) + " needs a 2-list");
    else need(size == 3, "internal vertex " + vname(v) + " needs a full list");
  }
}

struct Spider {
  const Graph* h;
  std::vector<VertexId> roots;
  VertexId connector = kNoVertex;
  const std::vector<Leg>* legs;
  const ListAssignment* lists;
};

std::optional<Coloring> try_split(const Spider& sp, const std::vector<int>& p, Color c, Color c1, Color c2,
                                  const std::set<VertexId>& t_leaves) {
  const Graph& h = *sp.h;
  const ListAssignment& L = *sp.lists;
  const auto& legs = *sp.legs;
  Coloring out(3, h.id_bound());
  auto pc = [&](Color k) { return p[static_cast<std::size_t>(k - 1)]; };

  for (VertexId r : sp.roots) out.assign(r, c);
  for (const Leg& leg : legs)
    if (leg.length() == 4) out.assign(leg.vertices[1], c);
  for (VertexId v : t_leaves) out.assign(v, c);

  std::vector<VertexId> w1;  // W_{c'}
  for (const Leg& leg : legs) {
    if (leg.length() == 4) w1.push_back(leg.vertices[2]);
    if (leg.length() == 2 && !t_leaves.count(leg.leaf())) w1.push_back(leg.vertices[0]);
  }
  std::vector<VertexId> cands;
  for (const Leg& leg : legs)
    if (leg.length() == 4) cands.push_back(leg.vertices[0]);
  for (const Leg& leg : legs)
    if (leg.length() == 2 && t_leaves.count(leg.leaf())) cands.push_back(leg.vertices[0]);
  if (sp.connector != kNoVertex) cands.push_back(sp.connector);

  std::vector<std::pair<VertexId, VertexId>> one_swaps;
  std::size_t next = 0;
  for (const Leg& leg : legs)
    if (leg.length() == 1 && !L.allows(leg.leaf(), c2)) {
      if (next == cands.size()) return std::nullopt;
      one_swaps.emplace_back(leg.leaf(), cands[next]);
      w1.push_back(cands[next++]);
    }
  while (static_cast<int>(w1.size()) < pc(c1) && next < cands.size()) w1.push_back(cands[next++]);
  if (static_cast<int>(w1.size()) != pc(c1)) return std::nullopt;
  for (VertexId v : w1) out.assign(v, c1);
  for (VertexId v : h.vertices())
    if (!out.is_colored(v)) out.assign(v, c2);

  for (const Leg& leg : legs) {
    const VertexId z = leg.leaf();
    if (out[z] != c2 || L.allows(z, c2)) continue;
    VertexId zs = kNoVertex;
    if (leg.length() == 2) zs = leg.vertices[0];
    else if (leg.length() == 4) zs = leg.vertices[2];
    else
      for (auto [leaf, star] : one_swaps)
        if (leaf == z) zs = star;
    if (zs == kNoVertex || out[zs] != c1) return std::nullopt;
    out.swap_colors(z, zs);
  }
  if (!verify_descending_L(h, L, out).valid) return std::nullopt;
  return out;
}

Coloring spider_color(const Spider& sp) {
  const Graph& h = *sp.h;
  const ListAssignment& L = *sp.lists;
  const auto& legs = *sp.legs;
  const std::vector<int> p = target_sizes(static_cast<long long>(h.vertex_count()), 3);
  const int a4 = count_legs(legs, 4);
  for (Color c = 1; c <= 3; ++c) {
    if (!std::all_of(sp.roots.begin(), sp.roots.end(), [&](VertexId r) { return L.allows(r, c); })) continue;
    std::vector<Color> others;
    for (Color k = 1; k <= 3; ++k)
      if (k != c) others.push_back(k);
    std::stable_sort(others.begin(), others.end(), [&](Color u, Color v) { return p[static_cast<std::size_t>(u - 1)] > p[static_cast<std::size_t>(v - 1)]; });
    std::vector<VertexId> optional;
    for (int l : {2, 4})
      for (const Leg& leg : legs)
        if (leg.length() == l && L.allows(leg.leaf(), c)) optional.push_back(leg.leaf());
    const int k = p[static_cast<std::size_t>(c - 1)] - static_cast<int>(sp.roots.size()) - a4;
    if (k < 0 || k > static_cast<int>(optional.size())) continue;
    for (int order = 0; order < 2; ++order) {
      const Color c1 = others[static_cast<std::size_t>(order)], c2 = others[static_cast<std::size_t>(1 - order)];
      // Subsets of the optional leaves of size k, preferred ones first.
      std::vector<char> pick(optional.size(), 0);
      std::fill(pick.begin(), pick.begin() + k, 1);
      do {
        std::set<VertexId> t_leaves;
        for (std::size_t i = 0; i < optional.size(); ++i)
          if (pick[i]) t_leaves.insert(optional[i]);
        if (auto out = try_split(sp, p, c, c1, c2, t_leaves)) return *out;
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  throw Error(ErrorCode::ExtensionFailed, "no split into S_c, W_c', W_c'' worked");
}

}  // namespace

int StarInstance::a(int l) const {
  if (l == 0) return d_x - static_cast<int>(legs.size());
  return count_legs(legs, l);
}

StarInstance make_star_instance(const Graph& star, VertexId root, ListAssignment lists, int d_x) {
  star.require_vertex(root);
  StarInstance inst{star, root, walk_legs(star, root, kNoVertex), std::move(lists), d_x};
  need(static_cast<int>(inst.star.vertex_count()) == 1 + [&] {
    int n = 0;
    for (const Leg& leg : inst.legs) n += leg.length();
    return n;
  }(), "graph is not a subdivided star around the root");
  return inst;
}

Coloring reduce_star(const StarInstance& inst) {
  need(inst.d_x <= 6, "root degree exceeds 6");
  need(inst.d_x >= 3, "root must be a branch vertex");
  for (const Leg& leg : inst.legs)
    need(leg.length() == 1 || leg.length() == 2 || leg.length() == 4, "thread lengths must lie in {0,1,2,4}");
  need(inst.a(0) >= 0, "root degree smaller than its number of legs");
  const int a1 = inst.a(1), a2 = inst.a(2), a4 = inst.a(4);
  need(2 * a4 + a2 >= a1 + 1 + inst.eps(), "2a4 + a2 >= a1 + 1 + eps fails");
  need(a4 >= inst.d_x - 4, "a4 >= d(x) - 4 fails");
  const VertexId relaxed[] = {inst.root};
  check_lists(inst.star, inst.lists, relaxed);
  return spider_color({&inst.star, {inst.root}, kNoVertex, &inst.legs, &inst.lists});
}

int PairInstance::b(int l) const {
  const int n = count_legs(legs, l);
  return l == 1 ? n + 1 : n;
}

PairInstance make_pair_instance(const Graph& graph, VertexId x, VertexId y, ListAssignment lists, int d_x, int d_y) {
  graph.require_vertex(x);
  graph.require_vertex(y);
  VertexId w = kNoVertex;
  for (VertexId v : graph.neighbors(x))
    if (graph.degree(v) == 2 && graph.has_edge(v, y)) w = v;
  if (w == kNoVertex || x == y)
    throw Error(ErrorCode::NotOneThreadPair, "roots " + vname(x) + " and " + vname(y) + " are not joined by a 1-thread");
  PairInstance inst{graph, x, y, w, {}, std::move(lists), d_x, d_y};
  inst.legs = walk_legs(graph, x, w);
  auto ly = walk_legs(graph, y, w);
  inst.legs.insert(inst.legs.end(), ly.begin(), ly.end());
  int n = 3;
  for (const Leg& leg : inst.legs) n += leg.length();
  need(n == static_cast<int>(graph.vertex_count()), "graph is not the union of two subdivided stars");
  return inst;
}

Coloring reduce_pair(const PairInstance& inst) {
  need(inst.d_x + inst.d_y <= 8, "d(x) + d(y) exceeds 8");
  need(inst.d_x >= 3 && inst.d_y >= 3, "both roots must be branch vertices");
  for (const Leg& leg : inst.legs)
    need(leg.length() == 1 || leg.length() == 2 || leg.length() == 4, "thread lengths must lie in {0,1,2,4}");
  const int b1 = inst.b(1), b2 = inst.b(2), b4 = inst.b(4);
  need(2 * b4 + b2 >= b1 - 1 + inst.eps(), "2b4 + b2 >= b1 - 1 + eps fails");
  need(b4 >= 1, "b4 >= 1 fails");
  const VertexId relaxed[] = {inst.y};
  check_lists(inst.graph, inst.lists, relaxed);
  return spider_color({&inst.graph, {inst.x, inst.y}, inst.w, &inst.legs, &inst.lists});
}

Coloring color_bad_pair_m3(const Graph& h, const BadPairLabels& lb, const ListAssignment& lists) {
  const auto& xs = lb.xs;
  const auto& zs = lb.zs;
  std::vector<VertexId> all{lb.w1, lb.x, lb.w2, lb.y, lb.w3, lb.z, lb.w4};
  all.insert(all.end(), xs.begin(), xs.end());
  all.insert(all.end(), zs.begin(), zs.end());
  if (lb.y1 != kNoVertex) all.push_back(lb.y1);
  auto shape = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::ShapeMismatch, what);
  };
  for (VertexId v : all) shape(h.has_vertex(v), "labeled vertex missing from H");
  shape(std::set<VertexId>(all.begin(), all.end()).size() == all.size(), "labels are not distinct");
  shape(h.vertex_count() == all.size(), "H has unlabeled vertices");
  std::vector<std::pair<VertexId, VertexId>> edges{{lb.w1, lb.x}, {lb.x, lb.w2}, {lb.w2, lb.y}, {lb.y, lb.w3},
                                                   {lb.w3, lb.z}, {lb.z, lb.w4}, {lb.x, xs[0]},  {lb.z, zs[0]}};
  for (int i = 0; i < 3; ++i) {
    edges.emplace_back(xs[static_cast<std::size_t>(i)], xs[static_cast<std::size_t>(i) + 1]);
    edges.emplace_back(zs[static_cast<std::size_t>(i)], zs[static_cast<std::size_t>(i) + 1]);
  }
  if (lb.y1 != kNoVertex) edges.emplace_back(lb.y, lb.y1);
  for (auto [u, v] : edges) shape(h.has_edge(u, v), "missing edge " + vname(u) + "-" + vname(v));
  shape(h.edge_count() == edges.size(), "H has extra edges");
  need(lists.m == 3, "list assignment must use colors 1..3");

  // Base pattern U1', U2', U3' (with y1 in U1 when present).
  Coloring out(3, h.id_bound());
  for (VertexId v : {lb.w1, lb.w4, xs[0], xs[2], zs[2]}) out.assign(v, 1);
  for (VertexId v : {lb.w2, lb.w3, xs[3], zs[0], zs[3]}) out.assign(v, 2);
  for (VertexId v : {lb.x, lb.y, lb.z, xs[1], zs[1]}) out.assign(v, 3);
  if (lb.y1 != kNoVertex) out.assign(lb.y1, 1);
  else if (!lists.allows(lb.y, 3)) {
    // All classes have size 5 here, so any renaming stays descending.
    Color c = 0;
    for (Color k = 1; k <= 2 && !c; ++k)
      if (lists.allows(lb.y, k)) c = k;
    need(c != 0, "y has no allowed color");
    std::vector<Color> perm{0, 1, 2, 3};
    std::swap(perm[static_cast<std::size_t>(c)], perm[3]);
    out = apply_permutation(out, perm);
  }
  const std::pair<VertexId, VertexId> pairs[] = {
      {lb.w1, lb.w2}, {lb.w4, lb.w3}, {xs[3], xs[2]}, {zs[3], zs[2]}, {lb.y1, zs[0]}};
  for (auto [leaf, partner] : pairs) {
    if (leaf == kNoVertex) continue;
    if (!lists.allows(leaf, out[leaf])) out.swap_colors(leaf, partner);
  }
  if (!verify_descending_L(h, lists, out).valid)
    throw Error(ErrorCode::ExtensionFailed, "double-bad pattern did not repair into a valid L-coloring");
  return out;
}

}  // namespace equicolor
