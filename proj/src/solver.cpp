#include "equicolor/solver.hpp"

#include "equicolor/error.hpp"
#include "equicolor/lemmas.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace equicolor {

namespace {

std::string vname(VertexId v) { return std::to_string(v + 1); }

Error internal(const std::string& what) { return Error(ErrorCode::ExtensionFailed, what); }

}  // namespace

std::string_view kind_name(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::LongThread: return "LongThread";
    case ConfigKind::EqualEndpointThread: return "EqualEndpointThread";
    case ConfigKind::FourVertexOverload: return "FourVertexOverload";
    case ConfigKind::ThreeVertexOverload: return "ThreeVertexOverload";
    case ConfigKind::BadNeighborhood: return "BadNeighborhood";
    case ConfigKind::M3LongThread: return "M3LongThread";
    case ConfigKind::M3StarViolation: return "M3StarViolation";
    case ConfigKind::M3BadPairThread: return "M3BadPairThread";
    case ConfigKind::M3DoubleBad: return "M3DoubleBad";
  }
  return "?";
}

std::optional<ConfigKind> parse_kind(std::string_view name) {
  for (ConfigKind k : kAllKinds)
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

VertexId Config::anchor(std::string_view name) const {
  for (const auto& [key, v] : anchors)
    if (key == name) return v;
  return kNoVertex;
}

Catalog catalog_for(int m) { return m == 3 ? Catalog::M3 : Catalog::M4; }

// ---------------------------------------------------------------------------
// Finder

namespace {

std::vector<VertexId> join_through(const ThreadEnd& a, const ThreadEnd& b) {
  std::vector<VertexId> p{a.to};
  p.insert(p.end(), a.interior.rbegin(), a.interior.rend());
  p.push_back(a.from);
  p.insert(p.end(), b.interior.begin(), b.interior.end());
  p.push_back(b.to);
  return p;
}

void add_interior(std::vector<VertexId>& out, const ThreadEnd& e) {
  out.insert(out.end(), e.interior.begin(), e.interior.end());
}

std::vector<int> sorted_lengths(std::span<const ThreadEnd> ends) {
  std::vector<int> out;
  for (const ThreadEnd& e : ends) out.push_back(e.length());
  std::sort(out.begin(), out.end());
  return out;
}

bool has_cycle_end(std::span<const ThreadEnd> ends) {
  return std::any_of(ends.begin(), ends.end(), [](const ThreadEnd& e) { return e.is_cycle(); });
}

int total_length(std::span<const ThreadEnd> ends) {
  int t = 0;
  for (const ThreadEnd& e : ends) t += e.length();
  return t;
}

std::vector<const ThreadEnd*> of_length(std::span<const ThreadEnd> ends, int l) {
  std::vector<const ThreadEnd*> out;
  for (const ThreadEnd& e : ends)
    if (e.length() == l) out.push_back(&e);
  return out;
}

class Scanner {
 public:
  Scanner(const Graph& g, int m, const ThreadIndex& idx, bool all)
      : g_(g), m_(m), cat_(catalog_for(m)), idx_(idx), all_(all) {}

  std::vector<Config> run() {
    threads();
    if (!done()) overloads();
    if (!done()) neighborhoods();
    return std::move(out_);
  }

 private:
  bool done() const { return !all_ && !out_.empty(); }
  void emit(Config c) { out_.push_back(std::move(c)); }

  bool bad(VertexId v) const {
    if (g_.degree(v) != 3) return false;
    auto ends = idx_.ends(v);
    if (has_cycle_end(ends)) return false;
    return sorted_lengths(ends) == (cat_ == Catalog::M4 ? std::vector<int>{1, 1, 2} : std::vector<int>{1, 1, 4});
  }

  void threads() {
    for (const Thread& th : idx_.threads()) {
      if (done()) return;
      const int t = th.length();
      const bool long_ok = cat_ == Catalog::M4 ? t >= 3 : (t == 3 || t >= 5);
      if (th.is_cycle()) {
        const VertexId v0 = th.a;
        if (g_.degree(v0) == 3) {
          equal_endpoint(th);
          continue;
        }
        if (!long_ok) continue;
        Config c{long_kind(), "closed", v0, th.interior, {}, {}};
        std::vector<VertexId> path{v0};
        path.insert(path.end(), th.interior.begin(), th.interior.end());
        path.push_back(v0);
        c.paths.push_back(std::move(path));
        emit(std::move(c));
        continue;
      }
      if (!long_ok) continue;
      Config c{long_kind(), "open", kNoVertex, th.interior, {}, {}};
      std::vector<VertexId> path{th.a};
      path.insert(path.end(), th.interior.begin(), th.interior.end());
      path.push_back(th.b);
      c.paths.push_back(std::move(path));
      emit(std::move(c));
    }
  }

  ConfigKind long_kind() const { return cat_ == Catalog::M4 ? ConfigKind::LongThread : ConfigKind::M3LongThread; }

  void equal_endpoint(const Thread& th) {
    const VertexId v0 = th.a;
    std::vector<VertexId> cycle{v0};
    cycle.insert(cycle.end(), th.interior.begin(), th.interior.end());
    VertexId x = kNoVertex;
    for (VertexId w : g_.neighbors(v0))
      if (w != th.interior.front() && w != th.interior.back()) x = w;
    if (x == kNoVertex) return;
    Config c{ConfigKind::EqualEndpointThread, "anchor", v0, cycle, {{"x", x}}, {cycle}};
    if (g_.degree(x) == 2) {
      const ThreadEnd* q = nullptr;
      for (const ThreadEnd& e : idx_.ends(v0))
        if (!e.is_cycle() && e.length() > 0 && e.at(1) == x) q = &e;
      if (!q) return;
      const int t = th.length();
      if (cat_ == Catalog::M3 && !(t == 3 || t >= 5)) return;
      c.variant = "via-thread";
      add_interior(c.deletion, *q);
      c.paths.push_back(q->path());
    }
    emit(std::move(c));
  }

  void overloads() {
    for (VertexId x : g_.vertices()) {
      if (done()) return;
      const int d = g_.degree(x);
      if (d < 3) continue;
      auto ends = idx_.ends(x);
      if (has_cycle_end(ends)) continue;
      if (cat_ == Catalog::M4) {
        if (std::any_of(ends.begin(), ends.end(), [](const ThreadEnd& e) { return e.length() > 2; })) continue;
        const int t = total_length(ends);
        if (d == 4 && t >= 6) four_vertex(x, ends);
        else if (d == 3 && t >= 3) three_vertex(x, ends);
      } else {
        star_violation(x, ends);
      }
    }
  }

  void four_vertex(VertexId x, std::span<const ThreadEnd> ends) {
    auto twos = of_length(ends, 2);
    auto ones = of_length(ends, 1);
    auto zeros = of_length(ends, 0);
    Config c{ConfigKind::FourVertexOverload, "", x, {x}, {{"x", x}}, {}};
    if (twos.size() >= 3) {
      const ThreadEnd* fourth = twos.size() == 4 ? twos[3] : !ones.empty() ? ones[0] : zeros[0];
      if (fourth->length() == 0) {
        c.variant = "three-2-threads-0";
        c.paths = {join_through(*twos[1], *twos[2]), twos[0]->path()};
        c.anchors.emplace_back("y1", twos[0]->to);
        c.anchors.emplace_back("y4", fourth->to);
        for (int i = 0; i < 3; ++i) add_interior(c.deletion, *twos[static_cast<std::size_t>(i)]);
      } else {
        c.variant = "three-2-threads";
        c.paths = {join_through(*twos[2], *fourth), twos[1]->path(), twos[0]->path()};
        c.anchors.emplace_back("y1", twos[0]->to);
        c.anchors.emplace_back("y2", twos[1]->to);
        for (int i = 0; i < 3; ++i) add_interior(c.deletion, *twos[static_cast<std::size_t>(i)]);
        add_interior(c.deletion, *fourth);
      }
    } else if (twos.size() == 2 && ones.size() == 2) {
      c.variant = "two-2-threads";
      // Lemma-2 path y3 x3 x x2 z2 y2, then 2-thread x x1 z1 y1 with 1-thread x x4 y4.
      c.paths = {join_through(*ones[0], *twos[1]), twos[0]->path(), ones[1]->path()};
      c.anchors.emplace_back("y1", twos[0]->to);
      c.anchors.emplace_back("y4", ones[1]->to);
      for (const ThreadEnd* e : {twos[0], twos[1], ones[0], ones[1]}) add_interior(c.deletion, *e);
    } else {
      return;
    }
    emit(std::move(c));
  }

  void three_vertex(VertexId x, std::span<const ThreadEnd> ends) {
    auto twos = of_length(ends, 2);
    auto ones = of_length(ends, 1);
    auto zeros = of_length(ends, 0);
    const int t = total_length(ends);
    Config c{ConfigKind::ThreeVertexOverload, "", x, {x}, {{"x", x}}, {}};
    for (const ThreadEnd& e : ends) add_interior(c.deletion, e);
    if (twos.size() == 1 && ones.size() == 2) {
      if (m_ == 4) return;  // bad vertex
      c.variant = "bad-m5";
      c.paths = {ones[0]->path(), ones[1]->path(), twos[0]->path()};
    } else if (ones.size() == 3) {
      c.variant = "three-1-threads";
      c.paths = {ones[0]->path(), ones[1]->path(), ones[2]->path()};
    } else if (!twos.empty() && t >= 5) {
      c.variant = "heavy";
      std::vector<const ThreadEnd*> others;
      for (const ThreadEnd& e : ends)
        if (&e != twos[0]) others.push_back(&e);
      c.paths = {join_through(*others[0], *others[1]), twos[0]->path()};
    } else if (!twos.empty() && zeros.size() == 1) {
      c.variant = "zero-thread";
      std::vector<const ThreadEnd*> others;
      for (const ThreadEnd& e : ends)
        if (&e != zeros[0]) others.push_back(&e);
      c.paths = {join_through(*others[0], *others[1])};
      c.anchors.emplace_back("u", zeros[0]->to);
    } else {
      return;
    }
    emit(std::move(c));
  }

  void star_violation(VertexId x, std::span<const ThreadEnd> ends) {
    const int d = static_cast<int>(ends.size());
    if (d > 6) return;
    for (const ThreadEnd& e : ends)
      if (e.length() == 3 || e.length() > 4) return;
    std::array<int, 5> a{};
    for (const ThreadEnd& e : ends) ++a[static_cast<std::size_t>(e.length())];
    const int t = total_length(ends);
    bool violated = false;
    if (d == 3) violated = t >= 5 && !(a[4] == 1 && a[2] == 0 && a[1] == 2 && a[0] == 0);
    else if (d == 4) violated = t >= 8 && !(a[4] == 2 && a[2] == 0 && a[1] == 0 && a[0] == 2);
    else violated = a[4] >= d - 1;
    if (!violated || a[0] > 1) return;
    const int s = 1 + t;
    const int eps = (3 - s % 3) % 3;
    if (2 * a[4] + a[2] < a[1] + 1 + eps || a[4] < d - 4) return;
    Config c{ConfigKind::M3StarViolation, "star", x, {x}, {{"x", x}}, {}};
    for (const ThreadEnd& e : ends) add_interior(c.deletion, e);
    emit(std::move(c));
  }

  void neighborhoods() {
    if (cat_ == Catalog::M4) {
      if (m_ != 4) return;
      for (VertexId v : g_.vertices()) {
        if (done()) return;
        if (bad(v)) bad_one(v);
        if (!done() && g_.degree(v) == 4) bad_two(v);
      }
    } else {
      for (VertexId x : g_.vertices()) {
        if (done()) return;
        if (bad(x)) bad_m3(x);
      }
    }
  }

  // Bad x with a 1-thread x x4 y to a 3-vertex y with t(y) >= 2.
  void bad_one(VertexId x) {
    auto ends = idx_.ends(x);
    auto ones = of_length(ends, 1);
    const ThreadEnd* two = of_length(ends, 2)[0];
    for (int i = 0; i < 2; ++i) {
      if (done()) return;
      const ThreadEnd& exy = *ones[static_cast<std::size_t>(i)];
      const ThreadEnd& exu = *ones[static_cast<std::size_t>(1 - i)];
      const VertexId y = exy.to;
      if (g_.degree(y) != 3) continue;
      auto yends = idx_.ends(y);
      if (has_cycle_end(yends) || total_length(yends) < 2) continue;
      const ThreadEnd* back = nullptr;
      const ThreadEnd* other1 = nullptr;
      const ThreadEnd* third = nullptr;
      for (const ThreadEnd& e : yends) {
        if (e.length() == 1 && e.at(1) == exy.at(1)) back = &e;
        else if (e.length() == 1 && !other1) other1 = &e;
        else third = &e;
      }
      if (!back || !other1 || !third || (third->length() != 0 && third->length() != 2)) continue;
      Config c{ConfigKind::BadNeighborhood, "one", x, {x, y}, {}, {}};
      add_interior(c.deletion, *two);
      add_interior(c.deletion, exu);
      add_interior(c.deletion, exy);
      add_interior(c.deletion, *other1);
      c.anchors = {{"x", x},           {"x1", two->at(1)}, {"x2", two->at(2)},    {"u1", two->to},
                   {"x3", exu.at(1)},  {"u2", exu.to},     {"x4", exy.at(1)},     {"y", y},
                   {"y1", other1->at(1)}, {"z", other1->to}, {"u0", third->to}};
      if (third->length() == 2) {
        add_interior(c.deletion, *third);
        c.anchors.emplace_back("y2", third->at(1));
        c.anchors.emplace_back("y3", third->at(2));
      }
      emit(std::move(c));
    }
  }

  // 4-vertex y loosely 1-adjacent to two bad vertices.
  void bad_two(VertexId y) {
    auto ends = idx_.ends(y);
    if (has_cycle_end(ends)) return;
    std::vector<const ThreadEnd*> to_bad, rest;
    for (const ThreadEnd& e : ends) {
      if (e.length() == 1 && to_bad.size() < 2 && bad(e.to)) to_bad.push_back(&e);
      else rest.push_back(&e);
    }
    if (to_bad.size() < 2) return;
    for (const ThreadEnd* e : rest)
      if (e->length() > 2) return;
    Config c{ConfigKind::BadNeighborhood, "", y, {y}, {{"y", y}}, {}};
    // x side: thread x x4 y; z side: thread z y1 y.
    auto label_side = [&](const ThreadEnd& from_y, const char* root, const char* link, const char* a1, const char* a2,
                          const char* ua, const char* b1, const char* ub) {
      const VertexId r = from_y.to;
      c.deletion.push_back(r);
      c.deletion.push_back(from_y.at(1));
      c.anchors.emplace_back(root, r);
      c.anchors.emplace_back(link, from_y.at(1));
      for (const ThreadEnd& e : idx_.ends(r)) {
        if (e.length() == 2) {
          add_interior(c.deletion, e);
          c.anchors.emplace_back(a1, e.at(1));
          c.anchors.emplace_back(a2, e.at(2));
          c.anchors.emplace_back(ua, e.to);
        } else if (e.at(1) != from_y.at(1)) {
          add_interior(c.deletion, e);
          c.anchors.emplace_back(b1, e.at(1));
          c.anchors.emplace_back(ub, e.to);
        }
      }
    };
    label_side(*to_bad[0], "x", "x4", "x1", "x2", "u1", "x3", "u2");
    label_side(*to_bad[1], "z", "y1", "z1", "z2", "u3", "z3", "u4");
    // y's two remaining threads; 2-threads become pendant paths.
    std::vector<const ThreadEnd*> one_threads, ends0;
    for (const ThreadEnd* e : rest) {
      if (e->length() == 2) {
        add_interior(c.deletion, *e);
        c.paths.push_back({e->to, e->at(2), e->at(1)});
        ends0.push_back(e);
      } else if (e->length() == 1) {
        one_threads.push_back(e);
      } else {
        ends0.push_back(e);
      }
    }
    auto far = [](const ThreadEnd* e) { return e->length() == 2 ? e->at(1) : e->to; };
    if (one_threads.empty()) {
      c.variant = "two-k0";
      c.anchors.emplace_back("u5", far(ends0[0]));
      c.anchors.emplace_back("u6", far(ends0[1]));
    } else {
      add_interior(c.deletion, *one_threads[0]);
      c.anchors.emplace_back("y2", one_threads[0]->at(1));
      c.anchors.emplace_back("u5", one_threads[0]->to);
      if (one_threads.size() == 2) {
        c.variant = "two-k2";
        add_interior(c.deletion, *one_threads[1]);
        c.anchors.emplace_back("y3", one_threads[1]->at(1));
        c.anchors.emplace_back("u6", one_threads[1]->to);
      } else {
        c.variant = "two-k1";
        c.anchors.emplace_back("u6", far(ends0[0]));
      }
    }
    emit(std::move(c));
  }

  void bad_m3(VertexId x) {
    auto ends = idx_.ends(x);
    auto ones = of_length(ends, 1);
    const ThreadEnd* four = of_length(ends, 4)[0];
    for (int i = 0; i < 2; ++i) {
      if (done()) return;
      const ThreadEnd& exy = *ones[static_cast<std::size_t>(i)];
      const ThreadEnd& exw = *ones[static_cast<std::size_t>(1 - i)];
      const VertexId y = exy.to;
      if (g_.degree(y) != 3) continue;
      auto yends = idx_.ends(y);
      if (has_cycle_end(yends)) continue;
      const bool heavy = std::any_of(yends.begin(), yends.end(), [](const ThreadEnd& e) { return e.length() >= 2; });
      if (heavy) {
        pair_thread(x, y, ends, yends, exy);
        continue;
      }
      for (const ThreadEnd& ez : yends) {
        if (done()) return;
        if (ez.length() != 1 || ez.at(1) == exy.at(1) || ez.to == x || !bad(ez.to)) continue;
        const VertexId z = ez.to;
        const ThreadEnd* third = nullptr;
        for (const ThreadEnd& e : yends)
          if (&e != &ez && e.at(1) != exy.at(1)) third = &e;
        Config c{ConfigKind::M3DoubleBad, "", y, {}, {}, {}};
        const ThreadEnd* zfour = nullptr;
        const ThreadEnd* zw = nullptr;
        for (const ThreadEnd& e : idx_.ends(z)) {
          if (e.length() == 4) zfour = &e;
          else if (e.at(1) != ez.at(1)) zw = &e;
        }
        c.anchors = {{"w1", exw.at(1)}, {"x", x}, {"w2", exy.at(1)}, {"y", y}, {"w3", ez.at(1)}, {"z", z}, {"w4", zw->at(1)}};
        for (int k = 1; k <= 4; ++k) {
          c.anchors.emplace_back("x" + std::to_string(k), four->at(k));
          c.anchors.emplace_back("z" + std::to_string(k), zfour->at(k));
        }
        c.variant = "y-0-thread";
        if (third->length() == 1) {
          c.variant = "y-1-thread";
          c.anchors.emplace_back("y1", third->at(1));
        }
        for (const auto& [name, v] : c.anchors) c.deletion.push_back(v);
        emit(std::move(c));
      }
    }
  }

  void pair_thread(VertexId x, VertexId y, std::span<const ThreadEnd> xends, std::span<const ThreadEnd> yends,
                   const ThreadEnd& exy) {
    for (const ThreadEnd& e : yends)
      if (e.length() == 3 || e.length() > 4) return;
    int b1 = 1, b2 = 0, b4 = 0, s = 3;
    Config c{ConfigKind::M3BadPairThread, "pair", x, {x, y, exy.at(1)}, {{"x", x}, {"y", y}}, {}};
    for (auto side : {xends, yends})
      for (const ThreadEnd& e : side) {
        if (e.at(1) == exy.at(1)) continue;
        if (e.to == x || e.to == y) return;
        s += e.length();
        if (e.length() == 1) ++b1;
        if (e.length() == 2) ++b2;
        if (e.length() == 4) ++b4;
        add_interior(c.deletion, e);
      }
    const int eps = (3 - s % 3) % 3;
    if (2 * b4 + b2 < b1 - 1 + eps || b4 < 1) return;
    emit(std::move(c));
  }

  const Graph& g_;
  int m_;
  Catalog cat_;
  const ThreadIndex& idx_;
  bool all_;
  std::vector<Config> out_;
};

}  // namespace

Config find_config(const Graph& g, int m, const ThreadIndex& idx) {
  auto found = Scanner(g, m, idx, false).run();
  if (found.empty())
    throw Error(ErrorCode::NoConfigFound, "no reducible configuration in a graph with " +
                                              std::to_string(g.vertex_count()) + " vertices for m = " +
                                              std::to_string(m));
  return std::move(found.front());
}

Config find_config(const Graph& g, int m) {
  ThreadIndex idx(g);
  return find_config(g, m, idx);
}

std::vector<Config> all_configs(const Graph& g, int m) {
  ThreadIndex idx(g);
  return Scanner(g, m, idx, true).run();
}

// ---------------------------------------------------------------------------
// Extension

namespace {

class Extender {
 public:
  Extender(const Graph& h, const Config& c, Coloring& f) : h_(h), c_(c), f_(f) {}

  void run() {
    switch (c_.kind) {
      case ConfigKind::LongThread:
      case ConfigKind::M3LongThread: extend_long_thread(h_, f_, c_.paths[0]); break;
      case ConfigKind::EqualEndpointThread:
        if (c_.variant == "anchor") extend_cycle_anchor(h_, f_, c_.paths[0], a("x"));
        else extend_cycle_via_thread(h_, f_, c_.paths[0], c_.paths[1]);
        break;
      case ConfigKind::FourVertexOverload: four_vertex(); break;
      case ConfigKind::ThreeVertexOverload: three_vertex(); break;
      case ConfigKind::BadNeighborhood:
        if (c_.variant == "one") bad_one();
        else bad_two();
        break;
      case ConfigKind::M3StarViolation:
      case ConfigKind::M3BadPairThread:
      case ConfigKind::M3DoubleBad: list_coloring(); break;
    }
  }

 private:
  VertexId a(std::string_view name) const {
    VertexId v = c_.anchor(name);
    if (v == kNoVertex) throw internal("configuration lacks anchor " + std::string(name));
    return v;
  }
  Color col(std::string_view name) const { return f_[a(name)]; }

  void lemma2(const std::vector<VertexId>& path, VertexId x, Color avoid1, Color avoid2 = 0) {
    extend_45_thread(h_, f_, path, x, avoid1, avoid2);
  }
  void lemma3(const std::vector<VertexId>& p) { extend_2_thread(h_, f_, p[0], p[1], p[2], p[3]); }

  void four_vertex() {
    const VertexId x = a("x");
    if (c_.variant == "three-2-threads") {
      lemma2(c_.paths[0], x, col("y1"), col("y2"));
      lemma3(c_.paths[1]);
      lemma3(c_.paths[2]);
    } else if (c_.variant == "three-2-threads-0") {
      lemma2(c_.paths[0], x, col("y1"), col("y4"));
      lemma3(c_.paths[1]);
    } else {
      lemma2(c_.paths[0], x, col("y1"), col("y4"));
      const auto& t2 = c_.paths[1];
      const auto& t1 = c_.paths[2];
      extend_2_1_thread(h_, f_, x, t2[1], t2[2], t2[3], t1[1], t1[2]);
    }
  }

  // Tries rank permutations of 1..k on `targets` in lexicographic order.
  void assign_first_permutation(const std::vector<VertexId>& targets, int k,
                                const std::function<bool(const std::vector<Color>&)>& ok) {
    const RankMap r = ascending_ranks(f_);
    std::vector<int> ranks(static_cast<std::size_t>(k));
    std::iota(ranks.begin(), ranks.end(), 1);
    do {
      std::vector<Color> colors;
      for (std::size_t i = 0; i < targets.size(); ++i) colors.push_back(r.color(ranks[i]));
      if (ok(colors)) {
        for (std::size_t i = 0; i < targets.size(); ++i) f_.assign(targets[i], colors[i]);
        return;
      }
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    throw internal("no admissible color permutation at vertex " + vname(c_.center));
  }

  void three_vertex() {
    const VertexId x = a("x");
    if (c_.variant == "bad-m5") {
      // 1-threads x x1 y1, x x2 y2; 2-thread x x3 x4 y3.
      const auto& p1 = c_.paths[0];
      const auto& p2 = c_.paths[1];
      const auto& p3 = c_.paths[2];
      const Color fy1 = f_[p1[2]], fy2 = f_[p2[2]], fy3 = f_[p3[3]];
      assign_first_permutation({p1[1], p2[1], p3[2], x, p3[1]}, 5, [&](const std::vector<Color>& c) {
        return c[0] != fy1 && c[1] != fy2 && c[2] != fy3;
      });
    } else if (c_.variant == "three-1-threads") {
      const Color f1 = f_[c_.paths[0][2]], f2 = f_[c_.paths[1][2]], f3 = f_[c_.paths[2][2]];
      assign_first_permutation({c_.paths[0][1], c_.paths[1][1], c_.paths[2][1], x}, 4,
                               [&](const std::vector<Color>& c) { return c[0] != f1 && c[1] != f2 && c[2] != f3; });
    } else if (c_.variant == "heavy") {
      lemma2(c_.paths[0], x, f_[c_.paths[1][3]]);
      lemma3(c_.paths[1]);
    } else {
      lemma2(c_.paths[0], x, col("u"));
    }
  }

  // Two-vertex pendant path u p1 p2 hanging off a colored vertex u.
  void pendant(const std::vector<VertexId>& p) {
    const RankMap r = ascending_ranks(f_);
    Color c1 = r.color(1), c2 = r.color(2);
    if (c1 == f_[p[0]]) std::swap(c1, c2);
    f_.assign(p[1], c1);
    f_.assign(p[2], c2);
  }

  void bad_one() {
    const VertexId x = a("x"), y = a("y");
    const bool with_b = c_.anchor("y2") != kNoVertex;
    if (with_b) pendant({a("u0"), a("y3"), a("y2")});
    const Color y_block = with_b ? col("y2") : col("u0");
    const RankMap r = ascending_ranks(f_);
    std::vector<Color> used;
    auto pick = [&](std::initializer_list<Color> banned) {
      for (int k = 1; k <= 4; ++k) {
        const Color c = r.color(k);
        if (std::find(used.begin(), used.end(), c) != used.end()) continue;
        if (std::find(banned.begin(), banned.end(), c) != banned.end()) continue;
        used.push_back(c);
        return c;
      }
      throw internal("bad neighborhood: no color left near vertex " + vname(x));
    };
    const Color c1 = pick({col("u1"), col("u2")});
    const Color c2 = pick({y_block});
    const Color c3 = pick({col("z")});
    const Color c4 = pick({});
    f_.assign(x, c1);
    f_.assign(y, c2);
    f_.assign(a("y1"), c3);
    f_.assign(a("x4"), c4);
    extend_2_1_thread(h_, f_, x, a("x1"), a("x2"), a("u1"), a("x3"), a("u2"));
  }

  void bad_two() {
    for (const auto& p : c_.paths) pendant(p);
    const VertexId x = a("x"), y = a("y"), z = a("z"), x4 = a("x4"), y1 = a("y1");
    const std::vector<VertexId> xpath{a("u1"), a("x2"), a("x1"), x, a("x3"), a("u2")};
    const std::vector<VertexId> zpath{a("u3"), a("z2"), a("z1"), z, a("z3"), a("u4")};
    if (c_.variant == "two-k0") {
      lemma2({kNoVertex, y1, y, x4, x, kNoVertex}, y, col("u5"), col("u6"));
      const Color fu1 = col("u1"), fu2 = col("u2");
      auto clash = [&](VertexId v) { return f_[v] == fu1 || f_[v] == fu2; };
      if (clash(x)) {
        const VertexId partner = !clash(x4) ? x4 : y1;
        if (clash(partner)) throw internal("bad neighborhood: no swap partner for vertex " + vname(x));
        f_.swap_colors(x, partner);
      }
      lemma2(zpath, z, f_[y1]);
      extend_2_1_thread(h_, f_, x, a("x1"), a("x2"), a("u1"), a("x3"), a("u2"));
      return;
    }
    const RankMap r = ascending_ranks(f_);
    const Color fu5 = col("u5"), fu6 = col("u6");
    std::vector<int> free, rest;
    for (int k = 1; k <= 4; ++k) {
      const Color c = r.color(k);
      if (free.size() < 2 && c != fu5 && c != fu6) free.push_back(k);
      else rest.push_back(k);
    }
    if (free.size() < 2) throw internal("bad neighborhood: fewer than two free colors at vertex " + vname(y));
    const int ra = free[0], rb = free[1], rc = rest[0], rd = rest[1];
    f_.assign(a("y2"), r.color(ra));
    if (c_.variant == "two-k2") {
      f_.assign(a("y3"), r.color(rb));
      if (rc == 1) {
        f_.assign(x4, r.color(1));
        f_.assign(y1, r.color(1));
        f_.assign(y, r.color(rd));
      } else {
        f_.assign(y, r.color(rc));
        f_.assign(x4, r.color(rd));
        f_.assign(y1, r.color(1));
      }
    } else {
      f_.assign(y1, r.color(rb));
      Color cy = r.color(rc), cx4 = r.color(rd);
      if (cy == fu6) std::swap(cy, cx4);
      f_.assign(y, cy);
      f_.assign(x4, cx4);
    }
    lemma2(xpath, x, f_[x4]);
    lemma2(zpath, z, f_[y1]);
  }

  void list_coloring() {
    const Graph sub = induced_subgraph(h_, c_.deletion);
    const ListAssignment colors = lists_from_boundary(h_, c_.deletion, f_, 3);
    const RankMap r = ascending_ranks(f_);
    ListAssignment ranks;
    ranks.m = 3;
    for (const auto& [v, list] : colors.lists) {
      auto& out = ranks.lists[v];
      for (Color c : list) out.push_back(r.rank(c));
      std::sort(out.begin(), out.end());
    }
    auto host_degree = [&](VertexId v) {
      std::set<VertexId> del(c_.deletion.begin(), c_.deletion.end());
      int d = 0;
      for (VertexId w : h_.neighbors(v))
        if (f_.is_colored(w) || del.count(w)) ++d;
      return d;
    };
    Coloring out;
    if (c_.kind == ConfigKind::M3StarViolation) {
      out = reduce_star(make_star_instance(sub, a("x"), ranks, host_degree(a("x"))));
    } else if (c_.kind == ConfigKind::M3BadPairThread) {
      out = reduce_pair(
          make_pair_instance(sub, a("x"), a("y"), ranks, host_degree(a("x")), host_degree(a("y"))));
    } else {
      BadPairLabels lb;
      lb.w1 = a("w1");
      lb.x = a("x");
      lb.w2 = a("w2");
      lb.y = a("y");
      lb.w3 = a("w3");
      lb.z = a("z");
      lb.w4 = a("w4");
      for (int k = 0; k < 4; ++k) {
        lb.xs[static_cast<std::size_t>(k)] = a("x" + std::to_string(k + 1));
        lb.zs[static_cast<std::size_t>(k)] = a("z" + std::to_string(k + 1));
      }
      lb.y1 = c_.anchor("y1");
      out = color_bad_pair_m3(sub, lb, ranks);
    }
    for (VertexId v : c_.deletion) f_.assign(v, r.color(out[v]));
  }

  const Graph& h_;
  const Config& c_;
  Coloring& f_;
};

// The new vertices must be properly colored against colored neighbours and
// the class sizes must stay balanced.
void check_step(const Graph& h, const Config& c, const Coloring& f) {
  for (VertexId v : c.deletion) {
    if (!f.is_colored(v)) throw internal(std::string(kind_name(c.kind)) + " left vertex " + vname(v) + " uncolored");
    for (VertexId w : h.neighbors(v))
      if (f[w] == f[v])
        throw internal(std::string(kind_name(c.kind)) + " gave adjacent vertices " + vname(v) + " and " + vname(w) +
                       " the same color");
  }
  auto sizes = f.class_sizes();
  auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  if (*hi - *lo > 1) throw internal(std::string(kind_name(c.kind)) + " unbalanced the color classes");
}

}  // namespace

void extend_config(const Graph& host, const Config& cfg, Coloring& f) {
  for (VertexId v : cfg.deletion)
    if (f.is_colored(v)) throw Error(ErrorCode::PreconditionViolated, "vertex " + vname(v) + " is already colored");
  f.reserve_ids(host.id_bound());
  Extender(host, cfg, f).run();
  check_step(host, cfg, f);
}

// ---------------------------------------------------------------------------
// Driver

Coloring color_cycle(std::span<const VertexId> walk, int m, VertexId id_bound) {
  const int n = static_cast<int>(walk.size());
  if (m < 1) throw Error(ErrorCode::InvalidColorCount, "m = " + std::to_string(m));
  if (n < 3) throw Error(ErrorCode::PreconditionViolated, "a cycle needs at least 3 vertices");
  if (m == 2 && n % 2 == 1) throw Error(ErrorCode::Infeasible, "odd cycle with 2 colors");
  if (m == 1) throw Error(ErrorCode::Infeasible, "a cycle needs at least 2 colors");
  std::vector<Color> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = i % m + 1;
  if (n % m == 1) std::swap(c[static_cast<std::size_t>(n - 1)], c[static_cast<std::size_t>(n - 2)]);
  Coloring f(m, id_bound);
  for (int i = 0; i < n; ++i) f.assign(walk[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(i)]);
  return f;
}

Coloring color_cycle(int n, int m) {
  std::vector<VertexId> walk(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(walk.begin(), walk.end(), 0);
  return color_cycle(walk, m, std::max(n, 0));
}

std::string hypothesis_failure(const Graph& g, int m) {
  if (m < 3) return "m = " + std::to_string(m) + " is below 3";
  if (g.empty()) return "graph is empty";
  if (g.min_degree() < 2) return "minimum degree " + std::to_string(g.min_degree()) + " is below 2";
  const int need_girth = m == 3 ? 14 : 10;
  const Rational mad_bound = m == 3 ? Rational(7, 3) : Rational(5, 2);
  const Girth gi = girth(g);
  if (gi && *gi < need_girth)
    return "girth " + std::to_string(*gi) + " is below " + std::to_string(need_girth);
  const Rational mad = mad_exact(g);
  if (!(mad < mad_bound)) return "mad " + to_string(mad) + " is not below " + to_string(mad_bound);
  return {};
}

std::optional<int> upper_threshold(const Graph& g) {
  if (g.empty() || g.min_degree() < 2) return std::nullopt;
  const Girth gi = girth(g);
  const Rational mad = mad_exact(g);
  const int gv = gi ? *gi : std::numeric_limits<int>::max();
  if (gv >= 14 && mad < Rational(7, 3)) return 3;
  if (gv >= 10 && mad < Rational(5, 2)) return 4;
  return std::nullopt;
}

namespace {

Coloring base_coloring(const Graph& g, int m, const ThreadIndex& idx) {
  Coloring f(m, g.id_bound());
  if (static_cast<int>(g.vertex_count()) <= m) {
    Color c = 1;
    for (VertexId v : g.vertices()) f.assign(v, c++);
    return f;
  }
  if (!idx.branch_vertices().empty()) throw internal("base case reached with a branch vertex");
  for (const auto& walk : idx.pure_cycles()) f = merge_components(f, color_cycle(walk, m, g.id_bound()));
  return f;
}

}  // namespace

SolveResult solve(const Graph& g, int m, const SolveOptions& options) {
  if (m < 1) throw Error(ErrorCode::InvalidColorCount, "m = " + std::to_string(m));
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
  if (options.check_hypotheses) {
    const std::string why = hypothesis_failure(g, m);
    if (!why.empty()) throw Error(ErrorCode::HypothesisViolation, why);
  }
  SolveResult result;
  std::vector<Config> stack;
  Graph cur = g;
  Coloring f;
  while (true) {
    if (static_cast<int>(cur.vertex_count()) <= m) {
      f = base_coloring(cur, m, ThreadIndex(cur));
      break;
    }
    if (cur.min_degree() < 2) throw internal("minimum degree dropped below 2 during reduction");
    ThreadIndex idx(cur);
    if (idx.branch_vertices().empty()) {
      f = base_coloring(cur, m, idx);
      break;
    }
    Config cfg = find_config(cur, m, idx);
    cur = delete_vertices(cur, cfg.deletion);
    stack.push_back(std::move(cfg));
  }
  f.reserve_ids(g.id_bound());
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    extend_config(g, *it, f);
    if (options.paranoid) {
      std::vector<VertexId> dom = f.domain();
      const auto rep = verify_equitable(induced_subgraph(g, dom), f);
      if (!rep.valid) throw internal("intermediate coloring after " + std::string(kind_name(it->kind)) + " is not equitable");
    }
  }
  const auto rep = verify_equitable(g, f);
  if (!rep.valid) throw internal("final coloring failed verification");
  result.steps = static_cast<int>(stack.size());
  if (options.trace) result.trace = std::move(stack);
  result.coloring = std::move(f);
  return result;
}

Coloring equitable_color(const Graph& g, int m, const SolveOptions& options) {
  return solve(g, m, options).coloring;
}

}  // namespace equicolor
