#include "equicolor/discharge.hpp"

#include "equicolor/error.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace equicolor {

namespace {

std::vector<int> sorted_lengths(std::span<const ThreadEnd> ends) {
  std::vector<int> l;
  for (const ThreadEnd& e : ends) l.push_back(e.length());
  std::sort(l.rbegin(), l.rend());
  return l;
}

int load(std::span<const ThreadEnd> ends) {
  int t = 0;
  for (const ThreadEnd& e : ends) t += e.length();
  return t;
}

bool long_thread(int len, DischargeMode mode) {
  return mode == DischargeMode::M4 ? len >= 3 : len == 3 || len >= 5;
}

std::set<VertexId> config_vertices(const Config& c) {
  std::set<VertexId> s(c.deletion.begin(), c.deletion.end());
  if (c.center != kNoVertex) s.insert(c.center);
  for (const auto& [name, v] : c.anchors) s.insert(v);
  for (const auto& p : c.paths) s.insert(p.begin(), p.end());
  return s;
}

}  // namespace

std::string_view mode_name(DischargeMode mode) { return mode == DischargeMode::M4 ? "m4" : "m3"; }

std::optional<DischargeMode> parse_mode(std::string_view name) {
  if (name == "m4") return DischargeMode::M4;
  if (name == "m3") return DischargeMode::M3;
  return std::nullopt;
}

Rational mode_d0(DischargeMode mode) { return mode == DischargeMode::M4 ? Rational(5, 2) : Rational(7, 3); }

Rational girth_d0(int g) {
  if (g <= 2) throw Error(ErrorCode::PreconditionViolated, "girth must exceed 2");
  return Rational(2 * g, g - 2);
}

Rational ChargeLedger::total_initial() const {
  Rational s = 0;
  for (const Rational& r : initial) s += r;
  return s;
}

Rational ChargeLedger::total_final() const {
  Rational s = 0;
  for (const Rational& r : final) s += r;
  return s;
}

ChargeLedger charges_init(const Graph& g, const Rational& d0) {
  ChargeLedger l;
  l.d0 = d0;
  l.initial.assign(static_cast<std::size_t>(g.id_bound()), Rational(0));
  for (VertexId v : g.vertices()) l.initial[static_cast<std::size_t>(v)] = Rational(g.degree(v)) - d0;
  l.final = l.initial;
  return l;
}

bool is_bad(const ThreadIndex& idx, VertexId v, DischargeMode mode) {
  if (idx.graph().degree(v) != 3) return false;
  auto ends = idx.ends(v);
  if (std::any_of(ends.begin(), ends.end(), [](const ThreadEnd& e) { return e.is_cycle(); })) return false;
  return sorted_lengths(ends) == (mode == DischargeMode::M4 ? std::vector<int>{2, 1, 1} : std::vector<int>{4, 1, 1});
}

ChargeLedger apply_rules(ChargeLedger ledger, const Graph& g, DischargeMode mode) {
  ThreadIndex idx(g);
  for (const Thread& th : idx.threads())
    if (th.is_cycle())
      throw Error(ErrorCode::PreconditionViolated, "thread-cycle at vertex " + std::to_string(th.a + 1));
  const Rational unit = mode == DischargeMode::M4 ? Rational(1, 4) : Rational(1, 6);
  auto send = [&](VertexId from, VertexId to, const char* rule) {
    ledger.transfers.push_back({from, to, unit, rule});
    ledger.final[static_cast<std::size_t>(from)] -= unit;
    ledger.final[static_cast<std::size_t>(to)] += unit;
  };
  for (const Thread& th : idx.threads())
    for (VertexId w : th.interior) {
      send(th.a, w, "R1");
      send(th.b, w, "R1");
    }
  for (VertexId x : idx.branch_vertices()) {
    if (!is_bad(idx, x, mode)) continue;
    for (const ThreadEnd& e : idx.ends(x))
      if (e.length() == 1) send(e.to, x, "R2");
  }
  return ledger;
}

std::vector<std::string> claim_violations(const ThreadIndex& idx, VertexId v, DischargeMode mode) {
  const Graph& g = idx.graph();
  std::vector<std::string> out;
  if (!idx.is_branch(v)) {
    const int id = idx.thread_of(v);
    if (id >= 0) {
      const Thread& th = idx.threads()[static_cast<std::size_t>(id)];
      if (th.is_cycle()) out.emplace_back("thread-cycle");
      else if (long_thread(th.length(), mode)) out.emplace_back("long-thread");
    }
    return out;
  }
  auto ends = idx.ends(v);
  const int d = g.degree(v);
  const int t = load(ends);
  if (std::any_of(ends.begin(), ends.end(), [](const ThreadEnd& e) { return e.is_cycle(); }))
    out.emplace_back("thread-cycle");
  if (std::any_of(ends.begin(), ends.end(), [&](const ThreadEnd& e) { return long_thread(e.length(), mode); }))
    out.emplace_back("long-thread");
  const bool bad = is_bad(idx, v, mode);
  int bad_nbrs = 0;
  bool bad_nbr = false;
  for (const ThreadEnd& e : ends)
    if (e.length() == 1 && e.to != v && is_bad(idx, e.to, mode)) {
      ++bad_nbrs;
      bad_nbr = true;
    }
  if (mode == DischargeMode::M4) {
    if (d == 3 && t >= 3 && !bad) out.emplace_back("3-vertex-overload");
    if (d == 4 && t >= 6) out.emplace_back("4-vertex-overload");
    if (bad_nbr && d == 3 && t >= 2) out.emplace_back("bad-neighbor-load");
    if (d == 4 && bad_nbrs >= 2) out.emplace_back("two-bad-neighbors");
  } else {
    std::array<int, 5> a{};
    for (const ThreadEnd& e : ends)
      if (e.length() <= 4) ++a[static_cast<std::size_t>(e.length())];
    if (d == 3 && t >= 5 && !bad) out.emplace_back("3-vertex-overload");
    if (d == 4 && t >= 8 && !(a[4] == 2 && a[0] == 2)) out.emplace_back("4-vertex-overload");
    if ((d == 5 || d == 6) && a[4] >= d - 1) out.emplace_back("high-vertex-overload");
    if (bad_nbr && d == 3 && std::any_of(ends.begin(), ends.end(), [](const ThreadEnd& e) { return e.length() >= 2; }))
      out.emplace_back("bad-neighbor-load");
    if (d == 3 && bad_nbrs >= 2) out.emplace_back("two-bad-neighbors");
  }
  return out;
}

std::vector<VertexId> loose_ball(const ThreadIndex& idx, VertexId v) {
  std::set<VertexId> s{v};
  if (idx.is_branch(v)) {
    for (const ThreadEnd& e : idx.ends(v))
      for (int k = 1; k <= std::min(2, e.length() + 1); ++k) s.insert(e.at(k));
  } else if (const int id = idx.thread_of(v); id >= 0) {
    const Thread& th = idx.threads()[static_cast<std::size_t>(id)];
    const auto pos = static_cast<int>(std::find(th.interior.begin(), th.interior.end(), v) - th.interior.begin());
    if (pos <= 1) s.insert(th.a);
    if (th.length() - 1 - pos <= 1) s.insert(th.b);
  }
  return {s.begin(), s.end()};
}

AuditReport audit(const Graph& g, DischargeMode mode) {
  AuditReport r;
  r.mode = mode;
  r.ledger = apply_rules(charges_init(g, mode_d0(mode)), g, mode);
  r.total = r.ledger.total_initial();
  r.conserved = r.total == r.ledger.total_final();
  r.total_negative = r.total < 0;
  ThreadIndex idx(g);
  std::set<VertexId> on_cycle;
  for (const auto& c : idx.pure_cycles()) on_cycle.insert(c.begin(), c.end());
  r.pure_cycle = !on_cycle.empty();
  std::optional<std::vector<Config>> configs;
  std::vector<std::set<VertexId>> config_sets;
  for (VertexId v : g.vertices()) {
    const Rational& c = r.ledger.final[static_cast<std::size_t>(v)];
    if (c >= 0) continue;
    NegativeVertex nv;
    nv.vertex = v;
    nv.charge = c;
    nv.on_pure_cycle = on_cycle.count(v) > 0;
    if (!nv.on_pure_cycle) {
      const auto ball = loose_ball(idx, v);
      for (VertexId w : ball)
        for (auto& tag : claim_violations(idx, w, mode)) nv.violations.emplace_back(w, std::move(tag));
      if (!configs) {
        configs = all_configs(g, mode == DischargeMode::M4 ? 4 : 3);
        for (const Config& cfg : *configs) config_sets.push_back(config_vertices(cfg));
      }
      for (std::size_t i = 0; i < configs->size() && !nv.witness; ++i)
        if (std::any_of(ball.begin(), ball.end(), [&](VertexId w) { return config_sets[i].count(w) > 0; }))
          nv.witness = (*configs)[i];
      nv.falsified = !nv.witness;
      if (nv.falsified) ++r.falsified;
    }
    r.negatives.push_back(std::move(nv));
  }
  return r;
}

}  // namespace equicolor
