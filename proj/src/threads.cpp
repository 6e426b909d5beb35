#include "equicolor/threads.hpp"
#include "equicolor/error.hpp"

#include <algorithm>
#include <set>

namespace equicolor {

std::vector<VertexId> ThreadEnd::path() const {
  std::vector<VertexId> p;
  p.reserve(interior.size() + 2);
  p.push_back(from);
  p.insert(p.end(), interior.begin(), interior.end());
  p.push_back(to);
  return p;
}

int ThreadProfile::degree() const {
  int d = 0;
  for (int c : counts) d += c;
  return d;
}

int ThreadProfile::longest() const {
  for (int l = kLongBucket; l >= 0; --l)
    if (counts[static_cast<std::size_t>(l)] > 0) return l;
  return -1;
}

ThreadIndex::ThreadIndex(const Graph& g)
    : g_(&g), ends_(static_cast<std::size_t>(g.id_bound())), thread_of_(static_cast<std::size_t>(g.id_bound()), -1) {
  for (VertexId v : g.vertices())
    if (g.degree(v) < 2)
      throw Error(ErrorCode::PreconditionViolated, "thread decomposition needs minimum degree 2 (vertex " +
                                                       std::to_string(v + 1) + ")");
  for (VertexId x : g.vertices()) {
    if (g.degree(x) < 3) continue;
    for (VertexId first : g.neighbors(x)) {
      Thread th;
      th.a = x;
      VertexId prev = x, cur = first;
      while (g.degree(cur) == 2) {
        th.interior.push_back(cur);
        auto nb = g.neighbors(cur);
        VertexId next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      th.b = cur;
      bool keep = th.a < th.b || (th.a == th.b && !th.interior.empty() && th.interior.front() < th.interior.back());
      if (!keep) continue;
      const int id = static_cast<int>(threads_.size());
      for (VertexId w : th.interior) thread_of_[static_cast<std::size_t>(w)] = id;
      threads_.push_back(std::move(th));
    }
  }
  for (int id = 0; id < static_cast<int>(threads_.size()); ++id) {
    const Thread& th = threads_[static_cast<std::size_t>(id)];
    ends_[static_cast<std::size_t>(th.a)].push_back({id, th.a, th.b, th.interior});
    std::vector<VertexId> rev(th.interior.rbegin(), th.interior.rend());
    ends_[static_cast<std::size_t>(th.b)].push_back({id, th.b, th.a, std::move(rev)});
  }
  for (auto& list : ends_)
    std::sort(list.begin(), list.end(), [](const ThreadEnd& p, const ThreadEnd& q) { return p.at(1) < q.at(1); });

  for (VertexId v : g.vertices()) {
    if (g.degree(v) != 2 || thread_of_[static_cast<std::size_t>(v)] != -1) continue;
    std::vector<VertexId> cycle{v};
    thread_of_[static_cast<std::size_t>(v)] = -2;
    VertexId prev = v, cur = g.neighbors(v)[0];
    while (cur != v) {
      cycle.push_back(cur);
      thread_of_[static_cast<std::size_t>(cur)] = -2;
      auto nb = g.neighbors(cur);
      VertexId next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    pure_cycles_.push_back(std::move(cycle));
  }
  for (auto& t : thread_of_)
    if (t == -2) t = -1;
}

ThreadProfile ThreadIndex::profile(VertexId x) const {
  g_->require_vertex(x);
  if (g_->degree(x) < 3) throw Error(ErrorCode::NotBranchVertex, "vertex " + std::to_string(x + 1));
  ThreadProfile p;
  p.owner = x;
  for (const ThreadEnd& e : ends(x)) {
    p.counts[static_cast<std::size_t>(std::min(e.length(), kLongBucket))] += 1;
    p.t += e.length();
    if (e.is_cycle()) p.has_thread_cycle = true;
  }
  return p;
}

std::vector<VertexId> ThreadIndex::branch_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v : g_->vertices())
    if (g_->degree(v) >= 3) out.push_back(v);
  return out;
}

std::vector<Thread> decompose(const Graph& g) {
  ThreadIndex idx(g);
  if (!idx.pure_cycles().empty()) {
    auto comp = idx.pure_cycles().front();
    std::sort(comp.begin(), comp.end());
    std::string ids;
    for (VertexId v : comp) ids += (ids.empty() ? "" : ",") + std::to_string(v + 1);
    throw Error(ErrorCode::PureCycleComponent, "component {" + ids + "} has no branch vertex");
  }
  return idx.threads();
}

ThreadProfile profile(const Graph& g, VertexId x) {
  g.require_vertex(x);
  if (g.degree(x) < 3) throw Error(ErrorCode::NotBranchVertex, "vertex " + std::to_string(x + 1));
  return ThreadIndex(g).profile(x);
}

std::vector<VertexId> loosely_adjacent(const Graph& g, VertexId x, int l) {
  g.require_vertex(x);
  ThreadIndex idx(g);
  std::set<VertexId> out;
  if (idx.is_branch(x)) {
    for (const ThreadEnd& e : idx.ends(x))
      if (l <= e.length()) out.insert(e.at(l + 1));
  } else if (int id = idx.thread_of(x); id >= 0) {
    const Thread& th = idx.threads()[static_cast<std::size_t>(id)];
    std::vector<VertexId> path{th.a};
    path.insert(path.end(), th.interior.begin(), th.interior.end());
    path.push_back(th.b);
    const auto pos = static_cast<long>(std::find(path.begin() + 1, path.end() - 1, x) - path.begin());
    for (long p : {pos - (l + 1), pos + (l + 1)})
      if (p >= 0 && p < static_cast<long>(path.size())) out.insert(path[static_cast<std::size_t>(p)]);
  }
  return {out.begin(), out.end()};
}

namespace {

SubdividedStar build_union(const Graph& g, const ThreadIndex& idx, const std::vector<VertexId>& roots) {
  std::set<VertexId> inside(roots.begin(), roots.end());
  for (VertexId r : roots)
    for (const ThreadEnd& e : idx.ends(r)) {
      if (e.is_cycle()) throw Error(ErrorCode::ThreadCycle, "thread-cycle at vertex " + std::to_string(r + 1));
      inside.insert(e.interior.begin(), e.interior.end());
    }
  std::vector<VertexId> keep(inside.begin(), inside.end());
  SubdividedStar out{induced_subgraph(g, keep), roots, {}};
  for (VertexId v : keep)
    for (VertexId w : g.neighbors(v))
      if (!inside.count(w)) out.boundary.emplace_back(v, w);
  return out;
}

}  // namespace

SubdividedStar star_subgraph(const Graph& g, VertexId x) {
  g.require_vertex(x);
  if (g.degree(x) < 3) throw Error(ErrorCode::NotBranchVertex, "vertex " + std::to_string(x + 1));
  ThreadIndex idx(g);
  return build_union(g, idx, {x});
}

SubdividedStar pair_subgraph(const Graph& g, VertexId x, VertexId y) {
  g.require_vertex(x);
  g.require_vertex(y);
  ThreadIndex idx(g);
  if (!idx.is_branch(x) || !idx.is_branch(y))
    throw Error(ErrorCode::NotOneThreadPair, "both roots must be branch vertices");
  bool joined = false;
  for (const ThreadEnd& e : idx.ends(x))
    if (e.to == y && e.length() == 1) joined = true;
  if (!joined || x == y)
    throw Error(ErrorCode::NotOneThreadPair,
                "vertices " + std::to_string(x + 1) + " and " + std::to_string(y + 1) + " are not joined by a 1-thread");
  return build_union(g, idx, {x, y});
}

}  // namespace equicolor
