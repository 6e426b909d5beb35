#include "equicolor/graph.hpp"
#include "equicolor/error.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include <bit>

namespace equicolor {

Graph::Graph(VertexId n) : adj_(static_cast<std::size_t>(n)), alive_(static_cast<std::size_t>(n), 1), vertex_count_(static_cast<std::size_t>(n)) {}

VertexId Graph::add_vertex() {
  adj_.emplace_back();
  alive_.push_back(1);
  ++vertex_count_;
  return id_bound() - 1;
}

void Graph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v + 1));
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(VertexId u, VertexId v) {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(u + 1));
  auto& a = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v) return;
  a.insert(it, v);
  auto& b = adj_[static_cast<std::size_t>(v)];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++edge_count_;
}

void Graph::remove_edge(VertexId u, VertexId v) {
  if (!has_edge(u, v)) return;
  auto& a = adj_[static_cast<std::size_t>(u)];
  a.erase(std::lower_bound(a.begin(), a.end(), v));
  auto& b = adj_[static_cast<std::size_t>(v)];
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --edge_count_;
}

void Graph::remove_vertex(VertexId v) {
  require_vertex(v);
  for (VertexId w : adj_[static_cast<std::size_t>(v)]) {
    auto& b = adj_[static_cast<std::size_t>(w)];
    b.erase(std::lower_bound(b.begin(), b.end(), v));
  }
  edge_count_ -= adj_[static_cast<std::size_t>(v)].size();
  adj_[static_cast<std::size_t>(v)].clear();
  alive_[static_cast<std::size_t>(v)] = 0;
  --vertex_count_;
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertex_count_);
  for (VertexId v = 0; v < id_bound(); ++v)
    if (alive_[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < id_bound(); ++u)
    for (VertexId v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (VertexId v : vertices()) best = std::min(best, degree(v));
  return vertex_count_ == 0 ? 0 : best;
}

int Graph::max_degree() const {
  int best = 0;
  for (VertexId v : vertices()) best = std::max(best, degree(v));
  return best;
}

// ---------------------------------------------------------------- DIMACS

Graph load_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  Graph g;
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long n = -1, m = -1;
      if (have_header) fail("duplicate header");
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0 || m < 0)
        fail("malformed header, expected 'p edge <n> <m>'");
      g = Graph(static_cast<VertexId>(n));
      have_header = true;
    } else if (tag == "e") {
      long long u = 0, v = 0;
      if (!have_header) fail("edge before header");
      if (!(ls >> u >> v)) fail("malformed edge line");
      std::string extra;
      if (ls >> extra) fail("trailing tokens on edge line");
      if (u < 1 || v < 1 || u > g.id_bound() || v > g.id_bound()) fail("vertex id out of range");
      if (u == v) throw Error(ErrorCode::InvalidEdge, "line " + std::to_string(lineno) + ": self-loop at vertex " + std::to_string(u));
      g.add_edge(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
    } else {
      fail("unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing 'p edge' header");
  return g;
}

Graph load_graph_text(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return load_graph(in);
}

void write_dimacs(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  std::vector<VertexId> index(static_cast<std::size_t>(g.id_bound()), -1);
  VertexId next = 0;
  for (VertexId v : g.vertices()) index[static_cast<std::size_t>(v)] = next++;
  for (const auto& c : comments) out << "c " << c << "\n";
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges())
    out << "e " << index[static_cast<std::size_t>(u)] + 1 << " " << index[static_cast<std::size_t>(v)] + 1 << "\n";
}

std::string to_dimacs(const Graph& g, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_dimacs(out, g, comments);
  return out.str();
}

// ---------------------------------------------------------------- structure

Graph delete_vertices(const Graph& g, std::span<const VertexId> s) {
  for (VertexId v : s) g.require_vertex(v);
  Graph h = g;
  for (VertexId v : s)
    if (h.has_vertex(v)) h.remove_vertex(v);
  return h;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  std::vector<char> in(static_cast<std::size_t>(g.id_bound()), 0);
  for (VertexId v : keep) {
    g.require_vertex(v);
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<VertexId> drop;
  for (VertexId v : g.vertices())
    if (!in[static_cast<std::size_t>(v)]) drop.push_back(v);
  return delete_vertices(g, drop);
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(static_cast<std::size_t>(g.id_bound()), 0);
  for (VertexId s : g.vertices()) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<VertexId> comp{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (VertexId w : g.neighbors(comp[i]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// ---------------------------------------------------------------- girth

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Shortest cycle through the BFS tree rooted at s, pruned by `best`.
int shortest_cycle_from(const Graph& g, VertexId s, int best, std::vector<int>& dist, std::vector<VertexId>& parent,
                        std::vector<VertexId>& touched) {
  std::queue<VertexId> q;
  dist[static_cast<std::size_t>(s)] = 0;
  touched.push_back(s);
  q.push(s);
  int found = kInf;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    int du = dist[static_cast<std::size_t>(u)];
    if (2 * du >= std::min(best, found)) break;
    for (VertexId w : g.neighbors(u)) {
      int& dw = dist[static_cast<std::size_t>(w)];
      if (dw < 0) {
        dw = du + 1;
        parent[static_cast<std::size_t>(w)] = u;
        touched.push_back(w);
        q.push(w);
      } else if (parent[static_cast<std::size_t>(u)] != w) {
        found = std::min(found, du + dw + 1);
      }
    }
  }
  for (VertexId v : touched) {
    dist[static_cast<std::size_t>(v)] = -1;
    parent[static_cast<std::size_t>(v)] = kNoVertex;
  }
  touched.clear();
  return found;
}

}  // namespace

Girth girth_serial(const Graph& g) {
  std::vector<int> dist(static_cast<std::size_t>(g.id_bound()), -1);
  std::vector<VertexId> parent(static_cast<std::size_t>(g.id_bound()), kNoVertex);
  std::vector<VertexId> touched;
  int best = kInf;
  for (VertexId s : g.vertices())
    if (g.degree(s) >= 2) best = std::min(best, shortest_cycle_from(g, s, best, dist, parent, touched));
  if (best == kInf) return std::nullopt;
  return best;
}

Girth girth(const Graph& g) {
  const std::vector<VertexId> sources = g.vertices();
  const auto n = static_cast<std::int64_t>(sources.size());
  int best = kInf;
#pragma omp parallel
  {
    std::vector<int> dist(static_cast<std::size_t>(g.id_bound()), -1);
    std::vector<VertexId> parent(static_cast<std::size_t>(g.id_bound()), kNoVertex);
    std::vector<VertexId> touched;
    int local = kInf;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
      VertexId s = sources[static_cast<std::size_t>(i)];
      if (g.degree(s) < 2) continue;
      local = std::min(local, shortest_cycle_from(g, s, local, dist, parent, touched));
    }
#pragma omp critical
    best = std::min(best, local);
  }
  if (best == kInf) return std::nullopt;
  return best;
}

Girth girth_by_edges(const Graph& g) {
  int best = kInf;
  std::vector<int> dist(static_cast<std::size_t>(g.id_bound()));
  for (auto [u, v] : g.edges()) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<VertexId> q;
    dist[static_cast<std::size_t>(u)] = 0;
    q.push(u);
    while (!q.empty() && dist[static_cast<std::size_t>(v)] < 0) {
      VertexId a = q.front();
      q.pop();
      for (VertexId b : g.neighbors(a)) {
        if (a == u && b == v) continue;
        if (dist[static_cast<std::size_t>(b)] < 0) {
          dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
          q.push(b);
        }
      }
    }
    if (dist[static_cast<std::size_t>(v)] > 0) best = std::min(best, dist[static_cast<std::size_t>(v)] + 1);
  }
  if (best == kInf) return std::nullopt;
  return best;
}

// ---------------------------------------------------------------- mad

namespace {

class Dinic {
 public:
  explicit Dinic(int n) : head_(static_cast<std::size_t>(n), -1), level_(static_cast<std::size_t>(n)), it_(static_cast<std::size_t>(n)) {}

  void add_arc(int u, int v, std::int64_t cap) {
    arcs_.push_back({v, head_[static_cast<std::size_t>(u)], cap});
    head_[static_cast<std::size_t>(u)] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[static_cast<std::size_t>(v)], 0});
    head_[static_cast<std::size_t>(v)] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t max_flow(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += pushed;
    }
    return flow;
  }

  // Nodes reachable from s in the residual network after max_flow.
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int a = head_[static_cast<std::size_t>(u)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
          seen[static_cast<std::size_t>(arc.to)] = 1;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a = head_[static_cast<std::size_t>(u)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
          level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push(arc.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& a = it_[static_cast<std::size_t>(u)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
      Arc& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.cap <= 0 || level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(u)] + 1) continue;
      if (std::int64_t pushed = dfs(arc.to, t, std::min(limit, arc.cap))) {
        arc.cap -= pushed;
        arcs_[static_cast<std::size_t>(a ^ 1)].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> it_;
};

Rational density_of(const Graph& g, const std::vector<VertexId>& s) {
  std::vector<char> in(static_cast<std::size_t>(g.id_bound()), 0);
  for (VertexId v : s) in[static_cast<std::size_t>(v)] = 1;
  std::int64_t twice_edges = 0;
  for (VertexId v : s)
    for (VertexId w : g.neighbors(v)) twice_edges += in[static_cast<std::size_t>(w)];
  return Rational(twice_edges, static_cast<std::int64_t>(s.size()));
}

// max over S of (2q|E(S)| - p|S|) as a max-weight closure; returns the
// inclusion-minimal maximiser.
std::pair<std::int64_t, std::vector<VertexId>> best_closure(const Graph& g, const Rational& lambda) {
  const auto verts = g.vertices();
  const auto edges = g.edges();
  std::vector<int> node(static_cast<std::size_t>(g.id_bound()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) node[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
  const int nv = static_cast<int>(verts.size());
  const int ne = static_cast<int>(edges.size());
  const int source = nv + ne, sink = source + 1;
  const std::int64_t p = lambda.numerator(), q = lambda.denominator();
  const std::int64_t big = 2 * q * static_cast<std::int64_t>(ne + 1) + 1;
  Dinic flow(nv + ne + 2);
  for (int e = 0; e < ne; ++e) {
    flow.add_arc(source, nv + e, 2 * q);
    flow.add_arc(nv + e, node[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].first)], big);
    flow.add_arc(nv + e, node[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].second)], big);
  }
  for (int v = 0; v < nv; ++v) flow.add_arc(v, sink, p);
  std::int64_t cut = flow.max_flow(source, sink);
  auto side = flow.source_side(source);
  std::vector<VertexId> chosen;
  for (int v = 0; v < nv; ++v)
    if (side[static_cast<std::size_t>(v)]) chosen.push_back(verts[static_cast<std::size_t>(v)]);
  return {2 * q * ne - cut, chosen};
}

}  // namespace

DensestSubgraph densest_subgraph(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "mad of the empty graph");
  std::vector<VertexId> witness = g.vertices();
  Rational lambda = density_of(g, witness);
  // Dinkelbach iteration: each improving closure has strictly larger density.
  for (;;) {
    auto [value, set] = best_closure(g, lambda);
    if (value <= 0 || set.empty()) break;
    Rational next = density_of(g, set);
    if (next <= lambda) break;
    lambda = next;
    witness = std::move(set);
  }
  return {lambda, witness};
}

Rational mad_exact(const Graph& g) { return densest_subgraph(g).density; }

Rational mad_bruteforce(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::EmptyGraph, "mad of the empty graph");
  const auto verts = g.vertices();
  if (verts.size() > 24) throw Error(ErrorCode::TooLarge, "mad_bruteforce limited to 24 vertices");
  const std::size_t n = verts.size();
  std::vector<std::uint32_t> nbr(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.has_edge(verts[i], verts[j])) nbr[i] |= 1u << j;
  Rational best(0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::int64_t twice = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) twice += std::popcount(nbr[i] & mask);
    best = std::max(best, Rational(twice, std::popcount(mask)));
  }
  return best;
}

Metrics compute_metrics(const Graph& g) {
  Metrics m;
  m.girth = girth(g);
  m.mad = g.empty() ? Rational(0) : mad_exact(g);
  m.min_degree = g.min_degree();
  m.max_degree = g.max_degree();
  return m;
}

}  // namespace equicolor
