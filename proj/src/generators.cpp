#include "equicolor/generators.hpp"
#include "equicolor/error.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>

namespace equicolor {

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::PreconditionViolated, "cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph theta_graph(int a, int b, int c) {
  if (std::min({a, b, c}) < 1 || (a == 1) + (b == 1) + (c == 1) > 1)
    throw Error(ErrorCode::PreconditionViolated, "theta needs path lengths >= 1, at most one equal to 1");
  Graph g(2);
  for (int len : {a, b, c}) {
    VertexId prev = 0;
    for (int i = 1; i < len; ++i) {
      VertexId w = g.add_vertex();
      g.add_edge(prev, w);
      prev = w;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::PreconditionViolated, "K_{a,b} needs a, b >= 1");
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw Error(ErrorCode::PreconditionViolated, "K_n needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph family(const std::string& name, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw Error(ErrorCode::PreconditionViolated, name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (name == "cycle") {
    need(1);
    return cycle_graph(params[0]);
  }
  if (name == "theta") {
    need(3);
    return theta_graph(params[0], params[1], params[2]);
  }
  if (name == "star" || name == "k1n") {
    need(1);
    return complete_bipartite(1, params[0]);
  }
  if (name == "k2n") {
    need(1);
    return complete_bipartite(2, params[0]);
  }
  if (name == "complete_bipartite" || name == "kab") {
    need(2);
    return complete_bipartite(params[0], params[1]);
  }
  if (name == "k77") {
    need(0);
    return complete_bipartite(7, 7);
  }
  if (name == "petersen") {
    need(0);
    return petersen_graph();
  }
  if (name == "complete") {
    need(1);
    return complete_graph(params[0]);
  }
  throw Error(ErrorCode::UnknownFamily, "'" + name + "'");
}

Graph subdivide(const Graph& base, const std::vector<int>& q) {
  const auto edges = base.edges();
  if (q.size() != edges.size()) throw Error(ErrorCode::PreconditionViolated, "one subdivision count per edge required");
  Graph g(base.id_bound());
  for (VertexId v = 0; v < base.id_bound(); ++v)
    if (!base.has_vertex(v)) g.remove_vertex(v);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    VertexId prev = edges[i].first;
    for (int k = 0; k < q[i]; ++k) {
      VertexId w = g.add_vertex();
      g.add_edge(prev, w);
      prev = w;
    }
    g.add_edge(prev, edges[i].second);
  }
  return g;
}

Graph subdivide_uniform(const Graph& base, int q) {
  return subdivide(base, std::vector<int>(base.edge_count(), q));
}

namespace {

// Portable bounded draw; std::uniform_int_distribution is not
// reproducible across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw_below(rng, i)]);
}

// Hamiltonian cycle plus chords between degree-2 vertices far apart.
Graph random_base(int n0, int base_girth, std::mt19937_64& rng) {
  Graph g(n0);
  std::vector<VertexId> perm(static_cast<std::size_t>(n0));
  for (int i = 0; i < n0; ++i) perm[static_cast<std::size_t>(i)] = i;
  shuffle(perm, rng);
  for (int i = 0; i < n0; ++i) g.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>((i + 1) % n0)]);
  const auto chords_wanted = static_cast<int>(n0 / 4 + draw_below(rng, static_cast<std::uint64_t>(n0 / 4 + 1)));
  std::vector<int> dist(static_cast<std::size_t>(n0));
  int added = 0;
  for (VertexId u : perm) {
    if (added >= chords_wanted) break;
    if (g.degree(u) != 2) continue;
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<VertexId> bfs;
    dist[static_cast<std::size_t>(u)] = 0;
    bfs.push(u);
    while (!bfs.empty()) {
      VertexId a = bfs.front();
      bfs.pop();
      if (dist[static_cast<std::size_t>(a)] + 1 >= base_girth - 1) continue;
      for (VertexId b : g.neighbors(a))
        if (dist[static_cast<std::size_t>(b)] < 0) {
          dist[static_cast<std::size_t>(b)] = dist[static_cast<std::size_t>(a)] + 1;
          bfs.push(b);
        }
    }
    std::vector<VertexId> cands;
    for (VertexId v = 0; v < n0; ++v)
      if (v != u && g.degree(v) == 2 && dist[static_cast<std::size_t>(v)] < 0) cands.push_back(v);
    if (cands.empty()) continue;
    g.add_edge(u, cands[draw_below(rng, cands.size())]);
    ++added;
  }
  return g;
}

}  // namespace

RandomSpec parse_random_spec(const std::string& text) {
  RandomSpec spec;
  bool mad_given = false;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value in '" + item + "'");
      std::string key = item.substr(0, eq), val = item.substr(eq + 1);
      if (key == "n0") spec.base_size = std::stoi(val);
      else if (key == "q") {
        auto dots = val.find("..");
        spec.q_min = std::stoi(val.substr(0, dots));
        spec.q_max = dots == std::string::npos ? spec.q_min : std::stoi(val.substr(dots + 2));
      } else if (key == "girth") spec.girth_min = std::stoi(val);
      else if (key == "mad") {
        spec.mad_max = parse_rational(val);
        mad_given = true;
      } else if (key == "seed") spec.seed = std::stoull(val);
      else if (key == "bg") spec.base_girth = std::stoi(val);
      else throw Error(ErrorCode::ParseError, "unknown key '" + key + "'");
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad number in '" + text + "'");
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::ParseError, "number out of range in '" + text + "'");
  }
  if (!mad_given) spec.mad_max = spec.girth_min >= 14 ? Rational(7, 3) : Rational(5, 2);
  return spec;
}

Graph random_sparse(const RandomSpec& spec) {
  if (spec.base_size < 3 || spec.q_min < 0 || spec.q_max < spec.q_min)
    throw Error(ErrorCode::PreconditionViolated, "need n0 >= 3 and 0 <= q_min <= q_max");
  std::mt19937_64 rng(spec.seed);
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    Graph base = random_base(spec.base_size, std::max(3, spec.base_girth), rng);
    std::vector<int> q(base.edge_count());
    for (int& x : q) x = spec.q_min + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(spec.q_max - spec.q_min + 1)));
    Graph g = subdivide(base, q);
    auto gi = girth(g);
    if (g.min_degree() < 2 || (gi && *gi < spec.girth_min)) continue;
    if (mad_exact(g) >= spec.mad_max) continue;
    return g;
  }
  throw Error(ErrorCode::GenerationFailed, "no graph met the constraints after " + std::to_string(spec.max_attempts) + " attempts");
}

}  // namespace equicolor
