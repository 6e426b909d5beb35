#pragma once

#include "equicolor/graph.hpp"

#include <array>
#include <span>
#include <vector>

namespace equicolor {

// A k-thread: k interior 2-vertices between two branch vertices. For a
// thread-cycle the endpoints coincide.
struct Thread {
  VertexId a = kNoVertex;
  VertexId b = kNoVertex;
  std::vector<VertexId> interior;  // ordered from a to b

  int length() const { return static_cast<int>(interior.size()); }
  bool is_cycle() const { return a == b; }
};

// A thread viewed from one endpoint.
struct ThreadEnd {
  int thread = -1;
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;
  std::vector<VertexId> interior;  // ordered from `from`

  int length() const { return static_cast<int>(interior.size()); }
  bool is_cycle() const { return from == to; }
  // Vertex at thread-distance d (1 <= d <= length + 1).
  VertexId at(int d) const { return d <= length() ? interior[static_cast<std::size_t>(d - 1)] : to; }
  // Full path from `from` to `to`, endpoints included.
  std::vector<VertexId> path() const;
};

inline constexpr int kLongBucket = 5;

struct ThreadProfile {
  VertexId owner = kNoVertex;
  std::array<int, kLongBucket + 1> counts{};  // a_0 .. a_4, a_5+
  int t = 0;
  bool has_thread_cycle = false;

  int a(int l) const { return counts[static_cast<std::size_t>(l < kLongBucket ? l : kLongBucket)]; }
  int degree() const;
  int longest() const;
};

class ThreadIndex {
 public:
  explicit ThreadIndex(const Graph& g);

  const Graph& graph() const { return *g_; }
  const std::vector<Thread>& threads() const { return threads_; }
  // Components without a branch vertex, each as a cycle walk.
  const std::vector<std::vector<VertexId>>& pure_cycles() const { return pure_cycles_; }

  bool is_branch(VertexId v) const { return g_->degree(v) >= 3; }
  std::span<const ThreadEnd> ends(VertexId x) const { return ends_[static_cast<std::size_t>(x)]; }
  int thread_of(VertexId v) const { return thread_of_[static_cast<std::size_t>(v)]; }
  ThreadProfile profile(VertexId x) const;
  std::vector<VertexId> branch_vertices() const;

 private:
  const Graph* g_;
  std::vector<Thread> threads_;
  std::vector<std::vector<ThreadEnd>> ends_;
  std::vector<int> thread_of_;
  std::vector<std::vector<VertexId>> pure_cycles_;
};

std::vector<Thread> decompose(const Graph& g);
ThreadProfile profile(const Graph& g, VertexId x);
std::vector<VertexId> loosely_adjacent(const Graph& g, VertexId x, int l);

// Boundary entries are (inside vertex, outside neighbour).
struct SubdividedStar {
  Graph graph;
  std::vector<VertexId> roots;
  std::vector<std::pair<VertexId, VertexId>> boundary;
};

SubdividedStar star_subgraph(const Graph& g, VertexId x);
SubdividedStar pair_subgraph(const Graph& g, VertexId x, VertexId y);

}  // namespace equicolor
