#include "equicolor/coloring.hpp"
#include "equicolor/generators.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/oracle.hpp"
#include "equicolor/solver.hpp"

#include <benchmark/benchmark.h>

using namespace equicolor;

namespace {

Graph big_sparse(int n0) {
  RandomSpec s;
  s.base_size = n0;
  s.q_min = 3;
  s.q_max = 5;
  s.seed = 7;
  return random_sparse(s);
}

std::vector<Graph> corpus(int count) {
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    RandomSpec s;
    s.base_size = 40 + i % 20;
    s.seed = static_cast<std::uint64_t>(i + 1);
    out.push_back(random_sparse(s));
  }
  return out;
}

void BM_girth_parallel(benchmark::State& st) {
  const Graph g = big_sparse(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(girth(g));
  st.counters["n"] = static_cast<double>(g.vertex_count());
}

void BM_girth_serial(benchmark::State& st) {
  const Graph g = big_sparse(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(girth_serial(g));
  st.counters["n"] = static_cast<double>(g.vertex_count());
}

void BM_threshold_parallel(benchmark::State& st) {
  const Graph g = complete_bipartite(7, 7);
  for (auto _ : st) benchmark::DoNotOptimize(brute_threshold(g));
}

void BM_threshold_serial(benchmark::State& st) {
  const Graph g = complete_bipartite(7, 7);
  for (auto _ : st) benchmark::DoNotOptimize(brute_threshold_serial(g));
}

void BM_corpus_parallel(benchmark::State& st) {
  const auto gs = corpus(32);
  for (auto _ : st) {
    int valid = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : valid)
    for (std::size_t i = 0; i < gs.size(); ++i) valid += verify_equitable(gs[i], equitable_color(gs[i], 4)).valid;
    benchmark::DoNotOptimize(valid);
  }
}

void BM_corpus_serial(benchmark::State& st) {
  const auto gs = corpus(32);
  for (auto _ : st) {
    int valid = 0;
    for (const Graph& g : gs) valid += verify_equitable(g, equitable_color(g, 4)).valid;
    benchmark::DoNotOptimize(valid);
  }
}

}  // namespace

BENCHMARK(BM_girth_parallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_girth_serial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_threshold_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_threshold_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_corpus_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_corpus_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
