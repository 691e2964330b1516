// Micro-benchmarks for the enumeration and solver kernels. The canonical-form
// throughput bounds the census wall time, so it gets the most attention here.

#include <benchmark/benchmark.h>

#include <random>

#include "ildkit/census.hpp"
#include "ildkit/constructive.hpp"
#include "ildkit/exact.hpp"
#include "ildkit/families.hpp"

namespace {

using namespace ildkit;

std::vector<Graph> random_graphs(int n, int count, double p_inv) {
  std::mt19937 rng(12345);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng() % static_cast<unsigned>(p_inv) == 0) edges.emplace_back(u, v);
    out.push_back(Graph::build(n, edges));
  }
  return out;
}

void BM_canonical_form(benchmark::State& state) {
  auto pool = random_graphs(static_cast<int>(state.range(0)), 256, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(pool[i++ % pool.size()]));
  }
}
BENCHMARK(BM_canonical_form)->Arg(7)->Arg(9)->Arg(12);

void BM_check(benchmark::State& state) {
  Graph g = wheel(12);
  VertexSet s = parameter(g, Param::IotaL)->witness;
  for (auto _ : state) benchmark::DoNotOptimize(check(g, s));
}
BENCHMARK(BM_check);

void BM_gamma_l(benchmark::State& state) {
  Graph g = path(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(parameter(g, Param::GammaL));
}
BENCHMARK(BM_gamma_l)->Arg(10)->Arg(14);

void BM_is_ild_graph(benchmark::State& state) {
  auto pool = random_graphs(9, 64, 3);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(is_ild_graph(pool[i++ % pool.size()]));
}
BENCHMARK(BM_is_ild_graph);

void BM_tree_construction(benchmark::State& state) {
  auto pool = trees(11);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(tree_ild(pool[i++ % pool.size()]));
}
BENCHMARK(BM_tree_construction);

}  // namespace

BENCHMARK_MAIN();
