#include <benchmark/benchmark.h>

#include <random>

#include "exa/count.hpp"
#include "exa/family.hpp"
#include "exa/game.hpp"
#include "exa/oracle.hpp"
#include "exa/partitions.hpp"

namespace {

exa::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  exa::Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

void BM_CountTriangles(benchmark::State& state) {
  const exa::Graph host = random_graph(static_cast<int>(state.range(0)), 0.5, 1);
  const exa::Graph tri = exa::complete_graph(3);
  for (auto _ : state) benchmark::DoNotOptimize(exa::count_copies(host, tri));
}
BENCHMARK(BM_CountTriangles)->Arg(8)->Arg(16)->Arg(32);

void BM_CountC5(benchmark::State& state) {
  const exa::Graph host = random_graph(static_cast<int>(state.range(0)), 0.5, 2);
  const exa::Graph c5 = exa::cycle_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(exa::count_copies(host, c5));
}
BENCHMARK(BM_CountC5)->Arg(8)->Arg(12)->Arg(16);

void BM_ExaTriangle(benchmark::State& state) {
  const exa::GraphFamily tri = exa::family_from_spec("clique:3", 3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exa::exa_oracle(n, 1, tri).value);
}
BENCHMARK(BM_ExaTriangle)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SolveTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const exa::GraphFamily trees = exa::family_from_spec("trees", n);
  for (auto _ : state) benchmark::DoNotOptimize(exa::solve_x(n, trees).value);
}
BENCHMARK(BM_SolveTrees)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Mup(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exa::mup(4, b).value);
}
BENCHMARK(BM_Mup)->Arg(10)->Arg(20)->Arg(40);

}  // namespace
BENCHMARK_MAIN();
