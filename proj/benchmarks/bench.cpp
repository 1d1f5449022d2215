#include <random>

#include <benchmark/benchmark.h>

#include "spex/charpoly.hpp"
#include "spex/families.hpp"
#include "spex/invariants.hpp"
#include "spex/search.hpp"
#include "spex/spectral.hpp"

namespace {

spex::Graph random_graph(int n, double density, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  spex::Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

static void BM_CliqueNumber(benchmark::State& state) {
  spex::Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(spex::clique_number(g));
}
BENCHMARK(BM_CliqueNumber)->Arg(16)->Arg(24)->Arg(32);

static void BM_AdjacencyRadius(benchmark::State& state) {
  spex::Graph g = spex::turan_graph(static_cast<int>(state.range(0)), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(spex::adjacency_radius(g).value);
}
BENCHMARK(BM_AdjacencyRadius)->Arg(12)->Arg(24)->Arg(48);

static void BM_PSpectralRadius(benchmark::State& state) {
  spex::Graph g = spex::turan_graph(12, 3);
  spex::PSpectralOptions opt;
  opt.p = 3.0;
  for (auto _ : state)
    benchmark::DoNotOptimize(spex::p_spectral_radius(g, opt).value);
}
BENCHMARK(BM_PSpectralRadius);

static void BM_AdjacencyCharpoly(benchmark::State& state) {
  spex::Graph g = spex::turan_graph(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(spex::adjacency_charpoly(g));
}
BENCHMARK(BM_AdjacencyCharpoly)->Arg(8)->Arg(12);

static void BM_EnumerateK4Free(benchmark::State& state) {
  spex::Predicate pred;
  pred.clique_free = 4;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        spex::count_graphs(static_cast<int>(state.range(0)), pred));
}
BENCHMARK(BM_EnumerateK4Free)->Arg(6)->Arg(7);

BENCHMARK_MAIN();
