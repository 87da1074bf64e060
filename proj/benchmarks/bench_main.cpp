#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "nivs/canonical.hpp"
#include "nivs/enumerate.hpp"
#include "nivs/families.hpp"
#include "nivs/io.hpp"
#include "nivs/sigma.hpp"

namespace {

nivs::Graph random_graph(std::uint64_t seed, int n, double p) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return nivs::Graph::from_edge_list(n, edges);
}

void BM_Sigma1RecursiveBiclique(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  nivs::Graph g = nivs::complete_bipartite(2, n - 2);
  for (auto _ : state) {
    nivs::MemoTable memo;
    benchmark::DoNotOptimize(nivs::sigma1_recursive(g, memo).value);
  }
}
BENCHMARK(BM_Sigma1RecursiveBiclique)->Arg(8)->Arg(16)->Arg(32)->Arg(48);

void BM_Sigma1RecursiveRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  nivs::Graph g = random_graph(1, n, 0.3);
  for (auto _ : state) {
    nivs::MemoTable memo;
    benchmark::DoNotOptimize(nivs::sigma1_recursive(g, memo).value);
  }
}
BENCHMARK(BM_Sigma1RecursiveRandom)->Arg(12)->Arg(16)->Arg(20)->Arg(24);

void BM_Sigma1Brute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  nivs::Graph g = random_graph(2, n, 0.3);
  for (auto _ : state)
    benchmark::DoNotOptimize(nivs::sigma_bruteforce(g, 1).value);
}
BENCHMARK(BM_Sigma1Brute)->Arg(12)->Arg(16)->Arg(20);

void BM_CanonicalKey(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  nivs::Graph g = random_graph(3, n, 0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(nivs::canonical_key(g).str().size());
}
BENCHMARK(BM_CanonicalKey)->Arg(6)->Arg(8)->Arg(10);

void BM_CanonicalKeyRegular(benchmark::State& state) {
  // all degrees equal, the canonicalization's worst case
  const int n = static_cast<int>(state.range(0));
  nivs::Graph g = nivs::cycle(n);
  for (auto _ : state)
    benchmark::DoNotOptimize(nivs::canonical_key(g).str().size());
}
BENCHMARK(BM_CanonicalKeyRegular)->Arg(8)->Arg(10);

void BM_EnumerateConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    nivs::GraphCorpus corpus = nivs::enumerate_connected(n);
    benchmark::DoNotOptimize(corpus.count());
  }
}
BENCHMARK(BM_EnumerateConnected)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Graph6RoundTrip(benchmark::State& state) {
  nivs::Graph g = random_graph(4, 20, 0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(nivs::from_graph6(nivs::to_graph6(g)).size());
}
BENCHMARK(BM_Graph6RoundTrip);

}  // namespace

BENCHMARK_MAIN();
