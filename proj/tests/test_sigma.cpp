#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "nivs/connectivity.hpp"
#include "nivs/enumerate.hpp"
#include "nivs/families.hpp"
#include "nivs/sigma.hpp"
#include "support/oracles.hpp"

using namespace nivs;

TEST_CASE("induced_edge_count") {
  Graph k3 = complete(3);
  CHECK(induced_edge_count(k3, VertexSet::all(3)) == 3);
  CHECK(induced_edge_count(k3, VertexSet::of(3, {1})) == 0);
  CHECK(induced_edge_count(k3, VertexSet(3)) == 0);
  Graph c4 = cycle(4);
  CHECK(induced_edge_count(c4, VertexSet::of(4, {0, 1, 2})) == 2);
  CHECK_THROWS_AS(induced_edge_count(k3, VertexSet::of(4, {0})), InvalidVertex);
}

TEST_CASE("brute force reproduces the known small values") {
  CHECK(sigma_bruteforce(complete(4), 1).value == 6);
  CHECK(sigma_bruteforce(k4_minus_e(), 1).value == 5);
  CHECK(sigma_bruteforce(complete_bipartite(2, 2), 1).value == 4);
  CHECK(sigma_bruteforce(complete(3), 1).value == 3);
  CHECK(sigma_bruteforce(cycle(5), 1).value == 10);
  CHECK(sigma_bruteforce(path(4), 1).value == 5);
  CHECK(sigma_bruteforce(Graph::edgeless(5), 1).value == 0);
  CHECK(sigma_bruteforce(Graph::edgeless(5), 0).value == 32);
  CHECK(sigma_bruteforce(path(3), 0).value == 5);
  // k beyond the largest possible induced size counts nothing
  CHECK(sigma_bruteforce(complete(3), 4).value == 0);
  CHECK(sigma_bruteforce(Graph::edgeless(0), 0).value == 1);
  CHECK(sigma_bruteforce(Graph::edgeless(0), 1).value == 0);
}

TEST_CASE("brute force equals the naive subset oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    int n = static_cast<int>(rng() % 11);
    Graph g = oracles::random_graph(rng, n, 0.4);
    for (int k = 0; k <= 3; ++k)
      CHECK(sigma_bruteforce(g, k).value == oracles::sigma_naive(g, k));
  }
}

TEST_CASE("brute force cap") {
  CHECK_THROWS_AS(sigma_bruteforce(Graph::edgeless(25), 0), TooLarge);
  CHECK_NOTHROW(sigma_bruteforce(Graph::edgeless(25), 0, 26));
}

TEST_CASE("recursions match brute force exhaustively on all connected graphs to order 7") {
  long total = 0;
  for (int n = 1; n <= 7; ++n) {
    GraphCorpus corpus = enumerate_connected(n);
    while (auto g = corpus.next()) {
      ++total;
      MemoTable memo;
      CHECK(sigma1_recursive(*g, memo).value == sigma_bruteforce(*g, 1).value);
      CHECK(sigma0_recursive(*g, memo).value == sigma_bruteforce(*g, 0).value);
    }
  }
  CHECK(total == 996);
}

TEST_CASE("recursions match brute force on 1000 random graphs of orders 8..16") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 8 + static_cast<int>(rng() % 9);
    double p = (trial % 4 + 1) * 0.2;
    Graph g = oracles::random_graph(rng, n, p);
    MemoTable memo;
    CHECK(sigma1_recursive(g, memo).value == sigma_bruteforce(g, 1).value);
    CHECK(sigma0_recursive(g, memo).value == sigma_bruteforce(g, 0).value);
  }
}

TEST_CASE("empty graph conventions") {
  MemoTable memo;
  CHECK(sigma0_recursive(Graph::edgeless(0), memo).value == 1);
  CHECK(sigma1_recursive(Graph::edgeless(0), memo).value == 0);
}

TEST_CASE("independent-set counts on paths follow the Fibonacci recurrence") {
  std::uint64_t prev = 2, cur = 3;  // orders 1 and 2
  MemoTable m1;
  CHECK(sigma0_recursive(path(1), m1).value == prev);
  MemoTable m2;
  CHECK(sigma0_recursive(path(2), m2).value == cur);
  for (int n = 3; n <= 15; ++n) {
    std::uint64_t next = prev + cur;
    prev = cur;
    cur = next;
    MemoTable memo;
    CHECK(sigma0_recursive(path(n), memo).value == cur);
  }
}

TEST_CASE("star and biclique formulas") {
  for (int n = 2; n <= 12; ++n) {
    MemoTable memo;
    CHECK(sigma1_recursive(star(n), memo).value == static_cast<std::uint64_t>(n - 1));
  }
  for (int n = 4; n <= 12; ++n) {
    MemoTable memo;
    CHECK(sigma1_recursive(complete_bipartite(2, n - 2), memo).value ==
          static_cast<std::uint64_t>(2 * n - 4));
  }
}

TEST_CASE("component convolution") {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> parts{{3, 1}, {3, 1}};
  auto [s0, s1] = sigma_components(parts);
  CHECK(s0.value == 9);
  CHECK(s1.value == 6);
  CHECK(s0.method == SigmaCount::Method::Convolution);

  // one isolated vertex doubles sigma1
  std::vector<std::pair<std::uint64_t, std::uint64_t>> with_isolated{{5, 7}, {2, 0}};
  CHECK(sigma_components(with_isolated).second.value == 14);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> single{{5, 7}};
  auto [a0, a1] = sigma_components(single);
  CHECK(a0.value == 5);
  CHECK(a1.value == 7);

  std::vector<std::pair<std::uint64_t, std::uint64_t>> none;
  CHECK_THROWS_AS(sigma_components(none), NoGraphs);
}

TEST_CASE("convolution over components equals whole-graph brute force, all graphs to order 6") {
  for (int n = 0; n <= 6; ++n) {
    oracles::for_each_labeled_graph(n, [&](const Graph& g) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> parts;
      for (const VertexSet& comp : components(g)) {
        auto [sub, map] = g.delete_vertices(comp.complement());
        parts.push_back({sigma_bruteforce(sub, 0).value, sigma_bruteforce(sub, 1).value});
      }
      if (parts.empty()) return;  // 0-vertex graph
      auto [s0, s1] = sigma_components(parts);
      CHECK(s0.value == sigma_bruteforce(g, 0).value);
      CHECK(s1.value == sigma_bruteforce(g, 1).value);
    });
  }
}

TEST_CASE("recursive engine handles disconnected inputs directly") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracles::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.15);
    MemoTable memo;
    CHECK(sigma1_recursive(g, memo).value == sigma_bruteforce(g, 1).value);
    CHECK(sigma0_recursive(g, memo).value == sigma_bruteforce(g, 0).value);
  }
}

TEST_CASE("memoization changes nothing but the work") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracles::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.5);
    MemoTable with;
    MemoTable without = MemoTable::disabled();
    CHECK(sigma1_recursive(g, with).value == sigma1_recursive(g, without).value);
    CHECK(sigma0_recursive(g, with).value == sigma0_recursive(g, without).value);
  }
  Graph g = complete_bipartite(3, 3);
  MemoTable memo;
  sigma1_recursive(g, memo);
  CHECK(memo.entries() > 0);
  CHECK(memo.hits() + memo.misses() > 0);
}

TEST_CASE("memo tables refuse a second root") {
  MemoTable memo;
  sigma1_recursive(path(3), memo);
  CHECK_THROWS_AS(sigma1_recursive(path(4), memo), Error);
  CHECK_NOTHROW(sigma0_recursive(path(3), memo));
}

TEST_CASE("histogram partitions the power set") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    int n = static_cast<int>(rng() % 13);
    Graph g = oracles::random_graph(rng, n, 0.5);
    std::vector<std::uint64_t> hist = sigma_histogram(g);
    std::uint64_t sum = 0;
    for (std::uint64_t h : hist) sum += h;
    CHECK(sum == std::uint64_t{1} << n);
  }
}

TEST_CASE("checked arithmetic refuses to wrap") {
  const std::uint64_t big = std::numeric_limits<std::uint64_t>::max();
  CHECK_THROWS_AS(checked_add(big, 1), Overflow);
  CHECK_THROWS_AS(checked_mul(big, 2), Overflow);
  CHECK(checked_add(big - 1, 1) == big);
  CHECK(checked_mul(std::uint64_t{1} << 32, std::uint64_t{1} << 31) == std::uint64_t{1} << 63);
}
