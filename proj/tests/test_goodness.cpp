#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nivs/connectivity.hpp"
#include "nivs/families.hpp"
#include "nivs/goodness.hpp"
#include "support/oracles.hpp"

using namespace nivs;

TEST_CASE("good edges") {
  Graph k26 = complete_bipartite(2, 6);
  for (const Edge& e : k26.edges()) CHECK(is_good_edge(k26, e.u, e.v).good);

  Graph k5 = complete(5);
  CHECK(is_good_edge(k5, 1, 3).good);

  Graph c5 = cycle(5);
  for (const Edge& e : c5.edges()) {
    EdgeGoodness eg = is_good_edge(c5, e.u, e.v);
    CHECK_FALSE(eg.good);
    REQUIRE(eg.uncovered.has_value());
    // the witness really is adjacent to neither endpoint
    CHECK_FALSE(c5.adjacent(*eg.uncovered, e.u));
    CHECK_FALSE(c5.adjacent(*eg.uncovered, e.v));
    CHECK(*eg.uncovered != e.u);
    CHECK(*eg.uncovered != e.v);
  }

  CHECK_THROWS_AS(is_good_edge(c5, 0, 2), NotAnEdge);
  CHECK_THROWS_AS(is_good_edge(c5, 0, 7), InvalidVertex);
}

TEST_CASE("good graphs") {
  CHECK(is_good_graph(star(7)).good_graph);
  CHECK(is_good_graph(cycle(4)).good_graph);
  CHECK(is_good_graph(complete(6)).good_graph);
  CHECK(is_good_graph(k4_minus_e()).good_graph);
  CHECK(is_good_graph(path(2)).good_graph);
  CHECK_FALSE(is_good_graph(cycle(5)).good_graph);

  GoodnessReport p4 = is_good_graph(path(4));
  CHECK_FALSE(p4.good_graph);
  REQUIRE(p4.edges.size() == 3);
  CHECK_FALSE(p4.edges[0].good);  // 0-1 misses vertex 3
  CHECK(p4.edges[0].uncovered == 3);
  CHECK(p4.edges[1].good);        // 1-2 covers everything
  CHECK_FALSE(p4.edges[2].good);
  CHECK(p4.edges[2].uncovered == 0);
}

TEST_CASE("edgeless and tiny graphs are not good") {
  CHECK_FALSE(is_good_graph(Graph::edgeless(0)).good_graph);
  CHECK_FALSE(is_good_graph(Graph::edgeless(1)).good_graph);
  CHECK_FALSE(is_good_graph(Graph::edgeless(4)).good_graph);
}

TEST_CASE("a disconnected graph is never good") {
  Graph two_triangles = Graph::from_edge_list(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(is_good_graph(two_triangles).good_graph);

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracles::random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.3);
    if (is_good_graph(g).good_graph) CHECK(is_connected(g));
  }
}

TEST_CASE("witnesses in reports are genuine") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracles::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.4);
    GoodnessReport report = is_good_graph(g);
    bool all_good = true;
    for (const auto& ev : report.edges) {
      if (ev.good) {
        CHECK_FALSE(ev.uncovered.has_value());
      } else {
        all_good = false;
        REQUIRE(ev.uncovered.has_value());
        CHECK_FALSE(g.adjacent(*ev.uncovered, ev.edge.u));
        CHECK_FALSE(g.adjacent(*ev.uncovered, ev.edge.v));
      }
    }
    CHECK(report.good_graph == (all_good && g.size() >= 1 && is_connected(g)));
  }
}
