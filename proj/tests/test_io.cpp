#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "nivs/families.hpp"
#include "nivs/io.hpp"
#include "support/oracles.hpp"

using namespace nivs;

// Hand-encoded fixtures: 'B' = 63+3 announces order 3; triangle bits 111
// padded to 111000 give chr(63+56) = 'w'. A single edge on 2 vertices is
// bit 1 padded to 100000 = chr(63+32) = '_'.
TEST_CASE("from_graph6 decodes hand-encoded lines") {
  Graph k3 = from_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);

  Graph p2 = from_graph6("A_");
  CHECK(p2.order() == 2);
  CHECK(p2.size() == 1);
  CHECK(p2.adjacent(0, 1));

  Graph e3 = from_graph6("B?");
  CHECK(e3.order() == 3);
  CHECK(e3.size() == 0);

  // optional format header is accepted
  CHECK(from_graph6(">>graph6<<Bw") == k3);
}

TEST_CASE("to_graph6 encodes bit-exactly") {
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(to_graph6(path(2)) == "A_");
  CHECK(to_graph6(Graph::edgeless(0)) == "?");
  CHECK(to_graph6(Graph::edgeless(1)) == "@");
  CHECK(to_graph6(Graph::edgeless(3)) == "B?");
}

TEST_CASE("malformed graph6 is rejected") {
  CHECK_THROWS_AS(from_graph6(""), MalformedGraph6);
  CHECK_THROWS_AS(from_graph6("B"), MalformedGraph6);        // truncated payload
  CHECK_THROWS_AS(from_graph6("Bw?"), MalformedGraph6);      // trailing bytes
  CHECK_THROWS_AS(from_graph6("B 1"), MalformedGraph6);      // byte below 63
  CHECK_THROWS_AS(from_graph6(" Bw"), MalformedGraph6);
  CHECK_THROWS_AS(from_graph6("A\x7f"), MalformedGraph6);    // byte above 126
  CHECK_THROWS_AS(from_graph6("AW"), MalformedGraph6);       // nonzero padding
  CHECK_THROWS_AS(from_graph6("~??"), Unsupported);          // multi-byte size
}

TEST_CASE("graph6 round-trips exactly on random graphs up to order 20") {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = static_cast<int>(rng() % 21);
    double p = (trial % 3 == 0) ? 0.1 : (trial % 3 == 1 ? 0.5 : 0.9);
    Graph g = oracles::random_graph(rng, n, p);
    std::string s = to_graph6(g);
    Graph h = from_graph6(s);
    CHECK(h == g);
    CHECK(to_graph6(h) == s);
  }
}

TEST_CASE("edge-list format") {
  std::istringstream in("# a comment\n4\n0 1\n1 2\n\n2 3\n");
  Graph g = read_edge_list(in, "mem");
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.adjacent(1, 2));

  auto parse = [](const std::string& text) {
    std::istringstream s(text);
    return read_edge_list(s, "mem");
  };
  CHECK_THROWS_WITH_AS(parse("3\n0 0\n"), "mem:2: self-loop at vertex 0", InvalidEdge);
  CHECK_THROWS_AS(parse("3\n0 7\n"), InvalidVertex);
  CHECK_THROWS_AS(parse("3\n0 1\n1 0\n"), DuplicateEdge);
  CHECK_THROWS_AS(parse("3\n0 1 5\n"), InvalidEdge);
  CHECK_THROWS_AS(parse("nope\n"), InvalidEdge);
  CHECK_THROWS_AS(parse(""), InvalidEdge);
  CHECK_THROWS_AS(parse("# only comments\n"), InvalidEdge);
  // line numbers point at the offending line
  CHECK_THROWS_WITH_AS(parse("4\n0 1\n0 1\n"), "mem:3: duplicate edge 0-1", DuplicateEdge);
}
