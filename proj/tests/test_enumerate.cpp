#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <vector>

#include "nivs/canonical.hpp"
#include "nivs/connectivity.hpp"
#include "nivs/enumerate.hpp"
#include "nivs/families.hpp"
#include "nivs/io.hpp"
#include "support/oracles.hpp"

using namespace nivs;

namespace {

std::vector<Graph> drain(GraphCorpus& corpus) {
  std::vector<Graph> out;
  while (auto g = corpus.next()) out.push_back(*g);
  return out;
}

std::filesystem::path temp_file(const std::string& stem) {
  return std::filesystem::temp_directory_path() / stem;
}

}  // namespace

TEST_CASE("connected graph counts for small orders") {
  const long expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    GraphCorpus corpus = enumerate_connected(n);
    CHECK(corpus.count() == expected[n - 1]);
    CHECK(corpus.order() == n);
    CHECK(corpus.provenance() == GraphCorpus::Provenance::BuiltIn);
  }
}

TEST_CASE("order 3 corpus is the 2-edge path and the triangle") {
  GraphCorpus corpus = enumerate_connected(3);
  std::vector<Graph> graphs = drain(corpus);
  REQUIRE(graphs.size() == 2);
  CHECK(canonical_key(graphs[0]) == canonical_key(path(3)));
  CHECK(canonical_key(graphs[1]) == canonical_key(complete(3)));
}

TEST_CASE("generator output equals the labeled-enumeration oracle up to order 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> from_labels;
    oracles::for_each_labeled_graph(n, [&](const Graph& g) {
      if (is_connected(g)) from_labels.insert(canonical_key(g).str());
    });
    GraphCorpus corpus = enumerate_connected(n);
    std::set<std::string> from_generator;
    while (auto g = corpus.next()) {
      CHECK(is_connected(*g));
      CHECK(g->order() == n);
      CHECK(from_generator.insert(canonical_key(*g).str()).second);  // no repeats
    }
    CHECK(from_generator == from_labels);
  }
}

TEST_CASE("generator is deterministic and ordered by size then key") {
  GraphCorpus a = enumerate_connected(6);
  GraphCorpus b = enumerate_connected(6);
  std::vector<Graph> ga = drain(a), gb = drain(b);
  CHECK(ga == gb);
  for (std::size_t i = 1; i < ga.size(); ++i) {
    bool ordered = ga[i - 1].size() < ga[i].size() ||
                   (ga[i - 1].size() == ga[i].size() &&
                    to_graph6(ga[i - 1]) < to_graph6(ga[i]));
    CHECK(ordered);
  }
}

TEST_CASE("both generator configurations emit the same corpus") {
  GeneratorConfig reversed{GeneratorConfig::Order::Reverse, GeneratorConfig::Order::Reverse};
  for (int n = 1; n <= 6; ++n) {
    GraphCorpus a = enumerate_connected(n);
    GraphCorpus b = enumerate_connected(n, reversed);
    CHECK(drain(a) == drain(b));
  }
}

TEST_CASE("orders outside the built-in range are refused") {
  CHECK_THROWS_AS(enumerate_connected(0), Unsupported);
  CHECK_THROWS_AS(enumerate_connected(9), Unsupported);
}

TEST_CASE("corpus reset rewinds") {
  GraphCorpus corpus = enumerate_connected(4);
  CHECK(drain(corpus).size() == 6);
  CHECK_FALSE(corpus.next().has_value());
  corpus.reset();
  CHECK(drain(corpus).size() == 6);
}

TEST_CASE("external graph6 corpora stream from files") {
  auto path6 = temp_file("nivs_test_corpus.g6");
  {
    std::ofstream out(path6);
    GraphCorpus corpus = enumerate_connected(5);
    while (auto g = corpus.next()) out << to_graph6(*g) << "\n";
  }
  GraphCorpus file = GraphCorpus::from_graph6_file(path6);
  CHECK(file.order() == 5);
  CHECK(file.provenance() == GraphCorpus::Provenance::ExternalGraph6File);
  CHECK_FALSE(file.count().has_value());
  CHECK(drain(file).size() == 21);
  file.reset();
  CHECK(drain(file).size() == 21);
  std::filesystem::remove(path6);
}

TEST_CASE("external corpora are validated line by line") {
  auto bad_order = temp_file("nivs_test_mixed.g6");
  {
    std::ofstream out(bad_order);
    out << to_graph6(complete(3)) << "\n" << to_graph6(complete(4)) << "\n";
  }
  GraphCorpus mixed = GraphCorpus::from_graph6_file(bad_order);
  CHECK(mixed.next().has_value());
  CHECK_THROWS_AS(mixed.next(), InvalidCorpus);
  std::filesystem::remove(bad_order);

  auto disconnected = temp_file("nivs_test_disc.g6");
  {
    std::ofstream out(disconnected);
    out << to_graph6(Graph::from_edge_list(4, {{0, 1}, {2, 3}})) << "\n";
  }
  // the constructor probes the first graph, so this fails fast
  CHECK_THROWS_AS(GraphCorpus::from_graph6_file(disconnected), InvalidCorpus);
  std::filesystem::remove(disconnected);

  auto garbage = temp_file("nivs_test_garbage.g6");
  {
    std::ofstream out(garbage);
    out << "Bw\n!!!\n";
  }
  GraphCorpus bad = GraphCorpus::from_graph6_file(garbage);
  CHECK(bad.next().has_value());
  CHECK_THROWS_AS(bad.next(), InvalidCorpus);
  std::filesystem::remove(garbage);

  CHECK_THROWS_AS(GraphCorpus::from_graph6_file(temp_file("nivs_no_such_file.g6")), Error);

  auto empty = temp_file("nivs_test_empty.g6");
  { std::ofstream out(empty); }
  CHECK_THROWS_AS(GraphCorpus::from_graph6_file(empty), InvalidCorpus);
  std::filesystem::remove(empty);
}
