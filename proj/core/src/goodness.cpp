#include "nivs/goodness.hpp"

#include <bit>

#include "nivs/connectivity.hpp"

namespace nivs {

namespace {

EdgeGoodness edge_goodness_unchecked(const Graph& g, int u, int v) {
  const std::uint64_t covered = g.row(u) | g.row(v) |
                                (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  const std::uint64_t uncovered = g.full_mask() & ~covered;
  if (uncovered == 0) return EdgeGoodness{true, std::nullopt};
  return EdgeGoodness{false, std::countr_zero(uncovered)};
}

}  // namespace

EdgeGoodness is_good_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v))
    throw NotAnEdge(to_string(make_edge(u, v)) + " is not an edge");
  return edge_goodness_unchecked(g, u, v);
}

GoodnessReport is_good_graph(const Graph& g) {
  GoodnessReport report;
  bool all_edges_good = true;
  for (const Edge& e : g.edges()) {
    EdgeGoodness eg = edge_goodness_unchecked(g, e.u, e.v);
    all_edges_good = all_edges_good && eg.good;
    report.edges.push_back(GoodnessReport::EdgeVerdict{e, eg.good, eg.uncovered});
  }
  report.good_graph = g.size() >= 1 && all_edges_good && is_connected(g);
  return report;
}

}  // namespace nivs
