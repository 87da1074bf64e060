#include "nivs/connectivity.hpp"

#include <algorithm>
#include <bit>

namespace nivs {

namespace {

// Expands a component from `seed` within `within` by bitmask frontier steps.
std::uint64_t flood(const Graph& g, std::uint64_t within, int seed) {
  std::uint64_t reached = std::uint64_t{1} << seed;
  std::uint64_t frontier = reached;
  while (frontier != 0) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f != 0) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.row(v) & within;
    }
    frontier = next & ~reached;
    reached |= frontier;
  }
  return reached;
}

// Low-link DFS shared by bridges() and cut_vertices(). Depth is bounded by
// the order cap, so plain recursion is safe.
struct LowLink {
  const Graph& g;
  std::vector<int> disc, low;
  int timer = 0;
  std::vector<Edge> bridge_edges;
  std::uint64_t cuts = 0;

  explicit LowLink(const Graph& graph)
      : g(graph), disc(static_cast<std::size_t>(graph.order()), -1),
        low(static_cast<std::size_t>(graph.order()), -1) {}

  void dfs(int v, int parent) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
    int children = 0;
    for (int u : g.neighborhood(v)) {
      if (disc[static_cast<std::size_t>(u)] < 0) {
        ++children;
        dfs(u, v);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(u)]);
        if (low[static_cast<std::size_t>(u)] > disc[static_cast<std::size_t>(v)])
          bridge_edges.push_back(make_edge(v, u));
        if (parent >= 0 && low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(v)])
          cuts |= std::uint64_t{1} << v;
      } else if (u != parent) {
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(u)]);
      }
    }
    if (parent < 0 && children >= 2) cuts |= std::uint64_t{1} << v;
  }

  void run() {
    for (int v = 0; v < g.order(); ++v)
      if (disc[static_cast<std::size_t>(v)] < 0) dfs(v, -1);
  }
};

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return flood(g, g.full_mask(), 0) == g.full_mask();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::uint64_t remaining = g.full_mask();
  while (remaining != 0) {
    int seed = std::countr_zero(remaining);
    std::uint64_t comp = flood(g, remaining, seed);
    out.emplace_back(g.order(), comp);
    remaining &= ~comp;
  }
  return out;
}

bool has_cycle(const Graph& g) {
  if (g.order() == 0) return false;
  // a forest has exactly n - c edges
  return g.size() > g.order() - static_cast<int>(components(g).size());
}

std::vector<Edge> bridges(const Graph& g) {
  LowLink ll(g);
  ll.run();
  std::sort(ll.bridge_edges.begin(), ll.bridge_edges.end());
  return ll.bridge_edges;
}

VertexSet cut_vertices(const Graph& g) {
  LowLink ll(g);
  ll.run();
  return VertexSet(g.order(), ll.cuts);
}

}  // namespace nivs
