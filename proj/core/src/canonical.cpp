#include "nivs/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <vector>

#include "nivs/io.hpp"

namespace nivs {

namespace {

// The whole upper triangle must fit one word: n(n-1)/2 <= 64 holds up to
// order 11, which bounds any cap this implementation can honor.
constexpr int kHardCanonicalLimit = 11;

// Minimizes the adjacency bit string (upper triangle, column-major, first
// bit most significant) over all vertex orders that list degrees in
// ascending order. Restricting to degree-sorted orders keeps the key a
// complete isomorphism invariant while cutting the search to permutations
// within equal-degree classes; a branch is abandoned as soon as its partial
// string exceeds the best known prefix.
struct MinStringSearch {
  const Graph& g;
  int n;
  int total_bits;
  std::array<int, kHardCanonicalLimit> required_degree{};
  std::array<int, kHardCanonicalLimit> perm{};       // perm[p] = vertex at position p
  std::array<int, kHardCanonicalLimit> best_perm{};
  std::array<bool, kHardCanonicalLimit> used{};
  std::uint64_t best = 0;

  explicit MinStringSearch(const Graph& graph) : g(graph), n(graph.order()) {
    total_bits = n * (n - 1) / 2;
    std::vector<int> degs = g.degrees();
    std::sort(degs.begin(), degs.end());
    for (int p = 0; p < n; ++p) required_degree[static_cast<std::size_t>(p)] = degs[static_cast<std::size_t>(p)];
    best = total_bits == 0 ? 0 : ~std::uint64_t{0} >> (64 - total_bits);
    best_perm = perm;
  }

  void run() { dfs(0, 0); }

  // acc holds the p(p-1)/2 bits of columns filled so far.
  void dfs(int p, std::uint64_t acc) {
    if (p == n) {
      if (acc <= best) {
        best = acc;
        best_perm = perm;
      }
      return;
    }
    const int filled_bits = p * (p - 1) / 2 + p;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] ||
          g.degree(v) != required_degree[static_cast<std::size_t>(p)])
        continue;
      std::uint64_t col = 0;
      for (int i = 0; i < p; ++i)
        col = col << 1 | (g.adjacent(perm[static_cast<std::size_t>(i)], v) ? 1u : 0u);
      const std::uint64_t acc2 = acc << p | col;
      const std::uint64_t best_prefix = best >> (total_bits - filled_bits);
      if (acc2 > best_prefix) continue;
      perm[static_cast<std::size_t>(p)] = v;
      used[static_cast<std::size_t>(v)] = true;
      dfs(p + 1, acc2);
      used[static_cast<std::size_t>(v)] = false;
    }
  }
};

}  // namespace

Graph relabeled(const Graph& g, std::span<const int> new_label_of) {
  if (static_cast<int>(new_label_of.size()) != g.order())
    throw InvalidVertex("relabeling size does not match graph order");
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges())
    edges.emplace_back(new_label_of[static_cast<std::size_t>(e.u)],
                       new_label_of[static_cast<std::size_t>(e.v)]);
  return Graph::from_edge_list(g.order(), edges);
}

Graph canonical_form(const Graph& g, int cap) {
  if (cap > kHardCanonicalLimit)
    throw Unsupported("canonicalization cap " + std::to_string(cap) +
                      " exceeds the implementation limit of " +
                      std::to_string(kHardCanonicalLimit));
  if (g.order() > cap)
    throw Unsupported("canonicalization of order " + std::to_string(g.order()) +
                      " exceeds the cap of " + std::to_string(cap));
  MinStringSearch search(g);
  search.run();
  std::vector<int> new_label(static_cast<std::size_t>(g.order()));
  for (int p = 0; p < g.order(); ++p)
    new_label[static_cast<std::size_t>(search.best_perm[static_cast<std::size_t>(p)])] = p;
  return relabeled(g, new_label);
}

CanonicalKey canonical_key(const Graph& g, int cap) {
  return CanonicalKey(to_graph6(canonical_form(g, cap)));
}

}  // namespace nivs
