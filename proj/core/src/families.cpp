#include "nivs/families.hpp"

#include <vector>

namespace nivs {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidFamilyParams(what); }

int require(const std::optional<int>& p, const char* flag, const std::string& family) {
  if (!p) bad(family + " requires " + flag);
  return *p;
}

}  // namespace

Graph path(int n) {
  if (n < 1) bad("path requires order >= 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, edges);
}

Graph cycle(int n) {
  if (n < 3) bad("cycle requires order >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::from_edge_list(n, edges);
}

Graph complete(int n) {
  if (n < 1) bad("complete requires order >= 1, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int r, int s) {
  if (r < 1 || s < 1)
    bad("biclique requires positive partite sizes, got " + std::to_string(r) + "," +
        std::to_string(s));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < r; ++u)
    for (int v = 0; v < s; ++v) edges.emplace_back(u, r + v);
  return Graph::from_edge_list(r + s, edges);
}

Graph star(int n) {
  if (n < 2) bad("star requires order >= 2, got " + std::to_string(n));
  return complete_bipartite(1, n - 1);
}

Graph complete_minus_edge(int n) {
  if (n < 2) bad("complete-minus-edge requires order >= 2, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(u == n - 2 && v == n - 1)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph k4_minus_e() { return complete_minus_edge(4); }

Graph make_family(const FamilySpec& spec) {
  const std::string& f = spec.name;
  if (f == "path") return path(require(spec.n, "--n", f));
  if (f == "cycle") return cycle(require(spec.n, "--n", f));
  if (f == "complete") return complete(require(spec.n, "--n", f));
  if (f == "star") return star(require(spec.n, "--n", f));
  if (f == "biclique" || f == "complete-bipartite") {
    if (spec.r && spec.s) return complete_bipartite(*spec.r, *spec.s);
    if (spec.r && spec.n) return complete_bipartite(*spec.r, *spec.n - *spec.r);
    bad(f + " requires --r and --s (or --r and --n)");
  }
  if (f == "k4me" || f == "k4-minus-e") return k4_minus_e();
  bad("unknown family '" + f + "'");
}

}  // namespace nivs
