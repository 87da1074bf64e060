#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nivs/graph.hpp"

namespace nivs {

// Standard families with deterministic labelings: paths and cycles in vertex
// order, complete bipartite graphs with the first partite set 0..r-1.

Graph path(int n);                         // n >= 1
Graph cycle(int n);                        // n >= 3
Graph complete(int n);                     // n >= 1
Graph complete_bipartite(int r, int s);    // r, s >= 1
Graph star(int n);                         // order n, center 0; n >= 2
Graph complete_minus_edge(int n);          // K_n minus one edge; n >= 2
Graph k4_minus_e();

struct FamilySpec {
  std::string name;        // path | cycle | complete | star | biclique | k4me
  std::optional<int> n;    // order
  std::optional<int> r;    // first partite set size (biclique)
  std::optional<int> s;    // second partite set size (biclique)
};

/// Builds the named family; throws InvalidFamilyParams on unknown names,
/// missing parameters, or out-of-range sizes.
Graph make_family(const FamilySpec& spec);

}  // namespace nivs
