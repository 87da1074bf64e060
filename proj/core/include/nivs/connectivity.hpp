#pragma once

#include <vector>

#include "nivs/graph.hpp"

namespace nivs {

/// True iff one traversal reaches every vertex. Convention: the 0-vertex
/// graph is not connected, the 1-vertex graph is.
bool is_connected(const Graph& g);

/// Connected components as vertex sets, in order of their smallest member.
std::vector<VertexSet> components(const Graph& g);

bool has_cycle(const Graph& g);

/// Edges whose removal increases the number of components, ascending.
std::vector<Edge> bridges(const Graph& g);

/// Vertices whose removal increases the number of components.
VertexSet cut_vertices(const Graph& g);

}  // namespace nivs
