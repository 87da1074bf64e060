#pragma once

#include <optional>
#include <vector>

#include "nivs/graph.hpp"

namespace nivs {

/// Verdict for one edge uv: good when N[u] u N[v] covers every vertex;
/// otherwise `uncovered` holds one vertex adjacent to neither endpoint.
struct EdgeGoodness {
  bool good = false;
  std::optional<int> uncovered;
};

EdgeGoodness is_good_edge(const Graph& g, int u, int v);

struct GoodnessReport {
  struct EdgeVerdict {
    Edge edge;
    bool good = false;
    std::optional<int> uncovered;
  };
  std::vector<EdgeVerdict> edges;  // ascending edge order
  bool good_graph = false;
};

/// A graph is good when it is connected, has at least one edge, and every
/// edge is good. The connectivity and size requirements keep edgeless
/// graphs out by convention.
GoodnessReport is_good_graph(const Graph& g);

}  // namespace nivs
