#pragma once

#include <compare>
#include <span>
#include <string>

#include "nivs/graph.hpp"

namespace nivs {

/// Exact canonicalization works up to this order by default; callers at
/// larger orders must bring an external canonical tool.
inline constexpr int kDefaultCanonicalCap = 10;

/// Label-invariant fingerprint: the graph6 line of the canonical relabeling.
/// Two graphs have equal keys iff they are isomorphic.
class CanonicalKey {
 public:
  explicit CanonicalKey(std::string graph6_line) : g6_(std::move(graph6_line)) {}
  const std::string& str() const { return g6_; }
  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::string g6_;
};

/// Copy of g with vertex v relabeled to new_label_of[v].
Graph relabeled(const Graph& g, std::span<const int> new_label_of);

/// Canonical representative of g's isomorphism class: the relabeling whose
/// upper-triangle adjacency bit string is minimal over all degree-sorted
/// vertex orders (a complete invariant; searched with prefix pruning).
Graph canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);

CanonicalKey canonical_key(const Graph& g, int cap = kDefaultCanonicalCap);

}  // namespace nivs
