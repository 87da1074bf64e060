#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nivs/graph.hpp"

namespace nivs {

/// Brute-force subset enumeration refuses orders above this by default.
inline constexpr int kDefaultBruteForceCap = 24;

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("count overflow in addition");
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("count overflow in multiplication");
  return r;
}

/// An exact count of vertex subsets inducing exactly k edges.
struct SigmaCount {
  enum class Method { BruteForce, Recursive, Convolution };
  int k = 0;
  std::uint64_t value = 0;
  Method method = Method::BruteForce;
};

std::string to_string(SigmaCount::Method m);

/// Number of edges with both endpoints in s.
int induced_edge_count(const Graph& g, const VertexSet& s);

/// Exact counts for every k at once: entry [k] is the number of vertex
/// subsets inducing exactly k edges (Gray-code walk over all 2^n subsets).
std::vector<std::uint64_t> sigma_histogram(const Graph& g, int cap = kDefaultBruteForceCap);

SigmaCount sigma_bruteforce(const Graph& g, int k, int cap = kDefaultBruteForceCap);

/// Cache of subset-count results for induced subgraphs of one root graph,
/// keyed by the subset of root vertices (sound because every subgraph the
/// recursion visits is an induced subgraph of the root).
class MemoTable {
 public:
  MemoTable() = default;
  static MemoTable disabled();

  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }
  std::size_t entries() const { return table_.size(); }

  /// Ties the table to its root graph; reuse with a different root throws.
  void bind(const Graph& root);

  std::optional<std::uint64_t> lookup0(std::uint64_t mask);
  std::optional<std::uint64_t> lookup1(std::uint64_t mask);
  void store0(std::uint64_t mask, std::uint64_t value);
  void store1(std::uint64_t mask, std::uint64_t value);

 private:
  struct Entry {
    std::uint64_t s0 = 0, s1 = 0;
    bool has0 = false, has1 = false;
  };
  bool enabled_ = true;
  std::optional<Graph> root_;
  std::unordered_map<std::uint64_t, Entry> table_;
  std::uint64_t hits_ = 0, misses_ = 0;
};

/// Independent-subset count via the deletion recursion
/// s0(G) = s0(G - v) + s0(G - N[v]); components multiply; s0(empty) = 1.
SigmaCount sigma0_recursive(const Graph& g, MemoTable& memo);

/// Count of subsets inducing exactly one edge, via
/// s1(G) = s1(G - v) + s1(G - N[v]) + sum over u in N(v) of
/// s0(G - (N[u] u N[v])): subsets omitting v, subsets where v is isolated,
/// and subsets whose one induced edge is uv. s1(empty) = 0; components
/// combine by the convolution below.
SigmaCount sigma1_recursive(const Graph& g, MemoTable& memo);

/// Folds per-component (s0, s1) pairs across a disjoint union: s0 multiplies
/// and s1(A u B) = s1(A) s0(B) + s0(A) s1(B), since the unique induced edge
/// lies in exactly one component.
std::pair<SigmaCount, SigmaCount> sigma_components(
    std::span<const std::pair<std::uint64_t, std::uint64_t>> parts);

}  // namespace nivs
