#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nivs/errors.hpp"

namespace nivs {

// Vertices are dense labels 0..n-1. Orders are capped at 62 so that every
// vertex subset fits in one machine word and every order fits a single
// graph6 size byte.
inline constexpr int kMaxOrder = 62;

/// A subset of the vertices of a host graph of known order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int host_order, std::uint64_t bits = 0);

  static VertexSet all(int host_order);
  static VertexSet of(int host_order, std::initializer_list<int> members);

  int host_order() const { return host_order_; }
  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(int v) const;
  void add(int v);
  void remove(int v);

  /// Smallest member, or -1 when empty.
  int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;
  /// Set difference.
  VertexSet operator-(const VertexSet& o) const;
  /// Complement within the host vertex set.
  VertexSet complement() const;

  bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  void check_member(int v) const;
  void check_same_host(const VertexSet& o) const;

  int host_order_ = 0;
  std::uint64_t bits_ = 0;
};

/// Unordered edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

Edge make_edge(int a, int b);
std::string to_string(const Edge& e);

/// Degree of a vertex together with the sorted degrees of its neighbors.
struct DegreeProfile {
  int degree = 0;
  std::vector<int> neighbor_degrees;  // ascending, length == degree
  bool operator==(const DegreeProfile&) const = default;
};

struct VertexDeletion;

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// Adjacency is one bitmask row per vertex; neighborhood and subset
/// operations are single word operations.
class Graph {
 public:
  Graph() = default;  // the 0-vertex graph

  static Graph edgeless(int n);
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const;
  /// Neighbor bitmask of v.
  std::uint64_t row(int v) const;
  int degree(int v) const;
  std::uint64_t full_mask() const { return n_ == 0 ? 0 : ~std::uint64_t{0} >> (64 - n_); }

  VertexSet vertices() const { return VertexSet(n_, full_mask()); }
  VertexSet neighborhood(int v) const;
  VertexSet closed_neighborhood(int v) const;

  /// Edges in ascending (u, v) order.
  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;
  int min_degree() const;
  int max_degree() const;
  DegreeProfile degree_profile(int v) const;

  Graph complement() const;

  /// Induced subgraph on V \ s, relabeled compactly in ascending old order.
  VertexDeletion delete_vertices(const VertexSet& s) const;

  /// New graph with one extra vertex (label = old order) attached to
  /// `neighbors`.
  Graph with_added_vertex(const VertexSet& neighbors) const;

  bool operator==(const Graph&) const = default;

 private:
  Graph(int n, std::vector<std::uint64_t> rows);
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct VertexDeletion {
  Graph graph;
  /// old_to_new[v] is the label of v in the surviving graph, -1 if deleted.
  std::vector<int> old_to_new;
};

}  // namespace nivs
