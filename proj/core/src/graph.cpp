#include "nivs/graph.hpp"

#include <algorithm>
#include <set>

namespace nivs {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

VertexSet::VertexSet(int host_order, std::uint64_t bits)
    : host_order_(host_order), bits_(bits) {
  if (host_order < 0 || host_order > kMaxOrder)
    throw InvalidVertex("host order " + std::to_string(host_order) +
                        " outside 0.." + std::to_string(kMaxOrder));
  if (host_order < 64 && (bits >> host_order) != 0)
    throw InvalidVertex("vertex set has members outside host order " +
                        std::to_string(host_order));
}

VertexSet VertexSet::all(int host_order) {
  VertexSet s(host_order);
  s.bits_ = host_order == 0 ? 0 : ~std::uint64_t{0} >> (64 - host_order);
  return s;
}

VertexSet VertexSet::of(int host_order, std::initializer_list<int> members) {
  VertexSet s(host_order);
  for (int v : members) s.add(v);
  return s;
}

void VertexSet::check_member(int v) const {
  if (v < 0 || v >= host_order_)
    throw InvalidVertex("vertex " + std::to_string(v) +
                        " out of range for order " + std::to_string(host_order_));
}

void VertexSet::check_same_host(const VertexSet& o) const {
  if (host_order_ != o.host_order_)
    throw InvalidVertex("vertex sets have different host orders (" +
                        std::to_string(host_order_) + " vs " +
                        std::to_string(o.host_order_) + ")");
}

bool VertexSet::contains(int v) const {
  check_member(v);
  return (bits_ & bit(v)) != 0;
}

void VertexSet::add(int v) {
  check_member(v);
  bits_ |= bit(v);
}

void VertexSet::remove(int v) {
  check_member(v);
  bits_ &= ~bit(v);
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  check_same_host(o);
  return VertexSet(host_order_, bits_ | o.bits_);
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  check_same_host(o);
  return VertexSet(host_order_, bits_ & o.bits_);
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  check_same_host(o);
  return VertexSet(host_order_, bits_ & ~o.bits_);
}

VertexSet VertexSet::complement() const {
  return VertexSet(host_order_, ~bits_ & VertexSet::all(host_order_).bits());
}

Edge make_edge(int a, int b) { return Edge{std::min(a, b), std::max(a, b)}; }

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int n, std::vector<std::uint64_t> rows)
    : n_(n), rows_(std::move(rows)) {
  int deg_sum = 0;
  for (int v = 0; v < n_; ++v) deg_sum += std::popcount(rows_[v]);
  m_ = deg_sum / 2;
}

Graph Graph::edgeless(int n) {
  if (n < 0) throw InvalidVertex("negative order " + std::to_string(n));
  if (n > kMaxOrder)
    throw Unsupported("order " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(kMaxOrder));
  return Graph(n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g = edgeless(n);
  std::set<Edge> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InvalidVertex("edge endpoint " + std::to_string(u < 0 || u >= n ? u : v) +
                          " out of range for order " + std::to_string(n));
    if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
    Edge e = make_edge(u, v);
    if (!seen.insert(e).second)
      throw DuplicateEdge("duplicate edge " + to_string(e));
    g.rows_[u] |= bit(v);
    g.rows_[v] |= bit(u);
  }
  g.m_ = static_cast<int>(seen.size());
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InvalidVertex("vertex " + std::to_string(v) +
                        " out of range for order " + std::to_string(n_));
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (rows_[u] & bit(v)) != 0;
}

std::uint64_t Graph::row(int v) const {
  check_vertex(v);
  return rows_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(rows_[v]);
}

VertexSet Graph::neighborhood(int v) const {
  check_vertex(v);
  return VertexSet(n_, rows_[v]);
}

VertexSet Graph::closed_neighborhood(int v) const {
  check_vertex(v);
  return VertexSet(n_, rows_[v] | bit(v));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t above = rows_[u] >> (u + 1) << (u + 1);
    while (above != 0) {
      int v = std::countr_zero(above);
      out.push_back(Edge{u, v});
      above &= above - 1;
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = std::popcount(rows_[v]);
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) throw EmptyGraph("minimum degree of the 0-vertex graph");
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, std::popcount(rows_[v]));
  return best;
}

int Graph::max_degree() const {
  if (n_ == 0) throw EmptyGraph("maximum degree of the 0-vertex graph");
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, std::popcount(rows_[v]));
  return best;
}

DegreeProfile Graph::degree_profile(int v) const {
  check_vertex(v);
  DegreeProfile p;
  p.degree = std::popcount(rows_[v]);
  for (int u : neighborhood(v)) p.neighbor_degrees.push_back(degree(u));
  std::sort(p.neighbor_degrees.begin(), p.neighbor_degrees.end());
  return p;
}

Graph Graph::complement() const {
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_));
  std::uint64_t full = full_mask();
  for (int v = 0; v < n_; ++v)
    rows[static_cast<std::size_t>(v)] = ~rows_[static_cast<std::size_t>(v)] & full & ~bit(v);
  return Graph(n_, std::move(rows));
}

VertexDeletion Graph::delete_vertices(const VertexSet& s) const {
  if (s.host_order() != n_)
    throw InvalidVertex("vertex set host order " + std::to_string(s.host_order()) +
                        " does not match graph order " + std::to_string(n_));
  std::vector<int> old_to_new(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (int v = 0; v < n_; ++v)
    if (!(s.bits() >> v & 1)) old_to_new[static_cast<std::size_t>(v)] = next++;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(next), 0);
  for (int v = 0; v < n_; ++v) {
    int nv = old_to_new[static_cast<std::size_t>(v)];
    if (nv < 0) continue;
    std::uint64_t keep = rows_[static_cast<std::size_t>(v)] & ~s.bits();
    while (keep != 0) {
      int u = std::countr_zero(keep);
      rows[static_cast<std::size_t>(nv)] |= bit(old_to_new[static_cast<std::size_t>(u)]);
      keep &= keep - 1;
    }
  }
  return VertexDeletion{Graph(next, std::move(rows)), std::move(old_to_new)};
}

Graph Graph::with_added_vertex(const VertexSet& neighbors) const {
  if (neighbors.host_order() != n_)
    throw InvalidVertex("neighbor set host order " + std::to_string(neighbors.host_order()) +
                        " does not match graph order " + std::to_string(n_));
  if (n_ + 1 > kMaxOrder)
    throw Unsupported("order " + std::to_string(n_ + 1) + " exceeds the cap of " +
                      std::to_string(kMaxOrder));
  std::vector<std::uint64_t> rows = rows_;
  rows.push_back(neighbors.bits());
  for (int u : neighbors) rows[static_cast<std::size_t>(u)] |= bit(n_);
  return Graph(n_ + 1, std::move(rows));
}

}  // namespace nivs
