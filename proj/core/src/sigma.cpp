#include "nivs/sigma.hpp"

#include <bit>

namespace nivs {

std::string to_string(SigmaCount::Method m) {
  switch (m) {
    case SigmaCount::Method::BruteForce: return "brute";
    case SigmaCount::Method::Recursive: return "recursive";
    case SigmaCount::Method::Convolution: return "convolution";
  }
  return "?";
}

int induced_edge_count(const Graph& g, const VertexSet& s) {
  if (s.host_order() != g.order())
    throw InvalidVertex("vertex set host order " + std::to_string(s.host_order()) +
                        " does not match graph order " + std::to_string(g.order()));
  int twice = 0;
  for (int v : s) twice += std::popcount(g.row(v) & s.bits());
  return twice / 2;
}

std::vector<std::uint64_t> sigma_histogram(const Graph& g, int cap) {
  const int n = g.order();
  if (n > cap)
    throw TooLarge("brute force over 2^" + std::to_string(n) +
                   " subsets exceeds the cap of " + std::to_string(cap));
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(g.size()) + 1, 0);
  // Gray-code walk: consecutive subsets differ in one vertex, so the induced
  // edge count moves by that vertex's degree into the current subset.
  std::uint64_t subset = 0;
  int edges = 0;
  hist[0] = 1;  // the empty subset
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int v = std::countr_zero(i);
    const std::uint64_t vbit = std::uint64_t{1} << v;
    if (subset & vbit) {
      edges -= std::popcount(g.row(v) & subset);
      subset ^= vbit;
    } else {
      subset ^= vbit;
      edges += std::popcount(g.row(v) & subset);
    }
    ++hist[static_cast<std::size_t>(edges)];
  }
  return hist;
}

SigmaCount sigma_bruteforce(const Graph& g, int k, int cap) {
  if (k < 0) throw InvalidVertex("negative k");
  std::vector<std::uint64_t> hist = sigma_histogram(g, cap);
  const std::uint64_t value =
      k < static_cast<int>(hist.size()) ? hist[static_cast<std::size_t>(k)] : 0;
  return SigmaCount{k, value, SigmaCount::Method::BruteForce};
}

MemoTable MemoTable::disabled() {
  MemoTable t;
  t.enabled_ = false;
  return t;
}

void MemoTable::bind(const Graph& root) {
  if (!root_) {
    root_ = root;
    return;
  }
  if (*root_ != root)
    throw Error("memo table is bound to a different root graph");
}

std::optional<std::uint64_t> MemoTable::lookup0(std::uint64_t mask) {
  if (!enabled_) return std::nullopt;
  auto it = table_.find(mask);
  if (it != table_.end() && it->second.has0) {
    ++hits_;
    return it->second.s0;
  }
  ++misses_;
  return std::nullopt;
}

std::optional<std::uint64_t> MemoTable::lookup1(std::uint64_t mask) {
  if (!enabled_) return std::nullopt;
  auto it = table_.find(mask);
  if (it != table_.end() && it->second.has1) {
    ++hits_;
    return it->second.s1;
  }
  ++misses_;
  return std::nullopt;
}

void MemoTable::store0(std::uint64_t mask, std::uint64_t value) {
  if (!enabled_) return;
  Entry& e = table_[mask];
  e.s0 = value;
  e.has0 = true;
}

void MemoTable::store1(std::uint64_t mask, std::uint64_t value) {
  if (!enabled_) return;
  Entry& e = table_[mask];
  e.s1 = value;
  e.has1 = true;
}

namespace {

// Recursion over induced subgraphs of a fixed root, represented as vertex
// subsets of that root.
struct Engine {
  const Graph& root;
  MemoTable& memo;

  std::uint64_t component_of(std::uint64_t mask, int seed) const {
    std::uint64_t reached = std::uint64_t{1} << seed;
    std::uint64_t frontier = reached;
    while (frontier != 0) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f != 0) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= root.row(v) & mask;
      }
      frontier = next & ~reached;
      reached |= frontier;
    }
    return reached;
  }

  // pivot: maximum degree within the subgraph, smallest label on ties
  int pivot(std::uint64_t mask) const {
    int best = -1, best_deg = -1;
    std::uint64_t rest = mask;
    while (rest != 0) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int deg = std::popcount(root.row(v) & mask);
      if (deg > best_deg) {
        best_deg = deg;
        best = v;
      }
    }
    return best;
  }

  std::uint64_t s0(std::uint64_t mask) {
    if (mask == 0) return 1;
    if (auto cached = memo.lookup0(mask)) return *cached;
    std::uint64_t result = 0;
    const std::uint64_t comp = component_of(mask, std::countr_zero(mask));
    if (comp != mask) {
      result = checked_mul(s0(comp), s0(mask & ~comp));
    } else {
      const int v = pivot(mask);
      const std::uint64_t vbit = std::uint64_t{1} << v;
      const std::uint64_t closed = (root.row(v) | vbit) & mask;
      result = checked_add(s0(mask & ~vbit), s0(mask & ~closed));
    }
    memo.store0(mask, result);
    return result;
  }

  std::uint64_t s1(std::uint64_t mask) {
    if (mask == 0) return 0;
    if (auto cached = memo.lookup1(mask)) return *cached;
    std::uint64_t result = 0;
    const std::uint64_t comp = component_of(mask, std::countr_zero(mask));
    if (comp != mask) {
      const std::uint64_t rest = mask & ~comp;
      result = checked_add(checked_mul(s1(comp), s0(rest)),
                           checked_mul(s0(comp), s1(rest)));
    } else {
      const int v = pivot(mask);
      const std::uint64_t vbit = std::uint64_t{1} << v;
      const std::uint64_t closed_v = (root.row(v) | vbit) & mask;
      result = checked_add(s1(mask & ~vbit), s1(mask & ~closed_v));
      std::uint64_t nbrs = root.row(v) & mask;
      while (nbrs != 0) {
        const int u = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        const std::uint64_t covered = closed_v | ((root.row(u) | (std::uint64_t{1} << u)) & mask);
        result = checked_add(result, s0(mask & ~covered));
      }
    }
    memo.store1(mask, result);
    return result;
  }
};

}  // namespace

SigmaCount sigma0_recursive(const Graph& g, MemoTable& memo) {
  memo.bind(g);
  Engine engine{g, memo};
  return SigmaCount{0, engine.s0(g.full_mask()), SigmaCount::Method::Recursive};
}

SigmaCount sigma1_recursive(const Graph& g, MemoTable& memo) {
  memo.bind(g);
  Engine engine{g, memo};
  return SigmaCount{1, engine.s1(g.full_mask()), SigmaCount::Method::Recursive};
}

std::pair<SigmaCount, SigmaCount> sigma_components(
    std::span<const std::pair<std::uint64_t, std::uint64_t>> parts) {
  if (parts.empty()) throw NoGraphs("sigma_components requires at least one part");
  std::uint64_t s0 = 1, s1 = 0;
  for (const auto& [p0, p1] : parts) {
    s1 = checked_add(checked_mul(s1, p0), checked_mul(s0, p1));
    s0 = checked_mul(s0, p0);
  }
  return {SigmaCount{0, s0, SigmaCount::Method::Convolution},
          SigmaCount{1, s1, SigmaCount::Method::Convolution}};
}

}  // namespace nivs
