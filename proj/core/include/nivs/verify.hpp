#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "nivs/canonical.hpp"
#include "nivs/enumerate.hpp"
#include "nivs/graph.hpp"

namespace nivs {

struct VerifyOptions {
  int workers = 1;
  /// Fraction of corpus graphs whose recursive count is re-checked by brute
  /// force (index stride, so runs are deterministic). 0 disables audits.
  double audit_fraction = 0.01;
  /// Cap passed through to canonical_key when fingerprinting witnesses.
  int canonical_cap = kDefaultCanonicalCap;
};

struct Counterexample {
  std::string graph6;  // the graph as checked, original labels
  std::string detail;  // observed values, ';'-separated key=value pairs
};

/// Outcome of checking one statement over one corpus order. Serializes to a
/// single structured text line; counterexamples empty iff verdict is PASS.
struct VerificationReport {
  std::string statement;
  int n = 0;
  long graphs_checked = 0;
  bool pass = false;
  std::vector<std::string> witnesses;  // canonical graph6 of equality cases
  std::vector<Counterexample> counterexamples;
  std::chrono::milliseconds elapsed{0};

  /// Byte-stable record line (no timing field).
  std::string record() const;
};

/// Every connected graph satisfies sigma1 >= m, with equality exactly on
/// good graphs. Witnesses: the graphs attaining equality. Corpus order >= 2.
VerificationReport verify_sigma1_at_least_m(GraphCorpus& corpus,
                                            const VerifyOptions& options = {});

/// Every connected graph satisfies sigma1 >= n-1, with the star as the one
/// equality case. Corpus order >= 2.
VerificationReport verify_star_minimum(GraphCorpus& corpus,
                                       const VerifyOptions& options = {});

/// Every good graph containing a cycle is bridgeless. Corpus order >= 3.
VerificationReport verify_good_cyclic_no_bridge(GraphCorpus& corpus,
                                                const VerifyOptions& options = {});

/// Every good graph containing a cycle has no cut vertex. Corpus order >= 3.
VerificationReport verify_good_cyclic_no_cutvertex(GraphCorpus& corpus,
                                                   const VerifyOptions& options = {});

/// Every connected cyclic graph satisfies sigma1 >= n at order 3 and
/// sigma1 >= 2n-4 beyond, with the triangle / the biclique K_{2,n-2} as the
/// one equality case (checked by canonical-key identity). Corpus order >= 3.
VerificationReport verify_cyclic_lower_bound(GraphCorpus& corpus,
                                             const VerifyOptions& options = {});

/// Five structural facts about connected cyclic graphs and good graphs with
/// the stated degree conditions; one report each. Corpus order >= 4.
///   dominating-vertex: max degree n-1 forces sigma1 > 2n-4
///   min-degree-three:  min degree >= 3 forces sigma1 > 2n-4
///   max-degree:        good with min degree 2 forces max degree >= n-2
///   degree-two-neighbors: in good graphs with degrees spanning [2, n-2],
///                      both neighbors of a degree-2 vertex have degree n-2
///   degree-dichotomy:  such graphs have no degrees other than 2 and n-2
std::vector<VerificationReport> verify_structural_claims(GraphCorpus& corpus,
                                                         const VerifyOptions& options = {});

struct MinimumResult {
  std::uint64_t minimum = 0;
  std::vector<CanonicalKey> witnesses;  // every attaining graph
  long graphs_considered = 0;
};

/// Minimum sigma1 over the corpus graphs passing `filter`, with every
/// attaining graph's canonical key. Throws NoGraphs when the filter leaves
/// nothing.
MinimumResult find_minimum(GraphCorpus& corpus,
                           const std::function<bool(const Graph&)>& filter,
                           const VerifyOptions& options = {});

}  // namespace nivs
