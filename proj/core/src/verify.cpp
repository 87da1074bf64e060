#include "nivs/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "nivs/connectivity.hpp"
#include "nivs/families.hpp"
#include "nivs/goodness.hpp"
#include "nivs/io.hpp"
#include "nivs/sigma.hpp"

namespace nivs {

std::string VerificationReport::record() const {
  std::string line = "statement=" + statement;
  line += " n=" + std::to_string(n);
  line += " graphs_checked=" + std::to_string(graphs_checked);
  line += std::string(" verdict=") + (pass ? "PASS" : "FAIL");
  line += " witnesses=";
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (i > 0) line += ",";
    line += witnesses[i];
  }
  line += " counterexamples=";
  for (std::size_t i = 0; i < counterexamples.size(); ++i) {
    if (i > 0) line += ",";
    line += counterexamples[i].graph6 + ":" + counterexamples[i].detail;
  }
  return line;
}

namespace {

// One graph's contribution to a report: either an equality witness (tagged
// with its canonical key) or a counterexample. `tag` routes findings of
// multi-statement scans to their report.
struct Finding {
  long index = 0;
  int tag = 0;
  bool witness = false;
  std::string graph6;
  std::string detail;
};

long audit_stride(const VerifyOptions& options) {
  if (options.audit_fraction <= 0) return 0;
  return std::max<long>(1, std::lround(1.0 / options.audit_fraction));
}

std::uint64_t audited_sigma1(const Graph& g, long index, long stride) {
  MemoTable memo;
  const std::uint64_t recursive = sigma1_recursive(g, memo).value;
  if (stride > 0 && index % stride == 0 && g.order() <= kDefaultBruteForceCap) {
    const std::uint64_t brute = sigma_bruteforce(g, 1).value;
    if (brute != recursive)
      throw AuditMismatch("recursive sigma1 " + std::to_string(recursive) +
                          " disagrees with brute force " + std::to_string(brute) +
                          " on " + to_graph6(g));
  }
  return recursive;
}

// Pulls every corpus graph through `eval` (possibly from several worker
// threads), collects the findings, and sorts them by corpus index so that
// results do not depend on scheduling. Returns the number of graphs pulled.
long scan(GraphCorpus& corpus, const VerifyOptions& options,
          const std::function<void(long, const Graph&, std::vector<Finding>&)>& eval,
          std::vector<Finding>& findings) {
  corpus.reset();
  long pulled = 0;
  if (options.workers <= 1) {
    while (std::optional<Graph> g = corpus.next()) {
      eval(pulled, *g, findings);
      ++pulled;
    }
  } else {
    std::mutex corpus_mutex;
    std::mutex findings_mutex;
    std::exception_ptr failure;
    std::vector<std::thread> pool;
    for (int w = 0; w < options.workers; ++w) {
      pool.emplace_back([&] {
        std::vector<Finding> local;
        try {
          for (;;) {
            long index = 0;
            std::optional<Graph> g;
            {
              std::lock_guard lock(corpus_mutex);
              g = corpus.next();
              if (!g) break;
              index = pulled++;
            }
            eval(index, *g, local);
          }
        } catch (...) {
          std::lock_guard lock(findings_mutex);
          if (!failure) failure = std::current_exception();
        }
        std::lock_guard lock(findings_mutex);
        findings.insert(findings.end(), local.begin(), local.end());
      });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  std::sort(findings.begin(), findings.end(),
            [](const Finding& a, const Finding& b) { return a.index < b.index; });
  return pulled;
}

VerificationReport finish(std::string statement, int n, long checked,
                          std::vector<Finding> findings,
                          std::chrono::steady_clock::time_point start) {
  VerificationReport report;
  report.statement = std::move(statement);
  report.n = n;
  report.graphs_checked = checked;
  for (Finding& f : findings) {
    if (f.witness)
      report.witnesses.push_back(std::move(f.graph6));
    else
      report.counterexamples.push_back(Counterexample{std::move(f.graph6), std::move(f.detail)});
  }
  report.pass = report.counterexamples.empty();
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

void require_order(const GraphCorpus& corpus, int minimum, const char* statement) {
  if (corpus.order() < minimum)
    throw Unsupported(std::string(statement) + " needs corpus order >= " +
                      std::to_string(minimum) + ", got " + std::to_string(corpus.order()));
}

// Checks that the equality witnesses are exactly `expected`; any deviation
// becomes a counterexample so that PASS still means "no counterexamples".
void require_exact_witnesses(VerificationReport& report, const CanonicalKey& expected,
                             const std::string& what) {
  bool expected_seen = false;
  for (const std::string& w : report.witnesses) {
    if (w == expected.str())
      expected_seen = true;
    else
      report.counterexamples.push_back(
          Counterexample{w, "unexpected-" + what + "-attainer"});
  }
  if (!expected_seen)
    report.counterexamples.push_back(
        Counterexample{expected.str(), "expected-" + what + "-attainer-missing"});
  report.pass = report.counterexamples.empty();
}

}  // namespace

VerificationReport verify_sigma1_at_least_m(GraphCorpus& corpus,
                                            const VerifyOptions& options) {
  require_order(corpus, 2, "size-lower-bound");
  const auto start = std::chrono::steady_clock::now();
  const long stride = audit_stride(options);
  std::vector<Finding> findings;
  long checked = scan(
      corpus, options,
      [&](long index, const Graph& g, std::vector<Finding>& out) {
        const std::uint64_t s1 = audited_sigma1(g, index, stride);
        const std::uint64_t m = static_cast<std::uint64_t>(g.size());
        const bool good = is_good_graph(g).good_graph;
        if (s1 < m) {
          out.push_back(Finding{index, 0, false, to_graph6(g),
                                "sigma1=" + std::to_string(s1) + ";m=" + std::to_string(m)});
        } else if ((s1 == m) != good) {
          out.push_back(Finding{index, 0, false, to_graph6(g),
                                "sigma1=" + std::to_string(s1) + ";m=" + std::to_string(m) +
                                    ";good=" + (good ? "true" : "false")});
        } else if (s1 == m) {
          out.push_back(Finding{index, 0, true, canonical_key(g, options.canonical_cap).str(), ""});
        }
      },
      findings);
  return finish("size-lower-bound", corpus.order(), checked, std::move(findings), start);
}

VerificationReport verify_star_minimum(GraphCorpus& corpus, const VerifyOptions& options) {
  require_order(corpus, 2, "star-lower-bound");
  const auto start = std::chrono::steady_clock::now();
  const long stride = audit_stride(options);
  const std::uint64_t bound = static_cast<std::uint64_t>(corpus.order() - 1);
  std::vector<Finding> findings;
  long checked = scan(
      corpus, options,
      [&](long index, const Graph& g, std::vector<Finding>& out) {
        const std::uint64_t s1 = audited_sigma1(g, index, stride);
        if (s1 < bound)
          out.push_back(Finding{index, 0, false, to_graph6(g),
                                "sigma1=" + std::to_string(s1) + ";bound=" + std::to_string(bound)});
        else if (s1 == bound)
          out.push_back(Finding{index, 0, true, canonical_key(g, options.canonical_cap).str(), ""});
      },
      findings);
  VerificationReport report =
      finish("star-lower-bound", corpus.order(), checked, std::move(findings), start);
  require_exact_witnesses(report, canonical_key(star(corpus.order()), options.canonical_cap),
                          "minimum");
  return report;
}

namespace {

VerificationReport verify_good_cyclic_structure(GraphCorpus& corpus,
                                                const VerifyOptions& options,
                                                std::string statement, bool check_bridges) {
  require_order(corpus, 3, statement.c_str());
  const auto start = std::chrono::steady_clock::now();
  std::vector<Finding> findings;
  long checked = scan(
      corpus, options,
      [&](long index, const Graph& g, std::vector<Finding>& out) {
        if (!is_good_graph(g).good_graph || !has_cycle(g)) return;
        if (check_bridges) {
          std::vector<Edge> b = bridges(g);
          if (!b.empty()) {
            std::string detail = "bridges=";
            for (std::size_t i = 0; i < b.size(); ++i)
              detail += (i > 0 ? ";" : "") + to_string(b[i]);
            out.push_back(Finding{index, 0, false, to_graph6(g), std::move(detail)});
          }
        } else {
          VertexSet cuts = cut_vertices(g);
          if (!cuts.empty()) {
            std::string detail = "cut_vertices=";
            bool first = true;
            for (int v : cuts) {
              detail += (first ? "" : ";") + std::to_string(v);
              first = false;
            }
            out.push_back(Finding{index, 0, false, to_graph6(g), std::move(detail)});
          }
        }
      },
      findings);
  return finish(std::move(statement), corpus.order(), checked, std::move(findings), start);
}

}  // namespace

VerificationReport verify_good_cyclic_no_bridge(GraphCorpus& corpus,
                                                const VerifyOptions& options) {
  return verify_good_cyclic_structure(corpus, options, "good-cyclic-bridgeless", true);
}

VerificationReport verify_good_cyclic_no_cutvertex(GraphCorpus& corpus,
                                                   const VerifyOptions& options) {
  return verify_good_cyclic_structure(corpus, options, "good-cyclic-no-cut-vertex", false);
}

VerificationReport verify_cyclic_lower_bound(GraphCorpus& corpus,
                                             const VerifyOptions& options) {
  require_order(corpus, 3, "cyclic-lower-bound");
  const auto start = std::chrono::steady_clock::now();
  const long stride = audit_stride(options);
  const int n = corpus.order();
  const std::uint64_t bound = static_cast<std::uint64_t>(n == 3 ? 3 : 2 * n - 4);
  std::atomic<long> cyclic_checked{0};
  std::vector<Finding> findings;
  scan(
      corpus, options,
      [&](long index, const Graph& g, std::vector<Finding>& out) {
        if (!has_cycle(g)) return;
        cyclic_checked.fetch_add(1, std::memory_order_relaxed);
        const std::uint64_t s1 = audited_sigma1(g, index, stride);
        if (s1 < bound)
          out.push_back(Finding{index, 0, false, to_graph6(g),
                                "sigma1=" + std::to_string(s1) + ";bound=" + std::to_string(bound)});
        else if (s1 == bound)
          out.push_back(Finding{index, 0, true, canonical_key(g, options.canonical_cap).str(), ""});
      },
      findings);
  VerificationReport report =
      finish("cyclic-lower-bound", n, cyclic_checked.load(), std::move(findings), start);
  const Graph extremal = n == 3 ? complete(3) : complete_bipartite(2, n - 2);
  require_exact_witnesses(report, canonical_key(extremal, options.canonical_cap), "minimum");
  return report;
}

std::vector<VerificationReport> verify_structural_claims(GraphCorpus& corpus,
                                                         const VerifyOptions& options) {
  require_order(corpus, 4, "structural claims");
  const auto start = std::chrono::steady_clock::now();
  const long stride = audit_stride(options);
  const int n = corpus.order();
  const std::uint64_t loose = static_cast<std::uint64_t>(2 * n - 4);
  constexpr int kClaims = 5;
  static const char* kStatements[kClaims] = {
      "claim-dominating-vertex", "claim-min-degree-three", "claim-max-degree",
      "claim-degree-two-neighbors", "claim-degree-dichotomy"};
  std::array<std::atomic<long>, kClaims> hypothesis_count{};

  std::vector<Finding> findings;
  scan(
      corpus, options,
      [&](long index, const Graph& g, std::vector<Finding>& out) {
        const bool cyclic = has_cycle(g);
        const int dmin = g.min_degree();
        const int dmax = g.max_degree();
        const bool good = is_good_graph(g).good_graph;

        auto sigma_exceeds = [&](int tag) {
          hypothesis_count[static_cast<std::size_t>(tag)].fetch_add(1, std::memory_order_relaxed);
          const std::uint64_t s1 = audited_sigma1(g, index, stride);
          if (s1 <= loose)
            out.push_back(Finding{index, tag, false, to_graph6(g),
                                  "sigma1=" + std::to_string(s1) +
                                      ";needed_above=" + std::to_string(loose)});
        };
        if (cyclic && dmax == n - 1) sigma_exceeds(0);
        if (cyclic && dmin >= 3) sigma_exceeds(1);

        if (good && dmin == 2) {
          hypothesis_count[2].fetch_add(1, std::memory_order_relaxed);
          if (dmax < n - 2)
            out.push_back(Finding{index, 2, false, to_graph6(g),
                                  "max_degree=" + std::to_string(dmax) +
                                      ";needed_at_least=" + std::to_string(n - 2)});
        }
        if (good && dmin == 2 && dmax == n - 2) {
          hypothesis_count[3].fetch_add(1, std::memory_order_relaxed);
          hypothesis_count[4].fetch_add(1, std::memory_order_relaxed);
          for (int v = 0; v < n; ++v) {
            const int d = g.degree(v);
            if (d == 2) {
              DegreeProfile p = g.degree_profile(v);
              if (p.neighbor_degrees != std::vector<int>{n - 2, n - 2})
                out.push_back(Finding{index, 3, false, to_graph6(g),
                                      "vertex=" + std::to_string(v) + ";profile=" +
                                          std::to_string(p.neighbor_degrees[0]) + "-" +
                                          std::to_string(p.neighbor_degrees[1])});
            }
            if (d != 2 && d != n - 2)
              out.push_back(Finding{index, 4, false, to_graph6(g),
                                    "vertex=" + std::to_string(v) +
                                        ";degree=" + std::to_string(d)});
          }
        }
      },
      findings);

  std::vector<VerificationReport> reports;
  for (int tag = 0; tag < kClaims; ++tag) {
    std::vector<Finding> own;
    for (const Finding& f : findings)
      if (f.tag == tag) own.push_back(f);
    reports.push_back(finish(kStatements[tag], n,
                             hypothesis_count[static_cast<std::size_t>(tag)].load(),
                             std::move(own), start));
  }
  return reports;
}

MinimumResult find_minimum(GraphCorpus& corpus,
                           const std::function<bool(const Graph&)>& filter,
                           const VerifyOptions& options) {
  const long stride = audit_stride(options);
  std::atomic<long> considered{0};
  std::vector<Finding> findings;
  scan(
      corpus, options,
      [&](long index, const Graph& g, std::vector<Finding>& out) {
        if (filter && !filter(g)) return;
        considered.fetch_add(1, std::memory_order_relaxed);
        const std::uint64_t s1 = audited_sigma1(g, index, stride);
        out.push_back(Finding{index, 0, false, canonical_key(g, options.canonical_cap).str(),
                              std::to_string(s1)});
      },
      findings);
  if (findings.empty()) throw NoGraphs("no corpus graph passes the filter");
  std::uint64_t minimum = ~std::uint64_t{0};
  for (const Finding& f : findings)
    minimum = std::min<std::uint64_t>(minimum, std::stoull(f.detail));
  MinimumResult result;
  result.minimum = minimum;
  result.graphs_considered = considered.load();
  for (const Finding& f : findings)
    if (std::stoull(f.detail) == minimum) result.witnesses.emplace_back(f.graph6);
  return result;
}

}  // namespace nivs
