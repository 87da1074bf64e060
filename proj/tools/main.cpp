// Command-line front end: exact subset counting, goodness reports, family
// generation as graph6, and exhaustive verification of the library's
// structural statements over small-order corpora.
//
// Exit codes: 0 success / all statements PASS, 1 a verification found a
// counterexample, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nivs/canonical.hpp"
#include "nivs/connectivity.hpp"
#include "nivs/enumerate.hpp"
#include "nivs/errors.hpp"
#include "nivs/families.hpp"
#include "nivs/goodness.hpp"
#include "nivs/io.hpp"
#include "nivs/sigma.hpp"
#include "nivs/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct InputOptions {
  std::string g6_file;
  std::string edges_file;
  std::string family;
  std::optional<int> n;
  std::optional<int> r;
  std::optional<int> s;
};

struct NRange {
  int lo = 0;
  int hi = 0;
};

// "--n 7" or "--n 4..8"
NRange parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  NRange range;
  try {
    if (dots == std::string::npos) {
      range.lo = range.hi = std::stoi(text);
    } else {
      range.lo = std::stoi(text.substr(0, dots));
      range.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw nivs::Error("cannot parse range '" + text + "'");
  }
  if (range.lo > range.hi) throw nivs::Error("empty range '" + text + "'");
  return range;
}

void add_input_flags(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--g6", in.g6_file, "graph6 file, one graph per line ('-' for stdin)");
  cmd->add_option("--edges", in.edges_file, "edge-list file: first line n, then 'u v' lines");
  cmd->add_option("--family", in.family, "family name: path|cycle|complete|star|biclique|k4me");
  auto int_option = [cmd](const char* flag, std::optional<int>& slot, const char* help) {
    cmd->add_option(flag, [&slot](const std::vector<std::string>& v) {
      try {
        std::size_t pos = 0;
        int value = std::stoi(v[0], &pos);
        if (pos != v[0].size()) return false;
        slot = value;
        return true;
      } catch (const std::exception&) {
        return false;
      }
    }, help);
  };
  int_option("--n", in.n, "order (families)");
  int_option("--r", in.r, "first partite size (biclique)");
  int_option("--s", in.s, "second partite size (biclique)");
}

// Streams the graphs of the selected input source through `sink`.
void for_each_input_graph(const InputOptions& in,
                          const std::function<void(const nivs::Graph&, const std::string&)>& sink) {
  const int sources = (!in.g6_file.empty() ? 1 : 0) + (!in.edges_file.empty() ? 1 : 0) +
                      (!in.family.empty() ? 1 : 0);
  if (sources != 1)
    throw nivs::Error("exactly one of --g6, --edges, --family is required");
  if (!in.g6_file.empty()) {
    std::ifstream file;
    std::istream* stream = &std::cin;
    if (in.g6_file != "-") {
      file.open(in.g6_file);
      if (!file) throw nivs::Error("cannot open " + in.g6_file);
      stream = &file;
    }
    std::string line;
    long line_no = 0;
    while (std::getline(*stream, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        nivs::Graph g = nivs::from_graph6(line);
        sink(g, line);
      } catch (const nivs::Error& e) {
        throw nivs::Error(in.g6_file + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
    return;
  }
  if (!in.edges_file.empty()) {
    nivs::Graph g = nivs::read_edge_list_file(in.edges_file);
    sink(g, nivs::to_graph6(g));
    return;
  }
  nivs::Graph g = nivs::make_family(nivs::FamilySpec{in.family, in.n, in.r, in.s});
  sink(g, nivs::to_graph6(g));
}

int run_sigma(const InputOptions& in, int k, const std::string& method, bool records,
              int brute_cap) {
  if (k < 0) throw nivs::Error("--k must be nonnegative");
  std::string picked = method;
  if (picked == "auto") picked = k <= 1 ? "recursive" : "brute";
  if (picked == "recursive" && k > 1)
    throw nivs::Error("no recursion is available for k >= 2; use --method brute");

  for_each_input_graph(in, [&](const nivs::Graph& g, const std::string& g6) {
    nivs::SigmaCount count;
    if (picked == "recursive") {
      nivs::MemoTable memo;
      count = k == 0 ? nivs::sigma0_recursive(g, memo) : nivs::sigma1_recursive(g, memo);
    } else {
      count = nivs::sigma_bruteforce(g, k, brute_cap);
    }
    if (records) {
      std::cout << "graph=" << g6 << " n=" << g.order() << " m=" << g.size()
                << " k=" << k << " sigma=" << count.value
                << " method=" << nivs::to_string(count.method) << "\n";
    } else {
      std::cout << count.value << "\n";
    }
  });
  return kExitOk;
}

int run_good(const InputOptions& in, bool records) {
  for_each_input_graph(in, [&](const nivs::Graph& g, const std::string& g6) {
    nivs::GoodnessReport report = nivs::is_good_graph(g);
    if (records) {
      std::cout << "graph=" << g6 << " n=" << g.order() << " m=" << g.size()
                << " good=" << (report.good_graph ? "true" : "false") << " bad=";
      bool first = true;
      for (const auto& ev : report.edges) {
        if (ev.good) continue;
        if (!first) std::cout << ",";
        first = false;
        std::cout << nivs::to_string(ev.edge) << ":" << *ev.uncovered;
      }
      std::cout << "\n";
    } else {
      std::cout << g6 << ": " << (report.good_graph ? "good" : "not good") << "\n";
      for (const auto& ev : report.edges) {
        std::cout << "  edge " << nivs::to_string(ev.edge) << " "
                  << (ev.good ? "good" : "bad");
        if (!ev.good) std::cout << " uncovered=" << *ev.uncovered;
        std::cout << "\n";
      }
    }
  });
  return kExitOk;
}

int run_gen(const InputOptions& in, const std::string& range_text) {
  if (in.family.empty()) throw nivs::Error("gen requires --family");
  if (!range_text.empty()) {
    NRange range = parse_range(range_text);
    for (int n = range.lo; n <= range.hi; ++n) {
      nivs::FamilySpec spec{in.family, n, in.r, in.s};
      std::cout << nivs::to_graph6(nivs::make_family(spec)) << "\n";
    }
  } else {
    nivs::FamilySpec spec{in.family, in.n, in.r, in.s};
    std::cout << nivs::to_graph6(nivs::make_family(spec)) << "\n";
  }
  return kExitOk;
}

struct StatementSet {
  bool size = false;
  bool star = false;
  bool bridges = false;
  bool cutverts = false;
  bool main = false;
  bool claims = false;
};

StatementSet parse_statements(const std::string& name) {
  StatementSet set;
  if (name == "all") {
    set.size = set.star = set.bridges = set.cutverts = set.main = set.claims = true;
  } else if (name == "size") {
    set.size = true;
  } else if (name == "star") {
    set.star = true;
  } else if (name == "bridges") {
    set.bridges = true;
  } else if (name == "cut-vertices") {
    set.cutverts = true;
  } else if (name == "main") {
    set.main = true;
  } else if (name == "claims") {
    set.claims = true;
  } else {
    throw nivs::Error("unknown statement '" + name +
                      "' (expected all|size|star|bridges|cut-vertices|main|claims)");
  }
  return set;
}

void print_report(const nivs::VerificationReport& report, bool records) {
  if (records) {
    std::cout << report.record() << "\n";
    return;
  }
  std::cout << (report.pass ? "PASS" : "FAIL") << " " << report.statement
            << " n=" << report.n << " checked=" << report.graphs_checked;
  if (!report.witnesses.empty()) {
    std::cout << " witnesses=[";
    for (std::size_t i = 0; i < report.witnesses.size(); ++i)
      std::cout << (i ? " " : "") << report.witnesses[i];
    std::cout << "]";
  }
  std::cout << " (" << report.elapsed.count() << " ms)\n";
  for (const auto& cex : report.counterexamples)
    std::cout << "  counterexample " << cex.graph6 << " " << cex.detail << "\n";
}

int run_verify(const std::string& statement, int min_n, int max_n,
               const std::string& g6_file, const nivs::VerifyOptions& options,
               bool records) {
  StatementSet set = parse_statements(statement);
  bool all_pass = true;
  long reports_emitted = 0;

  auto run_at = [&](nivs::GraphCorpus& corpus) {
    const int n = corpus.order();
    std::vector<nivs::VerificationReport> reports;
    if (set.size && n >= 2) reports.push_back(nivs::verify_sigma1_at_least_m(corpus, options));
    if (set.star && n >= 2) reports.push_back(nivs::verify_star_minimum(corpus, options));
    if (set.bridges && n >= 3)
      reports.push_back(nivs::verify_good_cyclic_no_bridge(corpus, options));
    if (set.cutverts && n >= 3)
      reports.push_back(nivs::verify_good_cyclic_no_cutvertex(corpus, options));
    if (set.main && n >= 3) reports.push_back(nivs::verify_cyclic_lower_bound(corpus, options));
    if (set.claims && n >= 4) {
      std::vector<nivs::VerificationReport> claims =
          nivs::verify_structural_claims(corpus, options);
      reports.insert(reports.end(), claims.begin(), claims.end());
    }
    for (const auto& report : reports) {
      print_report(report, records);
      all_pass = all_pass && report.pass;
      ++reports_emitted;
    }
  };

  if (!g6_file.empty()) {
    nivs::GraphCorpus corpus = nivs::GraphCorpus::from_graph6_file(g6_file);
    run_at(corpus);
  } else {
    if (min_n <= 0) min_n = 2;
    if (max_n < min_n) throw nivs::Error("--max-n must be >= --min-n");
    if (max_n > nivs::kMaxBuiltInOrder)
      throw nivs::Error("built-in corpora stop at n=" +
                        std::to_string(nivs::kMaxBuiltInOrder) +
                        "; supply --g6 for larger orders");
    for (int n = min_n; n <= max_n; ++n) {
      nivs::GraphCorpus corpus = nivs::enumerate_connected(n);
      run_at(corpus);
    }
  }
  if (reports_emitted == 0)
    throw nivs::Error("statement '" + statement + "' needs larger orders than the given range");
  return all_pass ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact counting of k-nearly independent vertex subsets and "
               "exhaustive verification of their extremal bounds"};
  app.require_subcommand(1);

  InputOptions sigma_in, good_in, gen_in;
  int k = 1;
  std::string method = "auto";
  bool sigma_records = false, good_records = false, verify_records = false;
  int brute_cap = nivs::kDefaultBruteForceCap;
  std::string gen_range;

  CLI::App* sigma = app.add_subcommand("sigma", "print sigma_k per input graph");
  add_input_flags(sigma, sigma_in);
  sigma->add_option("--k", k, "induced edge count parameter")->capture_default_str();
  sigma->add_option("--method", method, "brute|recursive|auto")
      ->check(CLI::IsMember({"brute", "recursive", "auto"}))
      ->capture_default_str();
  sigma->add_flag("--records", sigma_records, "structured key=value output");
  sigma->add_option("--brute-cap", brute_cap, "max order for brute force")
      ->envname("NIVS_BRUTE_CAP")
      ->capture_default_str();

  CLI::App* good = app.add_subcommand("good", "per-edge goodness report per input graph");
  add_input_flags(good, good_in);
  good->add_flag("--records", good_records, "structured key=value output");

  CLI::App* gen = app.add_subcommand("gen", "print family graphs as graph6");
  add_input_flags(gen, gen_in);
  gen->add_option("--range", gen_range, "order range A..B (overrides --n)");

  std::string statement = "all";
  int min_n = 0, max_n = 7;
  std::string verify_g6;
  nivs::VerifyOptions verify_options;
  CLI::App* verify = app.add_subcommand("verify", "check statements over graph corpora");
  verify->add_option("--statement", statement,
                     "all|size|star|bridges|cut-vertices|main|claims")
      ->capture_default_str();
  verify->add_option("--min-n", min_n, "smallest order (default: per statement)");
  verify->add_option("--max-n", max_n, "largest order")->capture_default_str();
  verify->add_option("--g6", verify_g6, "external corpus file (one order, one graph per line)");
  verify->add_option("--workers", verify_options.workers, "worker threads")
      ->capture_default_str();
  verify->add_option("--audit-fraction", verify_options.audit_fraction,
                     "fraction of graphs re-checked by brute force")
      ->capture_default_str();
  verify->add_option("--canon-cap", verify_options.canonical_cap,
                     "max order for exact canonicalization")
      ->envname("NIVS_CANON_CAP")
      ->capture_default_str();
  verify->add_flag("--records", verify_records, "structured key=value output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sigma->parsed()) return run_sigma(sigma_in, k, method, sigma_records, brute_cap);
    if (good->parsed()) return run_good(good_in, good_records);
    if (gen->parsed()) return run_gen(gen_in, gen_range);
    if (verify->parsed())
      return run_verify(statement, min_n, max_n, verify_g6, verify_options, verify_records);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
