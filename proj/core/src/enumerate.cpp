#include "nivs/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <string>
#include <unordered_set>
#include <utility>

#include "nivs/canonical.hpp"
#include "nivs/connectivity.hpp"
#include "nivs/io.hpp"

namespace nivs {

GraphCorpus GraphCorpus::from_graphs(int n, std::vector<Graph> graphs) {
  GraphCorpus c;
  c.provenance_ = Provenance::BuiltIn;
  c.n_ = n;
  c.graphs_ = std::make_shared<const std::vector<Graph>>(std::move(graphs));
  return c;
}

GraphCorpus GraphCorpus::from_graph6_file(const std::filesystem::path& path) {
  GraphCorpus c;
  c.provenance_ = Provenance::ExternalGraph6File;
  c.path_ = path;
  c.reset();
  // the first graph fixes the corpus order
  GraphCorpus probe;
  probe.provenance_ = Provenance::ExternalGraph6File;
  probe.path_ = path;
  probe.reset();
  std::optional<Graph> first = probe.next();
  if (!first) throw InvalidCorpus(path.string() + ": no graphs");
  c.n_ = first->order();
  return c;
}

std::optional<Graph> GraphCorpus::next() {
  if (graphs_) {
    if (pos_ >= graphs_->size()) return std::nullopt;
    return (*graphs_)[pos_++];
  }
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g = [&] {
      try {
        return from_graph6(line);
      } catch (const Error& e) {
        throw InvalidCorpus(path_.string() + ":" + std::to_string(line_no_) + ": " + e.what());
      }
    }();
    if (n_ != 0 && g.order() != n_)
      throw InvalidCorpus(path_.string() + ":" + std::to_string(line_no_) +
                          ": order " + std::to_string(g.order()) +
                          " in a corpus of order " + std::to_string(n_));
    if (!is_connected(g))
      throw InvalidCorpus(path_.string() + ":" + std::to_string(line_no_) +
                          ": disconnected graph in a connected corpus");
    return g;
  }
  return std::nullopt;
}

void GraphCorpus::reset() {
  if (graphs_) {
    pos_ = 0;
    return;
  }
  in_ = std::make_unique<std::ifstream>(path_);
  if (!*in_) throw Error("cannot open " + path_.string());
  line_no_ = 0;
}

std::optional<long> GraphCorpus::count() const {
  if (graphs_) return static_cast<long>(graphs_->size());
  return std::nullopt;
}

namespace {

template <typename T>
std::vector<T> maybe_reversed(std::vector<T> v, GeneratorConfig::Order order) {
  if (order == GeneratorConfig::Order::Reverse) std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

GraphCorpus enumerate_connected(int n, const GeneratorConfig& config) {
  if (n < 1 || n > kMaxBuiltInOrder)
    throw Unsupported("built-in enumeration covers orders 1.." +
                      std::to_string(kMaxBuiltInOrder) + ", got " + std::to_string(n));

  std::vector<Graph> level = {Graph::edgeless(1)};
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> next;
    std::vector<std::uint64_t> masks;
    masks.reserve((std::size_t{1} << (k - 1)) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (k - 1)); ++mask)
      masks.push_back(mask);
    masks = maybe_reversed(std::move(masks), config.subsets);

    for (const Graph& parent : maybe_reversed(level, config.parents)) {
      for (std::uint64_t mask : masks) {
        Graph candidate = parent.with_added_vertex(VertexSet(k - 1, mask));
        Graph canon = canonical_form(candidate);
        std::string key = to_graph6(canon);
        if (seen.insert(key).second) next.emplace_back(std::move(key), std::move(canon));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) {
      if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
      return a.first < b.first;
    });
    level.clear();
    level.reserve(next.size());
    for (auto& [key, g] : next) level.push_back(std::move(g));
  }
  return GraphCorpus::from_graphs(n, std::move(level));
}

}  // namespace nivs
