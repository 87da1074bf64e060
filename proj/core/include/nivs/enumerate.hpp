#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <vector>

#include "nivs/graph.hpp"

namespace nivs {

/// The built-in generator covers orders 1..8; larger orders need an
/// external graph6 corpus.
inline constexpr int kMaxBuiltInOrder = 8;

/// Knobs that change the generator's internal visiting order without
/// changing its output set; two configurations give an independent
/// consistency check of the enumeration.
struct GeneratorConfig {
  enum class Order { Forward, Reverse };
  Order parents = Order::Forward;
  Order subsets = Order::Forward;
};

/// A stream of pairwise non-isomorphic connected graphs of one order.
class GraphCorpus {
 public:
  enum class Provenance { BuiltIn, ExternalGraph6File };

  static GraphCorpus from_graphs(int n, std::vector<Graph> graphs);
  static GraphCorpus from_graph6_file(const std::filesystem::path& path);

  std::optional<Graph> next();
  void reset();

  int order() const { return n_; }
  Provenance provenance() const { return provenance_; }
  /// Known up front only for materialized corpora.
  std::optional<long> count() const;

 private:
  GraphCorpus() = default;

  Provenance provenance_ = Provenance::BuiltIn;
  int n_ = 0;
  // materialized backing
  std::shared_ptr<const std::vector<Graph>> graphs_;
  std::size_t pos_ = 0;
  // file backing
  std::filesystem::path path_;
  std::unique_ptr<std::ifstream> in_;
  long line_no_ = 0;
};

/// All connected graphs of order n up to isomorphism, built by attaching a
/// new vertex to every nonempty neighborhood of every smaller corpus graph
/// and deduplicating on canonical keys. Emits canonical representatives
/// sorted by (size, canonical key).
GraphCorpus enumerate_connected(int n, const GeneratorConfig& config = {});

}  // namespace nivs
