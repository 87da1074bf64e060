#include "nivs/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace nivs {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void malformed(std::string_view what) {
  throw MalformedGraph6(std::string("malformed graph6: ") + std::string(what));
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxOrder)
    throw Unsupported("graph6 encoding limited to order " + std::to_string(kMaxOrder));
  std::string out(1, static_cast<char>(63 + n));
  int filled = 0;
  unsigned group = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = group << 1 | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        filled = 0;
        group = 0;
      }
    }
  }
  if (filled != 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  if (line.ends_with('\r')) line.remove_suffix(1);
  if (line.empty()) malformed("empty line");

  const unsigned char size_byte = static_cast<unsigned char>(line[0]);
  if (size_byte < 63 || size_byte > 126)
    malformed("size byte " + std::to_string(size_byte) + " outside 63..126");
  if (size_byte == 126)
    throw Unsupported("multi-byte graph6 sizes (order > 62) are not supported");
  const int n = size_byte - 63;

  const long triangle_bits = static_cast<long>(n) * (n - 1) / 2;
  const long payload = (triangle_bits + 5) / 6;
  if (static_cast<long>(line.size()) - 1 < payload) malformed("truncated edge bits");
  if (static_cast<long>(line.size()) - 1 > payload) malformed("trailing bytes after edge bits");

  std::vector<std::pair<int, int>> edges;
  long bit_index = 0;
  for (long b = 0; b < payload; ++b) {
    const unsigned char c = static_cast<unsigned char>(line[static_cast<std::size_t>(1 + b)]);
    if (c < 63 || c > 126)
      malformed("byte " + std::to_string(c) + " outside 63..126");
    const unsigned group = c - 63u;
    for (int k = 5; k >= 0; --k, ++bit_index) {
      const bool set = (group >> k & 1u) != 0;
      if (bit_index >= triangle_bits) {
        if (set) malformed("nonzero padding bits");
        continue;
      }
      if (set) {
        // invert s = j(j-1)/2 + i
        int j = 1;
        while (static_cast<long>(j) * (j + 1) / 2 <= bit_index) ++j;
        int i = static_cast<int>(bit_index - static_cast<long>(j) * (j - 1) / 2);
        edges.emplace_back(i, j);
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list(std::istream& in, std::string_view name) {
  auto fail = [&](long line_no, const std::string& what) -> void {
    throw InvalidEdge(std::string(name) + ":" + std::to_string(line_no) + ": " + what);
  };
  std::string line;
  long line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n) || n < 0) fail(line_no, "expected the vertex count");
      std::string extra;
      if (fields >> extra) fail(line_no, "unexpected token '" + extra + "' after the vertex count");
      continue;
    }
    int u = 0, v = 0;
    if (!(fields >> u >> v)) fail(line_no, "expected an edge 'u v'");
    std::string extra;
    if (fields >> extra) fail(line_no, "unexpected token '" + extra + "' after the edge");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InvalidVertex(std::string(name) + ":" + std::to_string(line_no) +
                          ": vertex out of range for order " + std::to_string(n));
    if (u == v)
      throw InvalidEdge(std::string(name) + ":" + std::to_string(line_no) +
                        ": self-loop at vertex " + std::to_string(u));
    for (const auto& [a, b] : edges)
      if (make_edge(a, b) == make_edge(u, v))
        throw DuplicateEdge(std::string(name) + ":" + std::to_string(line_no) +
                            ": duplicate edge " + to_string(make_edge(u, v)));
    edges.emplace_back(u, v);
  }
  if (n < 0) throw InvalidEdge(std::string(name) + ": missing vertex count line");
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_edge_list(in, path.string());
}

}  // namespace nivs
