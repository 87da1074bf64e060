#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "nivs/graph.hpp"

namespace nivs {

// graph6: ASCII encoding of the upper triangle of the adjacency matrix.
// One size byte chr(n+63) for n <= 62, then the triangle bits in column-major
// order (columns 1..n-1, rows 0..j-1), packed into 6-bit groups MSB first,
// each group offset by 63, zero-padded to a 6-bit boundary.

std::string to_graph6(const Graph& g);

/// Decodes one graph6 line. Accepts and strips the optional ">>graph6<<"
/// header and a trailing CR; anything else must be bit-exact.
Graph from_graph6(std::string_view line);

/// Edge-list text format: first line "n", then one "u v" line per edge with
/// 0-based indices; lines starting with '#' and blank lines are ignored.
/// Errors name the offending line of `name`.
Graph read_edge_list(std::istream& in, std::string_view name = "<input>");
Graph read_edge_list_file(const std::filesystem::path& path);

}  // namespace nivs
