#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "lsc/graph.hpp"

namespace lsc {

struct EdgeListOptions {
  /// Map arbitrary tokens to dense ids in order of first appearance. When
  /// unset, tokens must be non-negative integers and are used as ids directly.
  bool relabel = false;
  /// Accept lines with more than two tokens and use the first two (weights,
  /// timestamps in repository dumps). Fewer than two is always an error.
  bool allow_extra_columns = false;
  /// Non-comment lines to skip before edges start (e.g. a MatrixMarket size line).
  std::size_t skip_lines = 0;
};

struct LoadedGraph {
  Graph graph;
  /// labels[id] is the token that produced dense id `id`.
  std::vector<std::string> labels;
  Graph::DropCounts dropped;
};

/// Reads a whitespace-separated edge list. Lines whose first non-blank
/// character is '#' or '%' are comments, except the directive `# nodes <n>`
/// (written by write_edge_list) which fixes the node count when ids are used
/// verbatim, so trailing isolated nodes survive a round trip.
///
/// Throws ParseError on a malformed line or on input without any edge.
LoadedGraph load_edge_list(std::istream& in, const EdgeListOptions& options = {});
LoadedGraph load_edge_list_file(const std::string& path, const EdgeListOptions& options = {});

/// Writes `# nodes <n>` followed by one "u v" line per edge (u < v).
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace lsc
