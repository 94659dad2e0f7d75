#include "lsc/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <optional>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "lsc/error.hpp"

namespace lsc {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool parse_id(std::string_view token, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, const EdgeListOptions& options) {
  std::vector<Edge> edges;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::uint64_t max_id = 0;
  bool any_edge = false;
  std::optional<std::uint64_t> declared_nodes;
  std::size_t to_skip = options.skip_lines;

  auto intern = [&](std::string_view token) -> NodeId {
    auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<NodeId>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0].front() == '#' || tokens[0].front() == '%') {
      if (tokens.size() == 3 && tokens[0] == "#" && tokens[1] == "nodes") {
        std::uint64_t n = 0;
        if (!parse_id(tokens[2], n)) throw ParseError(line_no, "bad node count directive");
        declared_nodes = n;
      }
      continue;
    }
    if (to_skip > 0) {
      --to_skip;
      continue;
    }
    if (tokens.size() < 2 || (tokens.size() > 2 && !options.allow_extra_columns)) {
      throw ParseError(line_no, "expected 2 tokens, found " + std::to_string(tokens.size()));
    }
    NodeId u = 0;
    NodeId v = 0;
    if (options.relabel) {
      u = intern(tokens[0]);
      v = intern(tokens[1]);
    } else {
      std::uint64_t a = 0;
      std::uint64_t b = 0;
      if (!parse_id(tokens[0], a) || !parse_id(tokens[1], b)) {
        throw ParseError(line_no, "node ids must be non-negative integers (use relabeling for other labels)");
      }
      if (a >= std::numeric_limits<NodeId>::max() || b >= std::numeric_limits<NodeId>::max()) {
        throw ParseError(line_no, "node id too large");
      }
      u = static_cast<NodeId>(a);
      v = static_cast<NodeId>(b);
      max_id = std::max({max_id, a, b});
    }
    edges.emplace_back(u, v);
    any_edge = true;
  }
  if (!any_edge) throw ParseError(0, "edge list contains no edges");

  LoadedGraph result;
  std::size_t n = 0;
  if (options.relabel) {
    n = labels.size();
    result.labels = std::move(labels);
  } else {
    n = static_cast<std::size_t>(max_id) + 1;
    if (declared_nodes) {
      if (*declared_nodes < n) throw ParseError(0, "node count directive smaller than largest id");
      n = static_cast<std::size_t>(*declared_nodes);
    }
    result.labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) result.labels.push_back(std::to_string(i));
  }
  result.graph = Graph::from_edges(n, edges, &result.dropped);
  return result;
}

LoadedGraph load_edge_list_file(const std::string& path, const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return load_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes " << g.node_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace lsc
