#include "lsc/graph.hpp"

#include <algorithm>
#include <string>

#include "lsc/error.hpp"

namespace lsc {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges, DropCounts* drops) {
  DropCounts local;
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") references a node >= " + std::to_string(node_count));
    }
    if (u == v) {
      ++local.self_loops;
      continue;
    }
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  auto last = std::unique(canon.begin(), canon.end());
  local.duplicates = static_cast<std::size_t>(canon.end() - last);
  canon.erase(last, canon.end());

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (auto [u, v] : canon) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(canon.size() * 2);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // canon is sorted by (u, v), so both directions land in ascending order.
  for (auto [u, v] : canon) g.targets_[cursor[u]++] = v;
  for (auto [u, v] : canon) g.targets_[cursor[v]++] = u;
  for (std::size_t i = 0; i < node_count; ++i) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
  }
  if (drops != nullptr) *drops = local;
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < node_count(); ++v) best = std::max(best, degree(static_cast<NodeId>(v)));
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= node_count() || v >= node_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::size_t u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(static_cast<NodeId>(u))) {
      if (u < v) out.emplace_back(static_cast<NodeId>(u), v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const NodeId> perm) const {
  if (perm.size() != node_count()) throw ParameterError("permutation size does not match node count");
  std::vector<Edge> mapped;
  mapped.reserve(edge_count());
  for (auto [u, v] : edges()) mapped.emplace_back(perm[u], perm[v]);
  return from_edges(node_count(), mapped);
}

}  // namespace lsc
