#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lsc {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Undirected, unweighted, simple graph over node ids 0..n-1, stored in
/// compressed adjacency form with sorted neighbor lists. Immutable once built,
/// so it can be shared freely between reader threads.
class Graph {
 public:
  /// Number of self-loops and repeated edges discarded while building.
  struct DropCounts {
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;
  };

  Graph() = default;

  /// Builds from an arbitrary edge sequence. Self-loops and repeated edges
  /// (in either orientation) are dropped and tallied in `drops` if given.
  /// Throws ParameterError if an endpoint is >= node_count.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          DropCounts* drops = nullptr);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;
  bool has_edge(NodeId u, NodeId v) const noexcept;

  /// Every edge once as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  /// Same graph with node v renamed to perm[v].
  Graph relabeled(std::span<const NodeId> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

}  // namespace lsc
