#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "lsc/graph.hpp"

namespace lsc {

/// Hop distance; kUnreachable marks nodes in another component.
using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Unweighted single-source shortest-path lengths. Throws ParameterError if
/// source is out of range.
std::vector<Distance> bfs_distances(const Graph& g, NodeId source);

struct Components {
  /// Dense ids 0..count-1, assigned in order of the smallest member node.
  std::vector<std::uint32_t> component_of;
  std::vector<std::size_t> sizes;

  std::size_t count() const noexcept { return sizes.size(); }
};

Components connected_components(const Graph& g);

/// k-core shell index of every node (bucket peeling, O(n + m)).
std::vector<std::uint32_t> k_shell(const Graph& g);

}  // namespace lsc
