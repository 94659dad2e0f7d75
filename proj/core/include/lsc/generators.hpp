#pragma once

#include <cstddef>
#include <cstdint>

#include "lsc/graph.hpp"

namespace lsc {

/// Preferential-attachment graph. Nodes 0..m-1 start isolated; node m links
/// to all of them, and every later node links to m distinct earlier nodes
/// drawn with probability proportional to their current degree. Produces
/// exactly m*(n-m) edges and is a pure function of (n, m, seed).
///
/// Throws ParameterError unless 1 <= m < n.
Graph generate_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

// Small deterministic families, mostly for tests and examples.
Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
/// Node 0 is the center, 1..leaves are the leaves.
Graph make_star(std::size_t leaves);

}  // namespace lsc
