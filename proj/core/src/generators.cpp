#include "lsc/generators.hpp"

#include <string>
#include <vector>

#include "lsc/error.hpp"
#include "lsc/rng.hpp"

namespace lsc {

Graph generate_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || m >= n) {
    throw ParameterError("barabasi-albert needs 1 <= m < n (got n=" + std::to_string(n) +
                         ", m=" + std::to_string(m) + ")");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m * (n - m));
  // Every edge endpoint appears once here, so a uniform pick is a
  // degree-proportional pick.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * m * (n - m));
  std::vector<NodeId> targets(m);
  for (std::size_t i = 0; i < m; ++i) targets[i] = static_cast<NodeId>(i);
  std::vector<char> chosen(n, 0);

  for (std::size_t source = m; source < n; ++source) {
    for (NodeId t : targets) {
      edges.emplace_back(static_cast<NodeId>(source), t);
      endpoints.push_back(t);
      endpoints.push_back(static_cast<NodeId>(source));
    }
    targets.clear();
    while (targets.size() < m) {
      NodeId pick = endpoints[rng.below(endpoints.size())];
      if (!chosen[pick]) {
        chosen[pick] = 1;
        targets.push_back(pick);
      }
    }
    for (NodeId t : targets) chosen[t] = 0;
  }
  return Graph::from_edges(n, edges);
}

Graph make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<NodeId>(i - 1), static_cast<NodeId>(i));
  return Graph::from_edges(n, edges);
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw ParameterError("a cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph make_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
  return Graph::from_edges(n, edges);
}

Graph make_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<NodeId>(i));
  return Graph::from_edges(leaves + 1, edges);
}

}  // namespace lsc
