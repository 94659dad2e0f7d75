#include "lsc/traversal.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "lsc/error.hpp"

namespace lsc {

std::vector<Distance> bfs_distances(const Graph& g, NodeId source) {
  if (source >= g.node_count()) {
    throw ParameterError("source " + std::to_string(source) + " out of range for " +
                         std::to_string(g.node_count()) + " nodes");
  }
  std::vector<Distance> dist(g.node_count(), kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

Components connected_components(const Graph& g) {
  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  Components c;
  c.component_of.assign(g.node_count(), kNone);
  std::vector<NodeId> stack;
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    if (c.component_of[s] != kNone) continue;
    auto id = static_cast<std::uint32_t>(c.sizes.size());
    std::size_t size = 0;
    c.component_of[s] = id;
    stack.push_back(static_cast<NodeId>(s));
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId v : g.neighbors(u)) {
        if (c.component_of[v] == kNone) {
          c.component_of[v] = id;
          stack.push_back(v);
        }
      }
    }
    c.sizes.push_back(size);
  }
  return c;
}

// Batagelj & Zaversnik bucket peeling.
std::vector<std::uint32_t> k_shell(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> deg(n);
  std::size_t max_deg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = static_cast<std::uint32_t>(g.degree(static_cast<NodeId>(v)));
    max_deg = std::max<std::size_t>(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (auto d : deg) ++bin[d];
  std::size_t start = 0;
  for (auto& b : bin) {
    std::size_t count = b;
    b = start;
    start += count;
  }
  std::vector<NodeId> order(n);
  std::vector<std::size_t> pos(n);
  for (std::size_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    order[pos[v]] = static_cast<NodeId>(v);
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    NodeId v = order[i];
    for (NodeId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        std::uint32_t du = deg[u];
        std::size_t pu = pos[u];
        std::size_t pw = bin[du];
        NodeId w = order[pw];
        if (u != w) {
          std::swap(order[pu], order[pw]);
          pos[u] = pw;
          pos[w] = pu;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return deg;
}

}  // namespace lsc
