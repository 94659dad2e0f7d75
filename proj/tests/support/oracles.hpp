#pragma once

// Independent reference implementations for the tests. Nothing here calls
// into the traversal or centrality code it is used to check.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "lsc/graph.hpp"
#include "lsc/rng.hpp"

namespace lsc::oracle {

inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

/// All-pairs hop distances by Floyd-Warshall on the adjacency matrix.
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.has_edge(static_cast<NodeId>(i), static_cast<NodeId>(j))) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Betweenness by listing every shortest path between every unordered pair
/// (depth-first walk that only steps one hop closer to the target).
inline std::vector<double> betweenness_by_enumeration(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto d = all_pairs(g);
  std::vector<double> bc(n, 0.0);
  std::vector<std::vector<NodeId>> paths;
  std::vector<NodeId> current;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (d[s][t] >= kInf) continue;
      paths.clear();
      current = {static_cast<NodeId>(s)};
      auto walk = [&](auto&& self, NodeId u) -> void {
        if (u == t) {
          paths.push_back(current);
          return;
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (g.has_edge(u, static_cast<NodeId>(v)) && d[v][t] == d[u][t] - 1) {
            current.push_back(static_cast<NodeId>(v));
            self(self, static_cast<NodeId>(v));
            current.pop_back();
          }
        }
      };
      walk(walk, static_cast<NodeId>(s));
      for (const auto& p : paths)
        for (std::size_t i = 1; i + 1 < p.size(); ++i) bc[p[i]] += 1.0 / static_cast<double>(paths.size());
    }
  }
  return bc;
}

/// Unit-norm, non-negative dominant eigenvector of the adjacency matrix from a
/// dense symmetric eigensolver, and its eigenvalue.
struct DenseEigen {
  std::vector<double> vector;
  double value = 0.0;
  double gap = 0.0;  ///< lambda_max - second largest eigenvalue
};

inline DenseEigen dominant_eigenvector(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  DenseEigen out;
  out.value = solver.eigenvalues()(n - 1);
  out.gap = n > 1 ? out.value - solver.eigenvalues()(n - 2) : 0.0;
  Eigen::VectorXd v = solver.eigenvectors().col(n - 1);
  if (v.sum() < 0) v = -v;
  v.normalize();
  out.vector.assign(v.data(), v.data() + n);
  return out;
}

/// Shell index by literal peeling: for k = 0, 1, 2, ... repeatedly delete
/// every remaining node with remaining degree <= k.
inline std::vector<std::uint32_t> k_shell_by_peeling(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> alive(n, true);
  std::vector<std::uint32_t> shell(n, 0);
  std::size_t remaining = n;
  for (std::uint32_t k = 0; remaining > 0; ++k) {
    bool removed = true;
    while (removed) {
      removed = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        std::uint32_t deg = 0;
        for (NodeId u : g.neighbors(static_cast<NodeId>(v))) deg += alive[u];
        if (deg <= k) {
          alive[v] = false;
          shell[v] = k;
          --remaining;
          removed = true;
        }
      }
    }
  }
  return shell;
}

/// Gravity sum evaluated straight from the all-pairs distance matrix.
inline std::vector<double> gravity(const Graph& g, const std::vector<std::uint32_t>& ks, int radius,
                                   int exponent) {
  const auto d = all_pairs(g);
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && d[i][j] <= radius)
        out[i] += static_cast<double>(ks[i]) * ks[j] / std::pow(static_cast<double>(d[i][j]), exponent);
  return out;
}

/// Erdos-Renyi G(n, p).
inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.uniform01() < p) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
  return Graph::from_edges(n, edges);
}

inline bool is_connected(const Graph& g) {
  const auto d = all_pairs(g);
  for (const auto& row : d)
    for (int x : row)
      if (x >= kInf) return false;
  return true;
}

/// Rejection-samples a connected G(n, p).
inline Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

inline std::vector<NodeId> random_permutation(std::size_t n, Rng& rng) {
  std::vector<NodeId> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<NodeId>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

}  // namespace lsc::oracle
