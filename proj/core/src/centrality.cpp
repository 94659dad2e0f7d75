#include "lsc/centrality.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

#include "lsc/error.hpp"
#include "lsc/traversal.hpp"

namespace lsc {
namespace {

// Sources are processed in fixed blocks; partial results are merged in block
// order, so floating-point sums do not depend on the worker count.
constexpr std::size_t kSourceBlock = 64;

std::size_t block_count(std::size_t n) { return (n + kSourceBlock - 1) / kSourceBlock; }

std::string real_param(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void require_nodes(const Graph& g, std::size_t min_nodes, const char* what) {
  if (g.node_count() < min_nodes) {
    throw ParameterError(std::string(what) + " needs at least " + std::to_string(min_nodes) + " nodes");
  }
}

}  // namespace

std::string_view to_string(Measure m) noexcept {
  switch (m) {
    case Measure::kDegree: return "dc";
    case Measure::kEigenvector: return "ec";
    case Measure::kCloseness: return "cc";
    case Measure::kBetweenness: return "bc";
    case Measure::kGravity: return "gc";
    case Measure::kLexical: return "lsc";
  }
  return "?";
}

std::optional<Measure> parse_measure(std::string_view tag) noexcept {
  std::string lower(tag);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (Measure m : {Measure::kDegree, Measure::kEigenvector, Measure::kCloseness, Measure::kBetweenness,
                    Measure::kGravity, Measure::kLexical}) {
    if (lower == to_string(m)) return m;
  }
  return std::nullopt;
}

CentralityVector degree_centrality(const Graph& g) {
  require_nodes(g, 2, "degree centrality");
  const std::size_t n = g.node_count();
  CentralityVector out{Measure::kDegree, std::vector<double>(n), {}};
  const double denom = static_cast<double>(n - 1);
  for (std::size_t v = 0; v < n; ++v) out.scores[v] = static_cast<double>(g.degree(static_cast<NodeId>(v))) / denom;
  return out;
}

CentralityVector eigenvector_centrality(const Graph& g, const EigenvectorOptions& options) {
  if (g.edge_count() == 0) throw ParameterError("eigenvector centrality is undefined on an edgeless graph");
  const std::size_t n = g.node_count();
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);

  auto rayleigh = [&](const std::vector<double>& v) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double ax = 0.0;
      for (NodeId j : g.neighbors(static_cast<NodeId>(i))) ax += v[j];
      acc += v[i] * ax;
    }
    return acc;
  };

  std::size_t iter = 0;
  bool converged = false;
  while (iter < options.max_iterations) {
    ++iter;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = x[i];
      for (NodeId j : g.neighbors(static_cast<NodeId>(i))) acc += x[j];
      next[i] = acc;
      norm2 += acc * acc;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] *= inv;
      change = std::max(change, std::abs(next[i] - x[i]));
    }
    x.swap(next);
    if (change < options.tolerance) {
      converged = true;
      break;
    }
  }
  const double lambda = rayleigh(x);
  if (!converged) {
    throw ConvergenceError("eigenvector centrality did not converge in " + std::to_string(iter) + " iterations",
                           x, lambda, iter);
  }
  CentralityVector out{Measure::kEigenvector, std::move(x), {}};
  out.params["tolerance"] = real_param(options.tolerance);
  out.params["max_iterations"] = std::to_string(options.max_iterations);
  out.params["iterations"] = std::to_string(iter);
  out.params["lambda"] = real_param(lambda);
  out.params["start"] = "uniform";
  out.params["iteration_matrix"] = "A+I";
  return out;
}

CentralityVector closeness_centrality(const Graph& g, ClosenessConvention convention, Parallelism par) {
  require_nodes(g, 2, "closeness centrality");
  const std::size_t n = g.node_count();
  CentralityVector out{Measure::kCloseness, std::vector<double>(n, 0.0), {}};
  detail::parallel_for(block_count(n), par, [&](std::size_t block) {
    std::vector<Distance> dist(n, kUnreachable);
    std::vector<NodeId> queue;
    queue.reserve(n);
    const std::size_t end = std::min(n, (block + 1) * kSourceBlock);
    for (std::size_t s = block * kSourceBlock; s < end; ++s) {
      queue.clear();
      queue.push_back(static_cast<NodeId>(s));
      dist[s] = 0;
      std::uint64_t total = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        NodeId u = queue[head];
        total += dist[u];
        for (NodeId v : g.neighbors(u)) {
          if (dist[v] == kUnreachable) {
            dist[v] = dist[u] + 1;
            queue.push_back(v);
          }
        }
      }
      const auto reach = static_cast<double>(queue.size());
      for (NodeId v : queue) dist[v] = kUnreachable;
      if (total == 0) continue;
      const auto sum = static_cast<double>(total);
      if (convention == ClosenessConvention::kLiteral) {
        out.scores[s] = static_cast<double>(n) / sum;
      } else {
        out.scores[s] = ((reach - 1.0) / sum) * ((reach - 1.0) / static_cast<double>(n - 1));
      }
    }
  });
  out.params["convention"] =
      convention == ClosenessConvention::kLiteral ? "literal" : "component_scaled";
  return out;
}

CentralityVector betweenness_centrality(const Graph& g, bool normalized, Parallelism par) {
  const std::size_t n = g.node_count();
  if (normalized && n < 3) throw ParameterError("normalized betweenness needs at least 3 nodes");
  const std::size_t blocks = block_count(n);
  std::vector<std::vector<double>> partial(blocks);

  detail::parallel_for(blocks, par, [&](std::size_t block) {
    std::vector<double> acc(n, 0.0);
    std::vector<double> sigma(n, 0.0);
    std::vector<double> delta(n, 0.0);
    std::vector<Distance> dist(n, kUnreachable);
    std::vector<NodeId> order;
    order.reserve(n);
    const std::size_t end = std::min(n, (block + 1) * kSourceBlock);
    for (std::size_t s = block * kSourceBlock; s < end; ++s) {
      order.clear();
      order.push_back(static_cast<NodeId>(s));
      dist[s] = 0;
      sigma[s] = 1.0;
      for (std::size_t head = 0; head < order.size(); ++head) {
        NodeId u = order[head];
        for (NodeId v : g.neighbors(u)) {
          if (dist[v] == kUnreachable) {
            dist[v] = dist[u] + 1;
            order.push_back(v);
          }
          if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
        }
      }
      // Predecessors of w are the neighbors one level closer to s.
      for (std::size_t i = order.size(); i-- > 1;) {
        NodeId w = order[i];
        const double coeff = (1.0 + delta[w]) / sigma[w];
        for (NodeId v : g.neighbors(w)) {
          if (dist[v] != kUnreachable && dist[v] + 1 == dist[w]) delta[v] += sigma[v] * coeff;
        }
        acc[w] += delta[w];
      }
      for (NodeId v : order) {
        dist[v] = kUnreachable;
        sigma[v] = 0.0;
        delta[v] = 0.0;
      }
    }
    partial[block] = std::move(acc);
  });

  CentralityVector out{Measure::kBetweenness, std::vector<double>(n, 0.0), {}};
  for (const auto& p : partial)
    for (std::size_t v = 0; v < n; ++v) out.scores[v] += p[v];
  // Every unordered pair was counted from both endpoints.
  double scale = 0.5;
  if (normalized) scale /= static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
  for (double& x : out.scores) x *= scale;
  out.params["normalized"] = normalized ? "true" : "false";
  return out;
}

CentralityVector gravity_centrality(const Graph& g, const GravityOptions& options, Parallelism par) {
  if (options.radius == 0) throw ParameterError("gravity centrality radius must be >= 1");
  const std::size_t n = g.node_count();
  const auto shell = k_shell(g);
  std::vector<double> inv_pow(options.radius + 1, 0.0);
  for (unsigned d = 1; d <= options.radius; ++d) {
    inv_pow[d] = 1.0 / std::pow(static_cast<double>(d), static_cast<double>(options.exponent));
  }

  CentralityVector out{Measure::kGravity, std::vector<double>(n, 0.0), {}};
  detail::parallel_for(block_count(n), par, [&](std::size_t block) {
    std::vector<Distance> dist(n, kUnreachable);
    std::vector<NodeId> queue;
    const std::size_t end = std::min(n, (block + 1) * kSourceBlock);
    for (std::size_t s = block * kSourceBlock; s < end; ++s) {
      queue.clear();
      queue.push_back(static_cast<NodeId>(s));
      dist[s] = 0;
      double pull = 0.0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        NodeId u = queue[head];
        if (dist[u] > 0) pull += static_cast<double>(shell[u]) * inv_pow[dist[u]];
        if (dist[u] == options.radius) continue;
        for (NodeId v : g.neighbors(u)) {
          if (dist[v] == kUnreachable) {
            dist[v] = dist[u] + 1;
            queue.push_back(v);
          }
        }
      }
      for (NodeId v : queue) dist[v] = kUnreachable;
      out.scores[s] = static_cast<double>(shell[s]) * pull;
    }
  });
  out.params["radius"] = std::to_string(options.radius);
  out.params["exponent"] = std::to_string(options.exponent);
  return out;
}

CentralityVector compute_measure(const Graph& g, Measure m, const MeasureOptions& options, Parallelism par) {
  switch (m) {
    case Measure::kDegree: return degree_centrality(g);
    case Measure::kEigenvector: return eigenvector_centrality(g, options.eigenvector);
    case Measure::kCloseness: return closeness_centrality(g, options.closeness, par);
    case Measure::kBetweenness: return betweenness_centrality(g, options.betweenness_normalized, par);
    case Measure::kGravity: return gravity_centrality(g, options.gravity, par);
    case Measure::kLexical: break;
  }
  throw ParameterError("lsc produces a ranking, not a score vector");
}

}  // namespace lsc
