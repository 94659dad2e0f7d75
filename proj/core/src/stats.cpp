#include "lsc/stats.hpp"

#include "lsc/error.hpp"

namespace lsc {

DatasetStats dataset_stats(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n < 2) throw ParameterError("dataset statistics need at least 2 nodes");
  DatasetStats s;
  s.node_count = n;
  s.edge_count = g.edge_count();
  s.mean_degree = 2.0 * static_cast<double>(s.edge_count) / static_cast<double>(n);
  s.max_degree = g.max_degree();
  s.density = 2.0 * static_cast<double>(s.edge_count) / (static_cast<double>(n) * static_cast<double>(n - 1));
  return s;
}

}  // namespace lsc
