#pragma once

#include <cstddef>

#include "lsc/graph.hpp"

namespace lsc {

/// Summary row of a dataset: |V|, |E|, mean degree, max degree, density.
struct DatasetStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double mean_degree = 0.0;
  std::size_t max_degree = 0;
  double density = 0.0;
};

/// Throws ParameterError for graphs with fewer than two nodes.
DatasetStats dataset_stats(const Graph& g);

}  // namespace lsc
