#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsc/graph.hpp"
#include "lsc/parallel.hpp"

namespace lsc {

enum class Measure { kDegree, kEigenvector, kCloseness, kBetweenness, kGravity, kLexical };

/// Short lowercase tag: "dc", "ec", "cc", "bc", "gc", "lsc".
std::string_view to_string(Measure m) noexcept;
/// Inverse of to_string (case-insensitive); nullopt for unknown tags.
std::optional<Measure> parse_measure(std::string_view tag) noexcept;

/// One score per node for a named measure, plus the settings that produced it.
struct CentralityVector {
  Measure measure = Measure::kDegree;
  std::vector<double> scores;
  std::map<std::string, std::string> params;
};

enum class ClosenessConvention {
  /// n / sum of distances to reachable nodes.
  kLiteral,
  /// ((r-1)/sum) * ((r-1)/(n-1)), r = size of the node's component.
  kComponentScaled,
};

struct EigenvectorOptions {
  double tolerance = 1e-8;
  std::size_t max_iterations = 1000;
};

struct GravityOptions {
  unsigned radius = 3;
  unsigned exponent = 2;
};

/// degree(i) / (n-1). Throws ParameterError for n < 2.
CentralityVector degree_centrality(const Graph& g);

/// Dominant eigenvector of the adjacency matrix with unit Euclidean norm,
/// found by power iteration from the uniform vector. Iterates on A + I,
/// which has the same eigenvectors but no -lambda partner on bipartite
/// graphs, so stars, trees and even cycles converge instead of oscillating.
/// params["lambda"] holds the Rayleigh quotient x'Ax of the result.
///
/// Throws ParameterError on an edgeless graph and ConvergenceError (with the
/// last iterate) when the max entry change stays >= tolerance.
CentralityVector eigenvector_centrality(const Graph& g, const EigenvectorOptions& options = {});

/// Isolated nodes score 0 under either convention. Throws for n < 2.
CentralityVector closeness_centrality(const Graph& g,
                                      ClosenessConvention convention = ClosenessConvention::kComponentScaled,
                                      Parallelism par = {});

/// Exact shortest-path betweenness (Brandes dependency accumulation).
/// Unnormalized values count each unordered pair once; normalized values
/// divide that by (n-1)(n-2)/2. Throws ParameterError when normalizing n < 3.
CentralityVector betweenness_centrality(const Graph& g, bool normalized = true, Parallelism par = {});

/// sum over j with 1 <= d(i,j) <= radius of ks_i * ks_j / d(i,j)^exponent,
/// ks being the k-shell index. Throws ParameterError for radius 0.
CentralityVector gravity_centrality(const Graph& g, const GravityOptions& options = {},
                                    Parallelism par = {});

/// Settings for compute_measure: one bundle covering every measure.
struct MeasureOptions {
  EigenvectorOptions eigenvector;
  ClosenessConvention closeness = ClosenessConvention::kComponentScaled;
  bool betweenness_normalized = true;
  GravityOptions gravity;
};

/// Dispatches to one of the five vector-valued measures. Measure::kLexical
/// yields a ranking, not scores, and is rejected with ParameterError.
CentralityVector compute_measure(const Graph& g, Measure m, const MeasureOptions& options = {},
                                 Parallelism par = {});

}  // namespace lsc
