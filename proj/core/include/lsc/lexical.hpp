#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lsc/centrality.hpp"
#include "lsc/graph.hpp"

namespace lsc {

enum class RoundingMode {
  /// Round the shortest decimal form of the value, ties to even digit.
  kHalfEven,
  /// Drop digits past the precision (0.05963 -> 0.05 at two places).
  kTruncate,
};

inline constexpr unsigned kMaxPrecision = 15;

/// `value` reduced to `precision` decimal places and returned as the integer
/// value * 10^precision. Works on the shortest round-trip decimal string of
/// the double, so 0.76525 is treated as exactly 0.76525.
/// Throws ParameterError if precision > kMaxPrecision, the value is not
/// finite, or the scaled integer does not fit in 63 bits.
std::int64_t scaled_decimal(double value, unsigned precision, RoundingMode mode);

struct RankingRow {
  NodeId node = 0;
  /// Rounded values as scaled integers (value * 10^precision); the sort key.
  std::vector<std::int64_t> keys;

  double value(std::size_t column, unsigned precision) const;
};

/// Per-node tuples of rounded centrality values; the "words" that get sorted.
struct RankingMatrix {
  std::vector<RankingRow> rows;
  std::vector<Measure> measure_order;
  unsigned precision = 5;
  RoundingMode rounding = RoundingMode::kHalfEven;
};

/// Node ids, most influential first.
struct NodeRanking {
  std::vector<NodeId> ordered_nodes;
  Measure source = Measure::kLexical;

  std::size_t size() const noexcept { return ordered_nodes.size(); }
  /// position[v] = index of v in ordered_nodes.
  std::vector<std::size_t> positions() const;
};

/// Row i holds every vector's score for node i, rounded to `precision`.
/// Throws ParameterError on an empty list, length mismatch or precision > 15.
RankingMatrix build_ranking_matrix(std::span<const CentralityVector> vectors, unsigned precision,
                                   RoundingMode rounding = RoundingMode::kHalfEven);

/// Rows in descending lexicographic order of their keys; rows with identical
/// tuples keep their relative input order.
NodeRanking lexical_sort(const RankingMatrix& rm);

/// Descending by score, ties by ascending node id.
NodeRanking ranking_from_scores(const CentralityVector& v);

struct LscOptions {
  unsigned precision = 5;
  std::vector<Measure> measure_order = {Measure::kDegree, Measure::kEigenvector, Measure::kCloseness};
  RoundingMode rounding = RoundingMode::kHalfEven;
  MeasureOptions measures;
};

struct LscResult {
  NodeRanking ranking;
  RankingMatrix matrix;
  /// The sub-measure vectors in measure_order, with their params.
  std::vector<CentralityVector> inputs;
};

/// Computes the measures in options.measure_order, builds the ranking matrix
/// and sorts it. Throws ParameterError for n < 2 or an order that is empty or
/// contains Measure::kLexical; sub-measure errors propagate.
LscResult lexical_sorting_centrality(const Graph& g, const LscOptions& options = {},
                                     Parallelism par = {});

std::string to_string(RoundingMode mode);

}  // namespace lsc
