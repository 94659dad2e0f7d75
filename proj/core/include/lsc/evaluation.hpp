#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lsc/centrality.hpp"
#include "lsc/graph.hpp"
#include "lsc/lexical.hpp"
#include "lsc/parallel.hpp"
#include "lsc/sir.hpp"

namespace lsc {

enum class TauVariant {
  /// (Nc - Nd) / (N(N-1)/2); tied pairs shrink |tau|.
  kA,
  /// (Nc - Nd) / sqrt((N0 - Ta)(N0 - Tb)), the tie-corrected form.
  kB,
};

/// Pair counts behind a Kendall coefficient.
struct TauCounts {
  std::int64_t pairs = 0;          ///< N(N-1)/2
  std::int64_t concordant_minus_discordant = 0;
  std::int64_t tied_a = 0;         ///< pairs tied in a (including those tied in both)
  std::int64_t tied_b = 0;
};

/// O(N log N): sort by (a, b), then count inversions of b by merge sort.
TauCounts kendall_counts(std::span<const double> a, std::span<const double> b);
/// O(N^2) enumeration of every pair; the reference for kendall_counts.
TauCounts kendall_counts_naive(std::span<const double> a, std::span<const double> b);

double tau_from_counts(const TauCounts& c, TauVariant variant = TauVariant::kA);

/// Throws ParameterError on length mismatch, N < 2 or non-finite input.
double kendall_tau(std::span<const double> a, std::span<const double> b,
                   TauVariant variant = TauVariant::kA);
double kendall_tau_naive(std::span<const double> a, std::span<const double> b,
                         TauVariant variant = TauVariant::kA);

struct Overlap {
  std::size_t overlap = 0;
  std::size_t k = 0;
};

/// k = floor(n * x_percent / 100); overlap of the ranking's first k nodes with
/// the k best nodes by score (ties: higher score, then lower id).
/// Throws ParameterError if x_percent is outside (0, 100], sizes differ or k = 0.
Overlap top_x_overlap(const NodeRanking& ranking, std::span<const double> scores, double x_percent);

/// Node ids by descending score, ties by ascending id.
std::vector<NodeId> score_order(std::span<const double> scores);

struct RankScoreSeries {
  /// (position in ranking, score of the node at that position).
  std::vector<std::pair<std::size_t, double>> points;
  /// Positions i with score[i] < score[i+1].
  std::size_t adjacent_inversions = 0;
};

RankScoreSeries rank_vs_score_series(const NodeRanking& ranking, std::span<const double> scores);

struct BenchmarkResult {
  /// Mean wall-clock seconds per measure, keyed by the measure tag.
  std::map<std::string, double> mean_seconds;
  std::map<std::string, double> min_seconds;
  std::size_t repetitions = 0;
  std::map<std::string, std::string> environment;
};

/// Times each measure `repetitions` times after one discarded warm-up run.
/// Runs serially. Measure::kLexical includes its sub-measure computation.
BenchmarkResult benchmark_runtime(const Graph& g, std::span<const Measure> measures,
                                  std::size_t repetitions, const LscOptions& lsc = {});

struct MeasureReport {
  double tau = 0.0;
  std::size_t top_x_overlap = 0;
  std::size_t top_x_k = 0;
  std::size_t adjacent_inversions = 0;
  std::vector<NodeId> ranking;
};

struct EvalConfig {
  std::string dataset = "unnamed";
  SirParams sir;
  double x_percent = 5.0;
  TauVariant tau_variant = TauVariant::kA;
  LscOptions lsc;
  /// Keep per-node rankings and SIR scores in the report.
  bool include_rankings = true;
};

struct EvalReport {
  std::string dataset;
  double beta = 0.0;
  double gamma = 0.0;
  std::size_t replications = 0;
  std::uint64_t rng_seed = 0;
  double x_percent = 0.0;
  std::string tau_variant;
  /// Keyed by measure tag: dc, ec, cc, bc, gc, lsc.
  std::map<std::string, MeasureReport> measures;
  std::vector<double> sir_scores;
  std::vector<double> sir_std;
};

/// The full comparison: six rankings, SIR ground truth for every node, tau of
/// each measure's values against the SIR means (LSC uses its negated rank
/// position as value) and top-x overlap. Deterministic for fixed config.
EvalReport evaluate_dataset(const Graph& g, const EvalConfig& config, Parallelism par = {});

std::string to_string(TauVariant v);

}  // namespace lsc
