#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lsc/graph.hpp"
#include "lsc/parallel.hpp"
#include "lsc/rng.hpp"

namespace lsc {

struct SirParams {
  double beta = 0.1;   ///< per-contact, per-step infection probability
  double gamma = 1.0;  ///< per-step recovery probability
  std::optional<std::size_t> max_steps;  ///< run to extinction when empty
  std::size_t replications = 1000;
  std::uint64_t rng_seed = 0;

  /// Throws ParameterError unless 0 <= beta <= 1, 0 < gamma <= 1, replications >= 1.
  void validate() const;
};

struct SirCounts {
  std::size_t susceptible = 0;
  std::size_t infectious = 0;
  std::size_t recovered = 0;
};

/// Called after the seeding (t = 0) and after every step with the state counts.
using SirObserver = std::function<void(std::size_t step, const SirCounts&)>;

struct SirRun {
  /// Recovered + still infectious at termination (ever infected).
  std::size_t final_count = 0;
  /// Steps executed before the epidemic died out or hit max_steps.
  std::size_t steps = 0;
  /// Cumulative ever-infected count after each step; curve[0] = |seeds|.
  std::vector<std::size_t> curve;
};

/// One synchronous discrete-time SIR run. Each step every infectious node
/// tries each susceptible neighbor once with probability beta (multiple hits
/// on a node count once), then each node that was infectious when the step
/// began recovers with probability gamma. Nodes infected during a step start
/// transmitting on the next one.
///
/// Throws ParameterError on an empty seed set or an out-of-range seed.
SirRun run_single(const Graph& g, std::span<const NodeId> seeds, const SirParams& params, Rng& rng,
                  const SirObserver& observer = {});

struct SirResult {
  double mean_score = 0.0;
  /// Sample standard deviation over replications (0 for one replication).
  double score_std = 0.0;
  std::vector<std::size_t> per_replication_scores;
  /// Mean cumulative ever-infected count at t = 0..max_steps; only filled by
  /// spread_curve.
  std::vector<double> curve;
};

/// `replications` runs with `seed` as the only initially infected node.
/// Replication r draws from the stream derive_seed(rng_seed, seed, r).
SirResult spreading_score(const Graph& g, NodeId seed, const SirParams& params);

/// Averaged spread-over-time curve for a seed set. params.max_steps must be
/// set. Replication r draws from derive_seed(rng_seed, kCurveStreamTag, r).
SirResult spread_curve(const Graph& g, std::span<const NodeId> seeds, const SirParams& params);

inline constexpr std::uint64_t kCurveStreamTag = 0xC0FFEE0000000000ULL;

/// spreading_score of every node. Each node has its own streams, so the
/// result is identical for any worker count or evaluation order.
std::vector<SirResult> score_all_nodes(const Graph& g, const SirParams& params, Parallelism par = {});

}  // namespace lsc
