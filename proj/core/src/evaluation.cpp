#include "lsc/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>

#include "lsc/error.hpp"

namespace lsc {

std::vector<NodeId> score_order(std::span<const double> scores) {
  std::vector<NodeId> order(scores.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
  return order;
}

Overlap top_x_overlap(const NodeRanking& ranking, std::span<const double> scores, double x_percent) {
  if (!(x_percent > 0.0 && x_percent <= 100.0)) throw ParameterError("x_percent must lie in (0, 100]");
  const std::size_t n = scores.size();
  if (ranking.size() != n) throw ParameterError("ranking and scores differ in length");
  // The epsilon keeps products like 20 * 5 / 100 from flooring to 0.999...
  const auto k = static_cast<std::size_t>(std::floor(static_cast<double>(n) * x_percent / 100.0 + 1e-9));
  if (k == 0) throw ParameterError("top-x set is empty: x_percent too small for " + std::to_string(n) + " nodes");
  const auto truth = score_order(scores);
  std::vector<char> in_truth(n, 0);
  for (std::size_t i = 0; i < k; ++i) in_truth[truth[i]] = 1;
  Overlap o{0, k};
  for (std::size_t i = 0; i < k; ++i) o.overlap += in_truth[ranking.ordered_nodes[i]];
  return o;
}

RankScoreSeries rank_vs_score_series(const NodeRanking& ranking, std::span<const double> scores) {
  if (ranking.size() != scores.size()) throw ParameterError("ranking and scores differ in length");
  RankScoreSeries s;
  s.points.reserve(ranking.size());
  for (std::size_t i = 0; i < ranking.size(); ++i) s.points.emplace_back(i, scores[ranking.ordered_nodes[i]]);
  for (std::size_t i = 0; i + 1 < s.points.size(); ++i) {
    if (s.points[i].second < s.points[i + 1].second) ++s.adjacent_inversions;
  }
  return s;
}

BenchmarkResult benchmark_runtime(const Graph& g, std::span<const Measure> measures, std::size_t repetitions,
                                  const LscOptions& lsc) {
  if (repetitions < 1) throw ParameterError("benchmark needs at least one repetition");
  using Clock = std::chrono::steady_clock;
  BenchmarkResult result;
  result.repetitions = repetitions;
  volatile double sink = 0.0;
  for (Measure m : measures) {
    auto run_once = [&] {
      if (m == Measure::kLexical) {
        auto r = lexical_sorting_centrality(g, lsc);
        sink = sink + static_cast<double>(r.ranking.ordered_nodes.front());
      } else {
        auto v = compute_measure(g, m, lsc.measures);
        sink = sink + v.scores.front();
      }
    };
    run_once();  // warm-up, discarded
    double total = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < repetitions; ++r) {
      const auto start = Clock::now();
      run_once();
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      total += secs;
      best = std::min(best, secs);
    }
    const std::string tag(to_string(m));
    result.mean_seconds[tag] = total / static_cast<double>(repetitions);
    result.min_seconds[tag] = best;
  }
  result.environment["hardware_threads"] = std::to_string(std::thread::hardware_concurrency());
#if defined(__clang__)
  result.environment["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  result.environment["compiler"] = std::string("gcc ") + __VERSION__;
#endif
#ifdef NDEBUG
  result.environment["assertions"] = "off";
#else
  result.environment["assertions"] = "on";
#endif
  result.environment["nodes"] = std::to_string(g.node_count());
  result.environment["edges"] = std::to_string(g.edge_count());
  return result;
}

EvalReport evaluate_dataset(const Graph& g, const EvalConfig& config, Parallelism par) {
  config.sir.validate();
  EvalReport report;
  report.dataset = config.dataset;
  report.beta = config.sir.beta;
  report.gamma = config.sir.gamma;
  report.replications = config.sir.replications;
  report.rng_seed = config.sir.rng_seed;
  report.x_percent = config.x_percent;
  report.tau_variant = to_string(config.tau_variant);

  const auto sir = score_all_nodes(g, config.sir, par);
  report.sir_scores.reserve(sir.size());
  for (const auto& r : sir) {
    report.sir_scores.push_back(r.mean_score);
    report.sir_std.push_back(r.score_std);
  }

  auto fill = [&](Measure m, const NodeRanking& ranking, std::span<const double> values) {
    MeasureReport mr;
    mr.tau = kendall_tau(values, report.sir_scores, config.tau_variant);
    const auto o = top_x_overlap(ranking, report.sir_scores, config.x_percent);
    mr.top_x_overlap = o.overlap;
    mr.top_x_k = o.k;
    mr.adjacent_inversions = rank_vs_score_series(ranking, report.sir_scores).adjacent_inversions;
    if (config.include_rankings) mr.ranking = ranking.ordered_nodes;
    report.measures[std::string(to_string(m))] = std::move(mr);
  };

  for (Measure m : {Measure::kDegree, Measure::kEigenvector, Measure::kCloseness, Measure::kBetweenness,
                    Measure::kGravity}) {
    const auto v = compute_measure(g, m, config.lsc.measures, par);
    fill(m, ranking_from_scores(v), v.scores);
  }
  const auto lsc = lexical_sorting_centrality(g, config.lsc, par);
  // LSC defines an order, not values: the negated position stands in, shared
  // by all nodes whose rounded tuples are identical.
  std::vector<double> lsc_values(g.node_count());
  const auto& order = lsc.ranking.ordered_nodes;
  std::size_t group_start = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && lsc.matrix.rows[order[i]].keys != lsc.matrix.rows[order[i - 1]].keys) group_start = i;
    lsc_values[order[i]] = -static_cast<double>(group_start);
  }
  fill(Measure::kLexical, lsc.ranking, lsc_values);
  if (!config.include_rankings) {
    report.sir_scores.clear();
    report.sir_std.clear();
  }
  return report;
}

}  // namespace lsc
