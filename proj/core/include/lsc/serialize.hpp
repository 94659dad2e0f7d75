#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lsc/centrality.hpp"
#include "lsc/evaluation.hpp"
#include "lsc/lexical.hpp"
#include "lsc/sir.hpp"
#include "lsc/stats.hpp"

namespace lsc {

// CSV writers. Reals use the shortest representation that round-trips
// (at least 10 significant digits are always preserved).
// `labels`, when non-empty, replaces node ids with the original tokens.

/// node,measure,score
void write_centrality_csv(std::ostream& out, const CentralityVector& v,
                          std::span<const std::string> labels = {});
/// rank,node  (rank is 1-based)
void write_ranking_csv(std::ostream& out, const NodeRanking& r, std::span<const std::string> labels = {});
/// node,<measure>... with the rounded values, in row order
void write_ranking_matrix_csv(std::ostream& out, const RankingMatrix& rm,
                              std::span<const std::string> labels = {});
/// node,mean_score,std
void write_sir_scores_csv(std::ostream& out, std::span<const SirResult> scores,
                          std::span<const std::string> labels = {});
/// t,mean_cumulative_infected
void write_curve_csv(std::ostream& out, std::span<const double> curve);
/// measure,tau,top_x_overlap,top_x_k,adjacent_inversions
void write_eval_csv(std::ostream& out, const EvalReport& report);
/// dataset,<measure>_seconds...
void write_benchmark_csv(std::ostream& out, const std::string& dataset, const BenchmarkResult& result);
/// nodes,edges,mean_degree,max_degree,density
void write_stats_csv(std::ostream& out, const std::string& dataset, const DatasetStats& s);

std::string format_real(double x);

nlohmann::json to_json(const NodeRanking& r);
nlohmann::json to_json(const EvalReport& report);
nlohmann::json to_json(const BenchmarkResult& result);
nlohmann::json to_json(const DatasetStats& s);

}  // namespace lsc
