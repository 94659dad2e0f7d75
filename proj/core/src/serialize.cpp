#include "lsc/serialize.hpp"

#include <charconv>

namespace lsc {
namespace {

std::string label_of(NodeId v, std::span<const std::string> labels) {
  return labels.empty() ? std::to_string(v) : labels[v];
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_centrality_csv(std::ostream& out, const CentralityVector& v, std::span<const std::string> labels) {
  out << "node,measure,score\n";
  const auto tag = to_string(v.measure);
  for (std::size_t i = 0; i < v.scores.size(); ++i) {
    out << label_of(static_cast<NodeId>(i), labels) << ',' << tag << ',' << format_real(v.scores[i]) << '\n';
  }
}

void write_ranking_csv(std::ostream& out, const NodeRanking& r, std::span<const std::string> labels) {
  out << "rank,node\n";
  for (std::size_t i = 0; i < r.ordered_nodes.size(); ++i) {
    out << (i + 1) << ',' << label_of(r.ordered_nodes[i], labels) << '\n';
  }
}

void write_ranking_matrix_csv(std::ostream& out, const RankingMatrix& rm, std::span<const std::string> labels) {
  out << "node";
  for (Measure m : rm.measure_order) out << ',' << to_string(m);
  out << '\n';
  for (const auto& row : rm.rows) {
    out << label_of(row.node, labels);
    for (std::size_t c = 0; c < row.keys.size(); ++c) out << ',' << format_real(row.value(c, rm.precision));
    out << '\n';
  }
}

void write_sir_scores_csv(std::ostream& out, std::span<const SirResult> scores, std::span<const std::string> labels) {
  out << "node,mean_score,std\n";
  for (std::size_t i = 0; i < scores.size(); ++i) {
    out << label_of(static_cast<NodeId>(i), labels) << ',' << format_real(scores[i].mean_score) << ','
        << format_real(scores[i].score_std) << '\n';
  }
}

void write_curve_csv(std::ostream& out, std::span<const double> curve) {
  out << "t,mean_cumulative_infected\n";
  for (std::size_t t = 0; t < curve.size(); ++t) out << t << ',' << format_real(curve[t]) << '\n';
}

void write_eval_csv(std::ostream& out, const EvalReport& report) {
  out << "dataset,measure,tau,top_x_overlap,top_x_k,adjacent_inversions\n";
  for (const auto& [tag, m] : report.measures) {
    out << report.dataset << ',' << tag << ',' << format_real(m.tau) << ',' << m.top_x_overlap << ',' << m.top_x_k
        << ',' << m.adjacent_inversions << '\n';
  }
}

void write_benchmark_csv(std::ostream& out, const std::string& dataset, const BenchmarkResult& result) {
  out << "dataset";
  for (const auto& [tag, secs] : result.mean_seconds) out << ',' << tag << "_seconds";
  out << ",repetitions\n" << dataset;
  for (const auto& [tag, secs] : result.mean_seconds) out << ',' << format_real(secs);
  out << ',' << result.repetitions << '\n';
}

void write_stats_csv(std::ostream& out, const std::string& dataset, const DatasetStats& s) {
  out << "dataset,nodes,edges,mean_degree,max_degree,density\n"
      << dataset << ',' << s.node_count << ',' << s.edge_count << ',' << format_real(s.mean_degree) << ','
      << s.max_degree << ',' << format_real(s.density) << '\n';
}

nlohmann::json to_json(const NodeRanking& r) {
  return {{"source", std::string(to_string(r.source))}, {"ordered_nodes", r.ordered_nodes}};
}

nlohmann::json to_json(const EvalReport& report) {
  nlohmann::json measures = nlohmann::json::object();
  for (const auto& [tag, m] : report.measures) {
    nlohmann::json entry = {{"tau", m.tau},
                            {"top_x_overlap", m.top_x_overlap},
                            {"top_x_k", m.top_x_k},
                            {"adjacent_inversions", m.adjacent_inversions}};
    if (!m.ranking.empty()) entry["ranking"] = m.ranking;
    measures[tag] = std::move(entry);
  }
  nlohmann::json j = {{"dataset", report.dataset},
                      {"beta", report.beta},
                      {"gamma", report.gamma},
                      {"replications", report.replications},
                      {"rng_seed", report.rng_seed},
                      {"x_percent", report.x_percent},
                      {"tau_variant", report.tau_variant},
                      {"measures", std::move(measures)}};
  if (!report.sir_scores.empty()) {
    j["sir_scores"] = report.sir_scores;
    j["sir_std"] = report.sir_std;
  }
  return j;
}

nlohmann::json to_json(const BenchmarkResult& result) {
  return {{"mean_seconds", result.mean_seconds},
          {"min_seconds", result.min_seconds},
          {"repetitions", result.repetitions},
          {"environment", result.environment}};
}

nlohmann::json to_json(const DatasetStats& s) {
  return {{"nodes", s.node_count},
          {"edges", s.edge_count},
          {"mean_degree", s.mean_degree},
          {"max_degree", s.max_degree},
          {"density", s.density}};
}

}  // namespace lsc
