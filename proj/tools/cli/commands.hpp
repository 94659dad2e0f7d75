#pragma once

#include <ostream>
#include <string>

#include "lsc/edge_list.hpp"
#include "run_config.hpp"

namespace lsc::cli {

struct Dataset {
  std::string name;
  LoadedGraph loaded;
  double default_beta = 0.1;
};

/// Resolves --graph / --generate / --dataset into a graph.
Dataset load_dataset(const RunConfig& config);

// Each command writes its files under config.output_dir and lists them on `log`.
void cmd_centrality(const RunConfig& config, std::ostream& log);
void cmd_sir(const RunConfig& config, std::ostream& log);
void cmd_evaluate(const RunConfig& config, std::ostream& log);
void cmd_bench(const RunConfig& config, std::ostream& log);
void cmd_fetch(const RunConfig& config, std::ostream& log);
void cmd_stats(const RunConfig& config, std::ostream& log);

}  // namespace lsc::cli
