#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lsc/evaluation.hpp"
#include "lsc/lexical.hpp"
#include "lsc/sir.hpp"

namespace lsc::cli {

/// Every knob a subcommand can take. Values are validated against the owning
/// module's preconditions by validate() before any work starts.
struct RunConfig {
  // Input
  std::string graph_path;
  std::string generate;  ///< "ba:<n>:<m>:<seed>"
  std::string dataset;   ///< registry name
  std::string name;      ///< output file prefix; derived when empty
  bool relabel = false;
  bool allow_extra_columns = false;
  std::string registry_path;
  std::string data_dir;
  std::string output_dir = ".";
  std::size_t threads = 1;

  // Centrality and LSC
  std::vector<std::string> measures = {"lsc"};
  unsigned precision = 5;
  std::vector<std::string> measure_order = {"dc", "ec", "cc"};
  std::string rounding = "half_even";
  std::string cc_convention = "component_scaled";
  unsigned gc_radius = 3;
  unsigned gc_exponent = 2;
  double ec_tolerance = 1e-8;
  std::size_t ec_max_iterations = 1000;
  bool bc_raw = false;

  // SIR
  double beta = -1.0;  ///< negative: dataset default
  double gamma = 1.0;
  std::size_t replications = 1000;
  std::uint64_t rng_seed = 42;
  std::size_t steps = 0;  ///< 0: run to extinction
  std::vector<std::string> seeds_from;
  std::size_t top = 10;
  std::vector<std::string> seed_nodes;  ///< node labels as they appear in the input

  // Evaluation and benchmark
  double x_percent = 5.0;
  std::string tau_variant = "a";
  std::size_t bench_repetitions = 10;

  // Fetch
  std::vector<std::string> fetch_names;

  /// Throws ParameterError describing the first invalid field.
  void validate() const;

  LscOptions lsc_options() const;
  SirParams sir_params(double resolved_beta) const;
  TauVariant tau() const;
  std::vector<Measure> parsed_measures() const;
};

}  // namespace lsc::cli
