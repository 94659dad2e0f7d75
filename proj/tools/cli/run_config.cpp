#include "run_config.hpp"

#include "lsc/error.hpp"

namespace lsc::cli {
namespace {

std::vector<Measure> to_measures(const std::vector<std::string>& tags, const char* flag) {
  std::vector<Measure> out;
  for (const auto& t : tags) {
    auto m = parse_measure(t);
    if (!m) throw ParameterError(std::string(flag) + ": unknown measure '" + t + "'");
    out.push_back(*m);
  }
  return out;
}

}  // namespace

void RunConfig::validate() const {
  const int sources = !graph_path.empty() + !generate.empty() + !dataset.empty();
  if (sources > 1) throw ParameterError("use only one of --graph, --generate, --dataset");
  if (precision > kMaxPrecision) throw ParameterError("--precision must be <= 15");
  if (rounding != "half_even" && rounding != "truncate") throw ParameterError("--rounding must be half_even or truncate");
  if (cc_convention != "component_scaled" && cc_convention != "literal") {
    throw ParameterError("--cc-convention must be component_scaled or literal");
  }
  if (gc_radius < 1) throw ParameterError("--gc-radius must be >= 1");
  if (!(ec_tolerance > 0.0)) throw ParameterError("--ec-tol must be positive");
  if (ec_max_iterations < 1) throw ParameterError("--ec-max-iter must be >= 1");
  if (beta >= 0.0 && beta > 1.0) throw ParameterError("--beta must lie in [0, 1]");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw ParameterError("--gamma must lie in (0, 1]");
  if (replications < 1) throw ParameterError("--reps must be >= 1");
  if (!(x_percent > 0.0 && x_percent <= 100.0)) throw ParameterError("--x-percent must lie in (0, 100]");
  if (tau_variant != "a" && tau_variant != "b") throw ParameterError("--tau-variant must be a or b");
  if (bench_repetitions < 1) throw ParameterError("--reps must be >= 1");
  if (top < 1) throw ParameterError("--top must be >= 1");
  for (auto m : to_measures(measure_order, "--measure-order")) {
    if (m == Measure::kLexical) throw ParameterError("--measure-order cannot contain lsc");
  }
  if (measure_order.empty()) throw ParameterError("--measure-order needs at least one measure");
  to_measures(measures, "--measures");
  to_measures(seeds_from, "--seeds-from");
}

LscOptions RunConfig::lsc_options() const {
  LscOptions o;
  o.precision = precision;
  o.measure_order = to_measures(measure_order, "--measure-order");
  o.rounding = rounding == "truncate" ? RoundingMode::kTruncate : RoundingMode::kHalfEven;
  o.measures.eigenvector = {ec_tolerance, ec_max_iterations};
  o.measures.closeness =
      cc_convention == "literal" ? ClosenessConvention::kLiteral : ClosenessConvention::kComponentScaled;
  o.measures.betweenness_normalized = !bc_raw;
  o.measures.gravity = {gc_radius, gc_exponent};
  return o;
}

SirParams RunConfig::sir_params(double resolved_beta) const {
  SirParams p;
  p.beta = resolved_beta;
  p.gamma = gamma;
  p.replications = replications;
  p.rng_seed = rng_seed;
  if (steps > 0) p.max_steps = steps;
  return p;
}

TauVariant RunConfig::tau() const { return tau_variant == "b" ? TauVariant::kB : TauVariant::kA; }

std::vector<Measure> RunConfig::parsed_measures() const { return to_measures(measures, "--measures"); }

}  // namespace lsc::cli
