#include "app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>
#include <sstream>

#include "commands.hpp"
#include "lsc/error.hpp"
#include "lsc/serialize.hpp"

namespace lsc::cli {
namespace {

enum Group : unsigned {
  kInput = 1,
  kCentrality = 2,
  kSir = 4,
  kEval = 8,
  kBench = 16,
};

std::string toml_value(const std::string& s) { return nlohmann::json(s).dump(); }
std::string toml_value(bool b) { return b ? "true" : "false"; }
std::string toml_value(double x) { return format_real(x); }
template <class T>
  requires std::is_integral_v<T>
std::string toml_value(T x) {
  return std::to_string(x);
}
std::string toml_value(const std::vector<std::string>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + toml_value(v[i]);
  return out + "]";
}

// Registers options on one subcommand and remembers how to print them back
// as a TOML section that --config accepts.
class Binder {
 public:
  explicit Binder(CLI::App& app) : app_(app) {}

  template <class T>
  void option(const std::string& name, T& field, const std::string& help) {
    auto* opt = app_.add_option("--" + name, field, help);
    if constexpr (std::is_same_v<T, std::vector<std::string>>) {
      opt->delimiter(',');
    } else {
      opt->capture_default_str();
    }
    dumpers_.emplace_back([name, &field](std::ostream& out) {
      if constexpr (std::is_same_v<T, std::vector<std::string>>) {
        if (field.empty()) return;
      }
      out << name << '=' << toml_value(field) << '\n';
    });
  }

  void flag(const std::string& name, bool& field, const std::string& help) {
    app_.add_flag("--" + name, field, help);
    dumpers_.emplace_back([name, &field](std::ostream& out) { out << name << '=' << toml_value(field) << '\n'; });
  }

  std::string dump() const {
    std::ostringstream out;
    out << '[' << app_.get_name() << "]\n";
    for (const auto& d : dumpers_) d(out);
    return out.str();
  }

 private:
  CLI::App& app_;
  std::vector<std::function<void(std::ostream&)>> dumpers_;
};

void add_options(Binder& b, RunConfig& c, unsigned groups) {
  b.option("threads", c.threads, "worker threads (0 = all cores)");
  b.option("output-dir", c.output_dir, "directory for result files");
  b.option("registry", c.registry_path, "dataset registry JSON");
  if (groups & kInput) {
    b.option("graph", c.graph_path, "edge list file");
    b.option("generate", c.generate, "synthetic graph, ba:<n>:<m>:<seed>");
    b.option("dataset", c.dataset, "registry dataset name");
    b.option("data-dir", c.data_dir, "where fetched datasets live");
    b.option("name", c.name, "prefix for output files");
    b.flag("relabel", c.relabel, "map arbitrary node tokens to dense ids");
    b.flag("allow-extra-columns", c.allow_extra_columns, "ignore columns after the first two");
  }
  if (groups & (kCentrality | kSir | kEval | kBench)) {
    b.option("precision", c.precision, "decimal places kept by lsc");
    b.option("measure-order", c.measure_order, "lsc sort keys, most significant first");
    b.option("rounding", c.rounding, "half_even or truncate");
    b.option("cc-convention", c.cc_convention, "component_scaled or literal");
    b.option("gc-radius", c.gc_radius, "gravity radius");
    b.option("gc-exponent", c.gc_exponent, "gravity distance exponent");
    b.option("ec-tol", c.ec_tolerance, "eigenvector L1 tolerance");
    b.option("ec-max-iter", c.ec_max_iterations, "eigenvector iteration cap");
    b.flag("bc-raw", c.bc_raw, "unnormalized betweenness");
  }
  if (groups & (kCentrality | kBench)) {
    b.option("measures", c.measures, "dc,ec,cc,bc,gc,lsc");
  }
  if (groups & (kSir | kEval)) {
    b.option("beta", c.beta, "infection probability (negative = dataset default)");
    b.option("gamma", c.gamma, "recovery probability");
    b.option("reps", c.replications, "replications per seed");
    b.option("seed", c.rng_seed, "random seed");
  }
  if (groups & kSir) {
    b.option("steps", c.steps, "fixed horizon (0 = until extinction)");
    b.option("seeds-from", c.seeds_from, "measures whose top nodes seed a spread curve");
    b.option("top", c.top, "seed-set size for --seeds-from");
    b.option("seed-nodes", c.seed_nodes, "explicit seed labels");
  }
  if (groups & kEval) {
    b.option("x-percent", c.x_percent, "top-x% overlap size");
    b.option("tau-variant", c.tau_variant, "a or b");
  }
  if (groups & kBench) {
    b.option("reps", c.bench_repetitions, "timed repetitions");
  }
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << nlohmann::json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Lexical sorting centrality and SIR evaluation", "lsc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.set_config("--config", "", "read options from a TOML file (see --dump-config)");

  struct Sub {
    CLI::App* app;
    std::unique_ptr<Binder> binder;
    std::function<void(const RunConfig&, std::ostream&)> run;
    bool dump = false;
  };
  std::vector<Sub> subs;
  subs.reserve(6);
  auto add = [&](const char* name, const char* help, unsigned groups, auto fn) -> Sub& {
    auto* s = app.add_subcommand(name, help);
    auto& sub = subs.emplace_back(Sub{s, std::make_unique<Binder>(*s), fn});
    add_options(*sub.binder, config, groups);
    s->add_flag("--dump-config", sub.dump, "print the effective options as TOML and exit")->configurable(false);
    return sub;
  };
  add("centrality", "compute centrality scores and rankings", kInput | kCentrality, cmd_centrality);
  add("sir", "simulate SIR spreading", kInput | kSir, cmd_sir);
  add("evaluate", "compare rankings against SIR spreading ability", kInput | kEval, cmd_evaluate);
  add("bench", "time centrality computations", kInput | kBench, cmd_bench);
  add("stats", "describe a graph", kInput, cmd_stats);
  add("fetch", "download registry datasets", 0, cmd_fetch).binder->option("name", config.fetch_names,
                                                                             "datasets to fetch (default: all)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    print_error(err, "usage", e.what());
    return 2;
  }

  for (auto& s : subs) {
    if (!s.app->parsed()) continue;
    if (s.dump) {
      out << s.binder->dump();
      return 0;
    }
    try {
      s.run(config, out);
      return 0;
    } catch (const ParameterError& e) {
      print_error(err, "parameter", e.what());
      return 2;
    } catch (const ParseError& e) {
      print_error(err, "parse", e.what());
    } catch (const ConvergenceError& e) {
      print_error(err, "convergence", e.what());
    } catch (const std::exception& e) {
      print_error(err, "runtime", e.what());
    }
    return 1;
  }
  return 2;
}

}  // namespace lsc::cli
