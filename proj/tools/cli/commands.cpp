#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>

#include "fetch.hpp"
#include "lsc/error.hpp"
#include "lsc/generators.hpp"
#include "lsc/serialize.hpp"
#include "lsc/stats.hpp"
#include "lsc/traversal.hpp"
#include "registry.hpp"

namespace lsc::cli {
namespace fs = std::filesystem;
namespace {

Registry registry_for(const RunConfig& config) {
  return load_registry(config.registry_path.empty() ? std::string(LSC_DEFAULT_REGISTRY) : config.registry_path);
}

std::size_t parse_size(std::string_view s, const std::string& what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParameterError("bad " + what + " '" + std::string(s) + "'");
  return v;
}

// "ba:<n>:<m>:<seed>"
Graph generate(const std::string& recipe, std::string& name) {
  std::vector<std::string_view> parts;
  std::string_view rest(recipe);
  for (auto pos = rest.find(':'); pos != std::string_view::npos; pos = rest.find(':')) {
    parts.push_back(rest.substr(0, pos));
    rest.remove_prefix(pos + 1);
  }
  parts.push_back(rest);
  if (parts.size() != 4 || parts[0] != "ba") throw ParameterError("--generate expects ba:<n>:<m>:<seed>");
  const auto n = parse_size(parts[1], "node count");
  const auto m = parse_size(parts[2], "attachment count");
  const auto seed = parse_size(parts[3], "seed");
  name = "ba_" + std::string(parts[1]) + "_" + std::string(parts[2]) + "_" + std::string(parts[3]);
  return generate_barabasi_albert(n, m, seed);
}

LoadedGraph with_id_labels(Graph g) {
  LoadedGraph out;
  out.labels.reserve(g.node_count());
  for (std::size_t i = 0; i < g.node_count(); ++i) out.labels.push_back(std::to_string(i));
  out.graph = std::move(g);
  return out;
}

fs::path output_path(const RunConfig& config, const std::string& file) {
  fs::create_directories(config.output_dir);
  return fs::path(config.output_dir) / file;
}

void write_file(const RunConfig& config, const std::string& file, std::ostream& log,
                const std::function<void(std::ostream&)>& body) {
  const auto path = output_path(config, file);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  body(out);
  if (!out) throw Error("write to " + path.string() + " failed");
  log << path.string() << '\n';
}

double resolve_beta(const RunConfig& config, const Dataset& ds) {
  return config.beta >= 0.0 ? config.beta : ds.default_beta;
}

NodeRanking ranking_for(const Graph& g, Measure m, const RunConfig& config, Parallelism par) {
  const auto opts = config.lsc_options();
  if (m == Measure::kLexical) return lexical_sorting_centrality(g, opts, par).ranking;
  return ranking_from_scores(compute_measure(g, m, opts.measures, par));
}

}  // namespace

Dataset load_dataset(const RunConfig& config) {
  config.validate();
  Dataset ds;
  EdgeListOptions opts;
  opts.relabel = config.relabel;
  opts.allow_extra_columns = config.allow_extra_columns;
  const DatasetEntry* entry = nullptr;
  std::optional<Registry> reg;

  if (!config.generate.empty()) {
    ds.loaded = with_id_labels(generate(config.generate, ds.name));
  } else if (!config.graph_path.empty()) {
    ds.loaded = load_edge_list_file(config.graph_path, opts);
    ds.name = fs::path(config.graph_path).stem().string();
  } else if (!config.dataset.empty()) {
    reg = registry_for(config);
    entry = reg->find(config.dataset);
    if (entry == nullptr) throw ParameterError("unknown dataset '" + config.dataset + "'");
    ds.name = entry->name;
    if (!entry->generator.empty()) {
      std::string ignored;
      ds.loaded = with_id_labels(generate(entry->generator, ignored));
    } else if (!entry->bundled.empty()) {
      ds.loaded = load_edge_list_file((fs::path(reg->directory) / entry->bundled).string(), opts);
    } else {
      const fs::path dir = config.data_dir.empty() ? fs::path(reg->directory) : fs::path(config.data_dir);
      const fs::path file = dir / (entry->name + ".txt");
      if (!fs::exists(file)) {
        throw Error("dataset '" + entry->name + "' not found at " + file.string() + "; run `lsc fetch --name " +
                    entry->name + " --output-dir " + dir.string() + "` first");
      }
      ds.loaded = load_edge_list_file(file.string(), opts);
      std::ifstream labels(dir / (entry->name + ".labels"));
      std::vector<std::string> names;
      for (std::string line; std::getline(labels, line);) names.push_back(line);
      if (names.size() == ds.loaded.graph.node_count()) ds.loaded.labels = std::move(names);
    }
  } else {
    throw ParameterError("no input graph: pass --graph, --generate or --dataset");
  }
  if (!config.name.empty()) ds.name = config.name;

  if (entry == nullptr && config.generate.empty()) {
    // A file named like a registry dataset picks up its defaults.
    try {
      reg = registry_for(config);
      entry = reg->find(ds.name);
    } catch (const Error&) {
      entry = nullptr;
    }
  }
  ds.default_beta = entry != nullptr ? entry->default_beta : fallback_beta(ds.loaded.graph.node_count());
  return ds;
}

void cmd_centrality(const RunConfig& config, std::ostream& log) {
  const auto ds = load_dataset(config);
  const auto& g = ds.loaded.graph;
  const auto& labels = ds.loaded.labels;
  const Parallelism par{config.threads};
  const auto opts = config.lsc_options();
  for (Measure m : config.parsed_measures()) {
    const std::string tag(to_string(m));
    if (m == Measure::kLexical) {
      const auto r = lexical_sorting_centrality(g, opts, par);
      write_file(config, ds.name + "_lsc.csv", log, [&](std::ostream& o) { write_ranking_csv(o, r.ranking, labels); });
      write_file(config, ds.name + "_lsc_matrix.csv", log,
                 [&](std::ostream& o) { write_ranking_matrix_csv(o, r.matrix, labels); });
      write_file(config, ds.name + "_lsc.json", log, [&](std::ostream& o) {
        auto j = to_json(r.ranking);
        j["precision"] = r.matrix.precision;
        j["rounding"] = to_string(r.matrix.rounding);
        for (const auto& in : r.inputs) j["params"][std::string(to_string(in.measure))] = in.params;
        o << j.dump(2) << '\n';
      });
    } else {
      const auto v = compute_measure(g, m, opts.measures, par);
      write_file(config, ds.name + "_" + tag + ".csv", log, [&](std::ostream& o) { write_centrality_csv(o, v, labels); });
    }
  }
}

void cmd_sir(const RunConfig& config, std::ostream& log) {
  const auto ds = load_dataset(config);
  const auto& g = ds.loaded.graph;
  const Parallelism par{config.threads};
  const auto params = config.sir_params(resolve_beta(config, ds));
  params.validate();

  if (config.seeds_from.empty() && config.seed_nodes.empty()) {
    const auto scores = score_all_nodes(g, params, par);
    write_file(config, ds.name + "_sir.csv", log,
               [&](std::ostream& o) { write_sir_scores_csv(o, scores, ds.loaded.labels); });
    return;
  }
  if (!params.max_steps) throw ParameterError("spread curves need --steps");

  std::vector<std::pair<std::string, std::vector<double>>> curves;
  for (const auto& tag : config.seeds_from) {
    const auto parsed = parse_measure(tag);
    if (!parsed) throw ParameterError("--seeds-from: unknown measure '" + tag + "'");
    const Measure m = *parsed;
    const auto ranking = ranking_for(g, m, config, par);
    const std::size_t k = std::min(config.top, ranking.size());
    std::vector<NodeId> seeds(ranking.ordered_nodes.begin(), ranking.ordered_nodes.begin() + static_cast<std::ptrdiff_t>(k));
    curves.emplace_back(std::string(to_string(m)), spread_curve(g, seeds, params).curve);
  }
  if (!config.seed_nodes.empty()) {
    std::vector<NodeId> seeds;
    for (const auto& label : config.seed_nodes) {
      auto it = std::find(ds.loaded.labels.begin(), ds.loaded.labels.end(), label);
      if (it == ds.loaded.labels.end()) throw ParameterError("--seed-nodes: no node labelled '" + label + "'");
      seeds.push_back(static_cast<NodeId>(it - ds.loaded.labels.begin()));
    }
    curves.emplace_back("custom", spread_curve(g, seeds, params).curve);
  }
  for (const auto& [tag, curve] : curves) {
    write_file(config, ds.name + "_curve_" + tag + ".csv", log, [&](std::ostream& o) { write_curve_csv(o, curve); });
  }
  write_file(config, ds.name + "_curves.csv", log, [&](std::ostream& o) {
    o << 't';
    for (const auto& c : curves) o << ',' << c.first;
    o << '\n';
    for (std::size_t t = 0; t < curves.front().second.size(); ++t) {
      o << t;
      for (const auto& c : curves) o << ',' << format_real(c.second[t]);
      o << '\n';
    }
  });
}

void cmd_evaluate(const RunConfig& config, std::ostream& log) {
  const auto ds = load_dataset(config);
  EvalConfig ec;
  ec.dataset = ds.name;
  ec.sir = config.sir_params(resolve_beta(config, ds));
  ec.x_percent = config.x_percent;
  ec.tau_variant = config.tau();
  ec.lsc = config.lsc_options();
  const auto report = evaluate_dataset(ds.loaded.graph, ec, {config.threads});
  write_file(config, ds.name + "_eval.json", log, [&](std::ostream& o) { o << to_json(report).dump(2) << '\n'; });
  write_file(config, ds.name + "_eval.csv", log, [&](std::ostream& o) { write_eval_csv(o, report); });
  write_file(config, ds.name + "_rank_vs_score.csv", log, [&](std::ostream& o) {
    o << "index";
    for (const auto& [tag, m] : report.measures) o << ',' << tag;
    o << '\n';
    for (std::size_t i = 0; i < report.sir_scores.size(); ++i) {
      o << i;
      for (const auto& [tag, m] : report.measures) o << ',' << format_real(report.sir_scores[m.ranking[i]]);
      o << '\n';
    }
  });
}

void cmd_bench(const RunConfig& config, std::ostream& log) {
  const auto ds = load_dataset(config);
  const auto measures = config.parsed_measures();
  const auto result = benchmark_runtime(ds.loaded.graph, measures, config.bench_repetitions, config.lsc_options());
  write_file(config, ds.name + "_bench.csv", log, [&](std::ostream& o) { write_benchmark_csv(o, ds.name, result); });
  write_file(config, ds.name + "_bench.json", log, [&](std::ostream& o) {
    auto j = to_json(result);
    j["dataset"] = ds.name;
    o << j.dump(2) << '\n';
  });
}

void cmd_fetch(const RunConfig& config, std::ostream& log) {
  config.validate();
  const auto reg = registry_for(config);
  std::vector<const DatasetEntry*> todo;
  if (config.fetch_names.empty()) {
    for (const auto& d : reg.datasets)
      if (!d.url.empty() && d.bundled.empty()) todo.push_back(&d);
  } else {
    for (const auto& name : config.fetch_names) {
      const auto* d = reg.find(name);
      if (d == nullptr) throw ParameterError("unknown dataset '" + name + "'");
      todo.push_back(d);
    }
  }
  for (const auto* d : todo) fetch_dataset(*d, config.output_dir, log);
}

void cmd_stats(const RunConfig& config, std::ostream& log) {
  const auto ds = load_dataset(config);
  const auto stats = dataset_stats(ds.loaded.graph);
  const auto comps = connected_components(ds.loaded.graph);
  write_file(config, ds.name + "_stats.csv", log, [&](std::ostream& o) { write_stats_csv(o, ds.name, stats); });
  write_file(config, ds.name + "_stats.json", log, [&](std::ostream& o) {
    auto j = to_json(stats);
    j["dataset"] = ds.name;
    j["components"] = comps.count();
    j["dropped_self_loops"] = ds.loaded.dropped.self_loops;
    j["dropped_duplicates"] = ds.loaded.dropped.duplicates;
    o << j.dump(2) << '\n';
  });
}

}  // namespace lsc::cli
