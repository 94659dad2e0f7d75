#include "lsc/sir.hpp"

#include <cmath>
#include <string>

#include "lsc/error.hpp"

namespace lsc {
namespace {

enum class State : std::uint8_t { kSusceptible, kInfectious, kRecovered };

struct Moments {
  double mean = 0.0;
  double std = 0.0;
};

Moments moments(const std::vector<std::size_t>& xs) {
  Moments m;
  if (xs.empty()) return m;
  double sum = 0.0;
  for (auto x : xs) sum += static_cast<double>(x);
  m.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (auto x : xs) {
      const double d = static_cast<double>(x) - m.mean;
      ss += d * d;
    }
    m.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return m;
}

}  // namespace

void SirParams::validate() const {
  if (!(beta >= 0.0 && beta <= 1.0)) throw ParameterError("beta must lie in [0, 1]");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw ParameterError("gamma must lie in (0, 1]");
  if (replications < 1) throw ParameterError("replications must be >= 1");
}

SirRun run_single(const Graph& g, std::span<const NodeId> seeds, const SirParams& params, Rng& rng,
                  const SirObserver& observer) {
  if (seeds.empty()) throw ParameterError("SIR needs at least one seed");
  const std::size_t n = g.node_count();
  std::vector<State> state(n, State::kSusceptible);
  std::vector<NodeId> infectious;
  for (NodeId s : seeds) {
    if (s >= n) throw ParameterError("seed " + std::to_string(s) + " out of range");
    if (state[s] == State::kSusceptible) {
      state[s] = State::kInfectious;
      infectious.push_back(s);
    }
  }

  SirRun run;
  std::size_t ever = infectious.size();
  std::size_t recovered = 0;
  run.curve.push_back(ever);
  if (observer) observer(0, {n - ever, infectious.size(), 0});

  std::vector<NodeId> next;
  while (!infectious.empty() && (!params.max_steps || run.steps < *params.max_steps)) {
    next.clear();
    for (NodeId u : infectious) {
      for (NodeId v : g.neighbors(u)) {
        if (state[v] == State::kSusceptible && rng.bernoulli(params.beta)) {
          state[v] = State::kInfectious;
          next.push_back(v);
        }
      }
    }
    ever += next.size();
    // Only nodes infectious at the start of the step may recover; the newly
    // infected are appended after the survivors.
    std::size_t kept = 0;
    for (NodeId u : infectious) {
      if (rng.bernoulli(params.gamma)) {
        state[u] = State::kRecovered;
        ++recovered;
      } else {
        infectious[kept++] = u;
      }
    }
    infectious.resize(kept);
    infectious.insert(infectious.end(), next.begin(), next.end());
    ++run.steps;
    run.curve.push_back(ever);
    if (observer) observer(run.steps, {n - ever, infectious.size(), recovered});
  }
  run.final_count = ever;
  return run;
}

SirResult spreading_score(const Graph& g, NodeId seed, const SirParams& params) {
  params.validate();
  if (seed >= g.node_count()) throw ParameterError("seed " + std::to_string(seed) + " out of range");
  SirResult result;
  result.per_replication_scores.reserve(params.replications);
  const NodeId seeds[] = {seed};
  for (std::size_t r = 0; r < params.replications; ++r) {
    Rng rng(derive_seed(params.rng_seed, seed, r));
    result.per_replication_scores.push_back(run_single(g, seeds, params, rng).final_count);
  }
  auto m = moments(result.per_replication_scores);
  result.mean_score = m.mean;
  result.score_std = m.std;
  return result;
}

SirResult spread_curve(const Graph& g, std::span<const NodeId> seeds, const SirParams& params) {
  params.validate();
  if (!params.max_steps) throw ParameterError("spread curve needs max_steps");
  const std::size_t len = *params.max_steps + 1;
  SirResult result;
  std::vector<double> sums(len, 0.0);
  for (std::size_t r = 0; r < params.replications; ++r) {
    Rng rng(derive_seed(params.rng_seed, kCurveStreamTag, r));
    SirRun run = run_single(g, seeds, params, rng);
    for (std::size_t t = 0; t < len; ++t) {
      sums[t] += static_cast<double>(t < run.curve.size() ? run.curve[t] : run.final_count);
    }
    result.per_replication_scores.push_back(run.final_count);
  }
  result.curve.resize(len);
  for (std::size_t t = 0; t < len; ++t) result.curve[t] = sums[t] / static_cast<double>(params.replications);
  auto m = moments(result.per_replication_scores);
  result.mean_score = m.mean;
  result.score_std = m.std;
  return result;
}

std::vector<SirResult> score_all_nodes(const Graph& g, const SirParams& params, Parallelism par) {
  params.validate();
  std::vector<SirResult> out(g.node_count());
  detail::parallel_for(g.node_count(), par, [&](std::size_t v) {
    out[v] = spreading_score(g, static_cast<NodeId>(v), params);
  });
  return out;
}

}  // namespace lsc
