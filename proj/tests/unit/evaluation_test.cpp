#include <cmath>
#include <numeric>

#include "doctest.h"
#include "lsc/error.hpp"
#include "lsc/evaluation.hpp"
#include "lsc/generators.hpp"
#include "lsc/serialize.hpp"
#include "oracles.hpp"

using namespace lsc;

namespace {

std::vector<double> random_list(Rng& rng, std::size_t n, int levels) {
  std::vector<double> v(n);
  for (auto& x : v) x = levels > 0 ? static_cast<double>(rng.below(levels)) : rng.uniform01();
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("evaluation");

TEST_CASE("kendall tau small cases") {
  const std::vector<double> inc = {1, 2, 3, 4, 5};
  const std::vector<double> dec = {5, 4, 3, 2, 1};
  CHECK(kendall_tau(inc, inc) == 1.0);
  CHECK(kendall_tau(inc, dec) == -1.0);
  const std::vector<double> a = {1, 2, 3};
  const std::vector<double> b = {1, 3, 2};
  CHECK(kendall_tau(a, b) == doctest::Approx(1.0 / 3.0));
  CHECK(kendall_tau_naive(a, b) == doctest::Approx(1.0 / 3.0));
  const std::vector<double> flat = {2, 2, 2};
  CHECK(kendall_tau(flat, a) == 0.0);
  CHECK(kendall_tau(flat, a, TauVariant::kB) == 0.0);
  // One tied pair out of three: tau-a is diluted, tau-b is not.
  const std::vector<double> tied = {1, 1, 2};
  CHECK(kendall_tau(tied, a) == doctest::Approx(2.0 / 3.0));
  CHECK(kendall_tau(tied, a, TauVariant::kB) == doctest::Approx(2.0 / std::sqrt(6.0)));

  CHECK_THROWS_AS(kendall_tau(a, inc), ParameterError);
  CHECK_THROWS_AS(kendall_tau(std::vector<double>{1}, std::vector<double>{1}), ParameterError);
  CHECK_THROWS_AS(kendall_tau(std::vector<double>{1, NAN}, std::vector<double>{1, 2}), ParameterError);
}

TEST_CASE("merge-count tau equals pair enumeration") {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng.below(200);
    const int levels = trial % 3 == 0 ? 0 : 1 + static_cast<int>(rng.below(10));
    const auto a = random_list(rng, n, levels);
    const auto b = random_list(rng, n, trial % 2 == 0 ? levels : 0);
    const auto fast = kendall_counts(a, b);
    const auto slow = kendall_counts_naive(a, b);
    CHECK(fast.concordant_minus_discordant == slow.concordant_minus_discordant);
    CHECK(fast.tied_a == slow.tied_a);
    CHECK(fast.tied_b == slow.tied_b);
    CHECK(kendall_tau(a, b, TauVariant::kB) == kendall_tau_naive(a, b, TauVariant::kB));
  }
}

TEST_CASE("kendall tau invariants") {
  Rng rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.below(80);
    const auto a = random_list(rng, n, trial % 2 ? 5 : 0);
    const auto b = random_list(rng, n, 0);
    CHECK(kendall_tau(a, b) == kendall_tau(b, a));
    std::vector<double> warped(n);
    for (std::size_t i = 0; i < n; ++i) warped[i] = std::exp(3 * a[i]) - 7;
    CHECK(kendall_tau(warped, b) == kendall_tau(a, b));
    const double t = kendall_tau(a, b);
    CHECK(t >= -1.0);
    CHECK(t <= 1.0);
  }
}

TEST_CASE("top-x overlap") {
  std::vector<double> scores(1000);
  for (std::size_t i = 0; i < scores.size(); ++i) scores[i] = static_cast<double>((i * 7919) % 1000);
  NodeRanking exact{score_order(scores), Measure::kDegree};
  auto o = top_x_overlap(exact, scores, 5.0);
  CHECK(o.k == 50);
  CHECK(o.overlap == 50);

  std::vector<double> doubled = scores;
  for (auto& x : doubled) x *= 2.5;
  CHECK(top_x_overlap(exact, doubled, 5.0).overlap == 50);
  CHECK(top_x_overlap(exact, scores, 100.0).overlap == 1000);

  std::vector<double> small(34, 1.0);
  small[7] = 2.0;
  NodeRanking r{score_order(small), Measure::kDegree};
  auto ko = top_x_overlap(r, small, 5.0);
  CHECK(ko.k == 1);
  CHECK(ko.overlap == 1);

  // Ties in the ground truth go to the lower id.
  std::vector<double> flat(20, 1.0);
  std::vector<NodeId> order(20);
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());
  CHECK(top_x_overlap({order, Measure::kDegree}, flat, 5.0).overlap == 0);

  CHECK_THROWS_AS(top_x_overlap(r, small, 0.0), ParameterError);
  CHECK_THROWS_AS(top_x_overlap(r, small, 101.0), ParameterError);
  CHECK_THROWS_AS(top_x_overlap(r, small, 1.0), ParameterError);
}

TEST_CASE("rank versus score series") {
  Rng rng(47);
  const auto scores = random_list(rng, 100, 0);
  const auto best = score_order(scores);
  auto s = rank_vs_score_series({best, Measure::kDegree}, scores);
  CHECK(s.adjacent_inversions == 0);
  for (std::size_t i = 1; i < s.points.size(); ++i) CHECK(s.points[i].second <= s.points[i - 1].second);

  std::vector<NodeId> worst(best.rbegin(), best.rend());
  auto w = rank_vs_score_series({worst, Measure::kDegree}, scores);
  for (std::size_t i = 1; i < w.points.size(); ++i) CHECK(w.points[i].second >= w.points[i - 1].second);

  for (int trial = 0; trial < 20; ++trial) {
    const auto perm = oracle::random_permutation(100, rng);
    auto r = rank_vs_score_series({perm, Measure::kDegree}, scores);
    std::size_t want = 0;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i) want += scores[perm[i]] < scores[perm[i + 1]];
    CHECK(r.adjacent_inversions == want);
  }
}

TEST_CASE("benchmark runtime") {
  const Measure ms[] = {Measure::kLexical, Measure::kGravity};
  auto r = benchmark_runtime(make_cycle(30), ms, 1);
  CHECK(r.mean_seconds.size() == 2);
  for (const auto& [tag, secs] : r.mean_seconds) CHECK(secs > 0.0);
  CHECK(r.environment.count("hardware_threads") == 1);
  CHECK_THROWS_AS(benchmark_runtime(make_cycle(30), ms, 0), ParameterError);
}

TEST_CASE("dataset evaluation") {
  SUBCASE("vertex-transitive graph has zero tau everywhere") {
    EvalConfig cfg;
    cfg.sir = {.beta = 0.3, .replications = 50, .rng_seed = 1};
    cfg.x_percent = 10;
    auto rep = evaluate_dataset(make_cycle(10), cfg);
    CHECK(rep.measures.size() == 6);
    for (const auto& [tag, m] : rep.measures) CHECK(m.tau == 0.0);
  }
  SUBCASE("star: the center leads every measure") {
    EvalConfig cfg;
    cfg.sir = {.beta = 0.1, .replications = 2000, .rng_seed = 3};
    cfg.x_percent = 20;
    auto rep = evaluate_dataset(make_star(4), cfg);
    for (const auto& [tag, m] : rep.measures) {
      CHECK(m.ranking.front() == 0);
      CHECK(m.top_x_k == 1);
      CHECK(m.top_x_overlap == 1);
      CHECK(m.tau >= -1.0);
      CHECK(m.tau <= 1.0);
    }
  }
  SUBCASE("reproducible report") {
    EvalConfig cfg;
    cfg.dataset = "ba";
    cfg.sir = {.beta = 0.05, .replications = 30, .rng_seed = 9};
    const auto g = generate_barabasi_albert(120, 3, 3);
    auto a = to_json(evaluate_dataset(g, cfg, {1})).dump();
    auto b = to_json(evaluate_dataset(g, cfg, {6})).dump();
    CHECK(a == b);
  }
}

TEST_SUITE_END();
