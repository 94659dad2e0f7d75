#include <cstdio>
#include <array>
#include <map>
#include <set>

#include "doctest.h"
#include "lsc/edge_list.hpp"
#include "lsc/error.hpp"
#include "lsc/generators.hpp"
#include "lsc/lexical.hpp"
#include "oracles.hpp"

using namespace lsc;

namespace {

std::vector<CentralityVector> columns(const std::vector<std::vector<double>>& rows) {
  const Measure tags[] = {Measure::kDegree, Measure::kEigenvector, Measure::kCloseness, Measure::kBetweenness};
  std::vector<CentralityVector> out(rows.front().size());
  for (std::size_t c = 0; c < out.size(); ++c) {
    out[c].measure = tags[c % 4];
    for (const auto& r : rows) out[c].scores.push_back(r[c]);
  }
  return out;
}

RankingMatrix random_matrix(Rng& rng, std::size_t n, std::size_t cols, int levels) {
  RankingMatrix rm;
  rm.precision = 0;
  rm.measure_order.assign(cols, Measure::kDegree);
  for (std::size_t i = 0; i < n; ++i) {
    RankingRow row{static_cast<NodeId>(i), {}};
    for (std::size_t c = 0; c < cols; ++c) row.keys.push_back(static_cast<std::int64_t>(rng.below(levels)));
    rm.rows.push_back(row);
  }
  return rm;
}

}  // namespace

TEST_SUITE_BEGIN("lsc_rank");

TEST_CASE("decimal rounding") {
  CHECK(scaled_decimal(0.76525, 5, RoundingMode::kHalfEven) == 76525);
  CHECK(scaled_decimal(0.76525, 4, RoundingMode::kHalfEven) == 7652);
  CHECK(scaled_decimal(0.76535, 4, RoundingMode::kHalfEven) == 7654);
  CHECK(scaled_decimal(0.765251, 4, RoundingMode::kHalfEven) == 7653);
  CHECK(scaled_decimal(0.05963, 2, RoundingMode::kTruncate) == 5);
  CHECK(scaled_decimal(0.05963, 2, RoundingMode::kHalfEven) == 6);
  CHECK(scaled_decimal(0.0004, 2, RoundingMode::kHalfEven) == 0);
  CHECK(scaled_decimal(0.005, 2, RoundingMode::kHalfEven) == 0);
  CHECK(scaled_decimal(0.015, 2, RoundingMode::kHalfEven) == 2);
  CHECK(scaled_decimal(0.5, 0, RoundingMode::kHalfEven) == 0);
  CHECK(scaled_decimal(1.5, 0, RoundingMode::kHalfEven) == 2);
  CHECK(scaled_decimal(0.0, 5, RoundingMode::kHalfEven) == 0);
  CHECK(scaled_decimal(1234.5, 3, RoundingMode::kTruncate) == 1234500);
  CHECK(scaled_decimal(-0.256, 2, RoundingMode::kTruncate) == -25);
  CHECK(scaled_decimal(1e-20, 15, RoundingMode::kHalfEven) == 0);
  CHECK_THROWS_AS(scaled_decimal(0.5, 16, RoundingMode::kHalfEven), ParameterError);
  CHECK_THROWS_AS(scaled_decimal(1e10, 15, RoundingMode::kHalfEven), ParameterError);
  CHECK_THROWS_AS(scaled_decimal(std::nan(""), 2, RoundingMode::kHalfEven), ParameterError);

  SUBCASE("agrees with printf rounding away from decimal ties") {
    Rng rng(2);
    for (int i = 0; i < 2000; ++i) {
      const double x = rng.uniform01() * 3.0;
      const unsigned p = static_cast<unsigned>(rng.below(8));
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.*f", p, x);
      std::string digits;
      for (char* c = buf; *c; ++c)
        if (*c != '.') digits.push_back(*c);
      CHECK(scaled_decimal(x, p, RoundingMode::kHalfEven) == std::stoll(digits));
    }
  }
}

TEST_CASE("ranking matrix construction") {
  const std::vector<std::vector<double>> eq5 = {{0.76525, 0.05963, 0.15423}, {0.76234, 0.06421, 0.24563}};
  auto rm5 = build_ranking_matrix(columns(eq5), 5);
  CHECK(rm5.rows[0].keys == std::vector<std::int64_t>{76525, 5963, 15423});
  CHECK(rm5.rows[1].keys == std::vector<std::int64_t>{76234, 6421, 24563});

  auto trunc = build_ranking_matrix(columns(eq5), 2, RoundingMode::kTruncate);
  CHECK(trunc.rows[0].keys == std::vector<std::int64_t>{76, 5, 15});
  CHECK(trunc.rows[1].keys == std::vector<std::int64_t>{76, 6, 24});
  CHECK(trunc.rows[0].value(1, 2) == 0.05);

  auto even = build_ranking_matrix(columns(eq5), 2, RoundingMode::kHalfEven);
  CHECK(even.rows[0].keys == std::vector<std::int64_t>{77, 6, 15});

  auto zeros = build_ranking_matrix(columns({{0.1, 0.49}, {0.0, 0.3}}), 0);
  for (const auto& r : zeros.rows)
    for (auto k : r.keys) CHECK(k == 0);

  CHECK_THROWS_AS(build_ranking_matrix({}, 5), ParameterError);
  auto bad = columns(eq5);
  bad[1].scores.pop_back();
  CHECK_THROWS_AS(build_ranking_matrix(bad, 5), ParameterError);
  CHECK_THROWS_AS(build_ranking_matrix(columns(eq5), 16), ParameterError);
}

TEST_CASE("lexical sort") {
  SUBCASE("six-node worked example") {
    const std::vector<std::vector<double>> rows = {{0.2, 0.8, 0.3}, {0.5, 0.3, 0.5}, {0.2, 0.8, 0.4},
                                                   {0.1, 0.4, 0.8}, {0.7, 0.5, 0.1}, {0.7, 0.6, 0.7}};
    auto r = lexical_sort(build_ranking_matrix(columns(rows), 1));
    CHECK(r.ordered_nodes == std::vector<NodeId>{5, 4, 1, 2, 0, 3});
  }
  SUBCASE("precision changes the leader") {
    const std::vector<std::vector<double>> eq5 = {{0.76525, 0.05963, 0.15423}, {0.76234, 0.06421, 0.24563}};
    CHECK(lexical_sort(build_ranking_matrix(columns(eq5), 5)).ordered_nodes == std::vector<NodeId>{0, 1});
    CHECK(lexical_sort(build_ranking_matrix(columns(eq5), 2, RoundingMode::kTruncate)).ordered_nodes ==
          std::vector<NodeId>{1, 0});
  }
  SUBCASE("identical rows keep input order") {
    auto rm = build_ranking_matrix(columns({{0.3, 0.1}, {0.3, 0.1}, {0.3, 0.1}, {0.3, 0.1}}), 3);
    std::reverse(rm.rows.begin(), rm.rows.end());
    CHECK(lexical_sort(rm).ordered_nodes == std::vector<NodeId>{3, 2, 1, 0});
  }
}

TEST_CASE("lexical sort properties on random matrices") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(200);
    const std::size_t cols = 1 + rng.below(4);
    auto rm = random_matrix(rng, n, cols, 1 + static_cast<int>(rng.below(6)));
    const auto ranking = lexical_sort(rm);
    const auto pos = ranking.positions();

    std::vector<NodeId> sorted = ranking.ordered_nodes;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) CHECK(sorted[i] == i);

    // Pairwise dominance: first differing column decides, otherwise row order.
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const auto& ka = rm.rows[a].keys;
        const auto& kb = rm.rows[b].keys;
        std::size_t c = 0;
        while (c < cols && ka[c] == kb[c]) ++c;
        const bool a_first = c == cols ? true : ka[c] > kb[c];
        CHECK((pos[a] < pos[b]) == a_first);
      }
    }

    // Sorting the sorted matrix changes nothing.
    RankingMatrix again = rm;
    for (std::size_t i = 0; i < n; ++i) again.rows[i] = rm.rows[ranking.ordered_nodes[i]];
    CHECK(lexical_sort(again).ordered_nodes == ranking.ordered_nodes);

    // Nodes with a unique first key sit where the first key alone puts them.
    RankingMatrix first_only = rm;
    for (auto& row : first_only.rows) row.keys.resize(1);
    const auto by_first = lexical_sort(first_only).positions();
    std::map<std::int64_t, int> count;
    for (const auto& row : rm.rows) ++count[row.keys[0]];
    for (std::size_t v = 0; v < n; ++v) {
      if (count[rm.rows[v].keys[0]] == 1) CHECK(pos[v] == by_first[v]);
    }

    // Reordering the trailing measures only moves rows tied on the first.
    if (cols >= 3) {
      RankingMatrix swapped = rm;
      for (auto& row : swapped.rows) std::swap(row.keys[1], row.keys[2]);
      const auto pos2 = lexical_sort(swapped).positions();
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (rm.rows[a].keys[0] != rm.rows[b].keys[0]) CHECK((pos[a] < pos[b]) == (pos2[a] < pos2[b]));
    }
  }
}

TEST_CASE("ties only grow as truncation precision drops") {
  Rng rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 60;
    std::vector<CentralityVector> cols(2);
    for (auto& c : cols)
      for (std::size_t i = 0; i < n; ++i) c.scores.push_back(std::floor(rng.uniform01() * 1000.0) / 1000.0);
    for (unsigned p = 1; p <= 4; ++p) {
      const auto hi = build_ranking_matrix(cols, p, RoundingMode::kTruncate);
      const auto lo = build_ranking_matrix(cols, p - 1, RoundingMode::kTruncate);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          if (hi.rows[a].keys == hi.rows[b].keys) CHECK(lo.rows[a].keys == lo.rows[b].keys);
    }
  }
}

TEST_CASE("lexical sorting centrality on graphs") {
  CHECK(lexical_sorting_centrality(make_star(4)).ranking.ordered_nodes.front() == 0);
  const auto c6 = lexical_sorting_centrality(make_cycle(6));
  CHECK(c6.ranking.ordered_nodes == std::vector<NodeId>{0, 1, 2, 3, 4, 5});
  CHECK(c6.inputs.size() == 3);
  CHECK(c6.inputs[1].params.count("lambda") == 1);

  CHECK_THROWS_AS(lexical_sorting_centrality(Graph::from_edges(1, {})), ParameterError);
  CHECK_THROWS_AS(lexical_sorting_centrality(make_path(4), {.measure_order = {}}), ParameterError);
  CHECK_THROWS_AS(lexical_sorting_centrality(make_path(4), {.measure_order = {Measure::kLexical}}),
                  ParameterError);
  // Edgeless graphs have no eigenvector centrality.
  CHECK_THROWS_AS(lexical_sorting_centrality(Graph::from_edges(3, {})), ParameterError);

  SUBCASE("karate leader agrees with exhaustive tuple comparison") {
    const auto g = load_edge_list_file(LSC_DATA_DIR "/karate.txt").graph;
    const auto r = lexical_sorting_centrality(g);
    // Independent rounding through printf, then an O(n^2) search for the
    // node that no other node beats.
    std::vector<std::array<double, 3>> tuples(g.node_count());
    for (std::size_t v = 0; v < g.node_count(); ++v) {
      for (std::size_t c = 0; c < 3; ++c) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.5f", r.inputs[c].scores[v]);
        tuples[v][c] = std::stod(buf);
      }
    }
    std::size_t leader = 0;
    for (std::size_t v = 0; v < tuples.size(); ++v) {
      bool beaten = false;
      for (std::size_t u = 0; u < tuples.size(); ++u) {
        if (tuples[u] > tuples[v] || (tuples[u] == tuples[v] && u < v)) beaten = true;
      }
      if (!beaten) leader = v;
    }
    CHECK(r.ranking.ordered_nodes.front() == leader);
    CHECK(leader == 33);
  }

  SUBCASE("custom measure order") {
    const auto g = generate_barabasi_albert(80, 2, 4);
    const auto r = lexical_sorting_centrality(g, {.measure_order = {Measure::kBetweenness, Measure::kGravity}});
    CHECK(r.matrix.measure_order == std::vector<Measure>{Measure::kBetweenness, Measure::kGravity});
    CHECK(r.ranking.size() == 80);
  }
}

TEST_CASE("ranking from scores breaks ties by node id") {
  CentralityVector v{Measure::kDegree, {0.5, 0.9, 0.5, 0.1}, {}};
  CHECK(ranking_from_scores(v).ordered_nodes == std::vector<NodeId>{1, 0, 2, 3});
}

TEST_SUITE_END();
