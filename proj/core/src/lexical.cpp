#include "lsc/lexical.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "lsc/error.hpp"

namespace lsc {
namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();

double pow10(unsigned p) {
  double x = 1.0;
  for (unsigned i = 0; i < p; ++i) x *= 10.0;
  return x;
}

}  // namespace

std::int64_t scaled_decimal(double value, unsigned precision, RoundingMode mode) {
  if (precision > kMaxPrecision) throw ParameterError("precision above " + std::to_string(kMaxPrecision));
  if (!std::isfinite(value)) throw ParameterError("cannot round a non-finite value");

  // Shortest round-trip form, e.g. "7.6525e-01".
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, std::abs(value), std::chars_format::scientific);
  std::string_view text(buf, static_cast<std::size_t>(res.ptr - buf));
  const auto e_pos = text.find('e');
  int exponent = 0;
  std::from_chars(text.data() + e_pos + 1 + (text[e_pos + 1] == '+'), text.data() + text.size(), exponent);
  std::string digits;
  for (char c : text.substr(0, e_pos))
    if (c != '.') digits.push_back(c);

  // value = digits * 10^(exponent - len + 1); keep what lands left of the
  // decimal point after scaling by 10^precision.
  const int shift = exponent - static_cast<int>(digits.size()) + 1 + static_cast<int>(precision);
  std::int64_t key = 0;
  if (shift >= 0) {
    key = std::stoll(digits);
    for (int i = 0; i < shift; ++i) {
      if (key > kInt64Max / 10) throw ParameterError("value too large for the requested precision");
      key *= 10;
    }
  } else {
    const auto drop = static_cast<std::size_t>(-shift);
    const std::string kept = drop >= digits.size() ? std::string() : digits.substr(0, digits.size() - drop);
    key = kept.empty() ? 0 : std::stoll(kept);
    if (mode == RoundingMode::kHalfEven && drop <= digits.size()) {
      // Dropped part as a digit string; when drop > size it starts with zeros
      // and is below one half.
      std::string_view dropped(digits.data() + kept.size(), drop);
      bool up = false;
      if (dropped[0] > '5') {
        up = true;
      } else if (dropped[0] == '5') {
        const bool rest_nonzero = dropped.find_first_not_of('0', 1) != std::string_view::npos;
        up = rest_nonzero || (key % 2 != 0);
      }
      if (up) ++key;
    }
  }
  return value < 0 ? -key : key;
}

double RankingRow::value(std::size_t column, unsigned precision) const {
  return static_cast<double>(keys.at(column)) / pow10(precision);
}

std::vector<std::size_t> NodeRanking::positions() const {
  std::vector<std::size_t> pos(ordered_nodes.size());
  for (std::size_t i = 0; i < ordered_nodes.size(); ++i) pos[ordered_nodes[i]] = i;
  return pos;
}

RankingMatrix build_ranking_matrix(std::span<const CentralityVector> vectors, unsigned precision,
                                   RoundingMode rounding) {
  if (vectors.empty()) throw ParameterError("ranking matrix needs at least one measure");
  if (precision > kMaxPrecision) throw ParameterError("precision above " + std::to_string(kMaxPrecision));
  const std::size_t n = vectors.front().scores.size();
  for (const auto& v : vectors) {
    if (v.scores.size() != n) throw ParameterError("centrality vectors differ in length");
  }
  RankingMatrix rm;
  rm.precision = precision;
  rm.rounding = rounding;
  rm.rows.resize(n);
  for (const auto& v : vectors) rm.measure_order.push_back(v.measure);
  for (std::size_t i = 0; i < n; ++i) {
    rm.rows[i].node = static_cast<NodeId>(i);
    rm.rows[i].keys.reserve(vectors.size());
    for (const auto& v : vectors) rm.rows[i].keys.push_back(scaled_decimal(v.scores[i], precision, rounding));
  }
  return rm;
}

NodeRanking lexical_sort(const RankingMatrix& rm) {
  std::vector<std::size_t> idx(rm.rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  // Row index as the last key makes the order identical to a stable sort.
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& ka = rm.rows[a].keys;
    const auto& kb = rm.rows[b].keys;
    if (ka != kb) return std::lexicographical_compare(kb.begin(), kb.end(), ka.begin(), ka.end());
    return a < b;
  });
  NodeRanking out;
  out.source = Measure::kLexical;
  out.ordered_nodes.reserve(idx.size());
  for (auto i : idx) out.ordered_nodes.push_back(rm.rows[i].node);
  return out;
}

NodeRanking ranking_from_scores(const CentralityVector& v) {
  std::vector<NodeId> order(v.scores.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return v.scores[a] > v.scores[b]; });
  return NodeRanking{std::move(order), v.measure};
}

LscResult lexical_sorting_centrality(const Graph& g, const LscOptions& options, Parallelism par) {
  if (g.node_count() < 2) throw ParameterError("lsc needs at least 2 nodes");
  if (options.measure_order.empty()) throw ParameterError("lsc needs at least one measure");
  LscResult result;
  for (Measure m : options.measure_order) {
    if (m == Measure::kLexical) throw ParameterError("lsc cannot use itself as a sub-measure");
    result.inputs.push_back(compute_measure(g, m, options.measures, par));
  }
  result.matrix = build_ranking_matrix(result.inputs, options.precision, options.rounding);
  result.ranking = lexical_sort(result.matrix);
  return result;
}

std::string to_string(RoundingMode mode) {
  return mode == RoundingMode::kTruncate ? "truncate" : "half_even";
}

}  // namespace lsc
