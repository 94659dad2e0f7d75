#include <algorithm>
#include <cmath>
#include <numeric>

#include "lsc/error.hpp"
#include "lsc/evaluation.hpp"

namespace lsc {
namespace {

void check_inputs(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ParameterError("kendall tau inputs differ in length");
  if (a.size() < 2) throw ParameterError("kendall tau needs at least 2 observations");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a[i]) || !std::isfinite(b[i])) throw ParameterError("kendall tau inputs must be finite");
  }
}

std::int64_t choose2(std::int64_t t) { return t * (t - 1) / 2; }

// Sorts v ascending and returns the number of strict inversions removed.
std::int64_t merge_count(std::vector<double>& v, std::vector<double>& scratch, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t swaps = merge_count(v, scratch, lo, mid) + merge_count(v, scratch, mid, hi);
  std::size_t i = lo;
  std::size_t j = mid;
  std::size_t k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      swaps += static_cast<std::int64_t>(mid - i);
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo), scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
  return swaps;
}

}  // namespace

TauCounts kendall_counts(std::span<const double> a, std::span<const double> b) {
  check_inputs(a, b);
  const std::size_t n = a.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return a[x] != a[y] ? a[x] < a[y] : b[x] < b[y];
  });

  TauCounts c;
  c.pairs = choose2(static_cast<std::int64_t>(n));
  std::int64_t tied_both = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && a[idx[j]] == a[idx[i]]) ++j;
    c.tied_a += choose2(static_cast<std::int64_t>(j - i));
    for (std::size_t k = i; k < j;) {
      std::size_t l = k;
      while (l < j && b[idx[l]] == b[idx[k]]) ++l;
      tied_both += choose2(static_cast<std::int64_t>(l - k));
      k = l;
    }
    i = j;
  }

  std::vector<double> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = b[idx[i]];
  std::vector<double> scratch(n);
  const std::int64_t discordant = merge_count(seq, scratch, 0, n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && seq[j] == seq[i]) ++j;
    c.tied_b += choose2(static_cast<std::int64_t>(j - i));
    i = j;
  }
  const std::int64_t untied = c.pairs - c.tied_a - c.tied_b + tied_both;
  c.concordant_minus_discordant = untied - 2 * discordant;
  return c;
}

TauCounts kendall_counts_naive(std::span<const double> a, std::span<const double> b) {
  check_inputs(a, b);
  TauCounts c;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++c.pairs;
      const bool ta = a[i] == a[j];
      const bool tb = b[i] == b[j];
      c.tied_a += ta;
      c.tied_b += tb;
      if (ta || tb) continue;
      c.concordant_minus_discordant += ((a[i] < a[j]) == (b[i] < b[j])) ? 1 : -1;
    }
  }
  return c;
}

double tau_from_counts(const TauCounts& c, TauVariant variant) {
  const auto s = static_cast<double>(c.concordant_minus_discordant);
  if (variant == TauVariant::kA) return s / static_cast<double>(c.pairs);
  const double denom = std::sqrt(static_cast<double>(c.pairs - c.tied_a)) *
                       std::sqrt(static_cast<double>(c.pairs - c.tied_b));
  // A constant list carries no ordering information.
  return denom == 0.0 ? 0.0 : s / denom;
}

double kendall_tau(std::span<const double> a, std::span<const double> b, TauVariant variant) {
  return tau_from_counts(kendall_counts(a, b), variant);
}

double kendall_tau_naive(std::span<const double> a, std::span<const double> b, TauVariant variant) {
  return tau_from_counts(kendall_counts_naive(a, b), variant);
}

std::string to_string(TauVariant v) { return v == TauVariant::kA ? "tau_a" : "tau_b"; }

}  // namespace lsc
