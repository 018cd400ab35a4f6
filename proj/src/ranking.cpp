#include "rankvsm/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rankvsm/error.hpp"

namespace rankvsm {

std::string_view to_string(TiePolicy policy) {
  switch (policy) {
    case TiePolicy::kAverage:
      return "average";
    case TiePolicy::kMin:
      return "min";
    case TiePolicy::kMax:
      return "max";
    case TiePolicy::kOrdinal:
      return "ordinal";
    case TiePolicy::kDense:
      return "dense";
  }
  return "average";
}

TiePolicy parse_tie_policy(std::string_view text) {
  if (text == "average") return TiePolicy::kAverage;
  if (text == "min") return TiePolicy::kMin;
  if (text == "max") return TiePolicy::kMax;
  if (text == "ordinal") return TiePolicy::kOrdinal;
  if (text == "dense") return TiePolicy::kDense;
  throw Error(ErrorCode::kInvalidArgument,
              "tie policy must be one of average, min, max, ordinal, dense (got '" +
                  std::string(text) + "')");
}

RankVector rank_vector(std::span<const double> values, TiePolicy policy) {
  if (values.empty()) throw Error(ErrorCode::kInvalidArgument, "cannot rank an empty vector");
  for (const double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kNonFinite, "cannot rank a non-finite value");
  }

  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Stable, so equal values stay in index order for the ordinal policy.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  RankVector out{std::vector<double>(n), policy, false};
  std::size_t dense_rank = 0;
  for (std::size_t start = 0; start < n;) {
    std::size_t end = start;
    while (end + 1 < n && values[order[end + 1]] == values[order[start]]) ++end;
    if (end > start) out.has_ties = true;
    ++dense_rank;

    for (std::size_t k = start; k <= end; ++k) {
      double rank = 0.0;
      switch (policy) {
        case TiePolicy::kAverage:
          // Mean of positions start+1 .. end+1; always a multiple of 1/2.
          rank = static_cast<double>(start + end + 2) / 2.0;
          break;
        case TiePolicy::kMin:
          rank = static_cast<double>(start + 1);
          break;
        case TiePolicy::kMax:
          rank = static_cast<double>(end + 1);
          break;
        case TiePolicy::kOrdinal:
          rank = static_cast<double>(k + 1);
          break;
        case TiePolicy::kDense:
          rank = static_cast<double>(dense_rank);
          break;
      }
      out.ranks[order[k]] = rank;
    }
    start = end + 1;
  }
  return out;
}

bool rank_sum_check(const RankVector& ranks) {
  if (ranks.tie_policy != TiePolicy::kAverage) {
    throw Error(ErrorCode::kInvalidArgument, "rank sum identity only holds for average ranks");
  }
  const auto n = static_cast<double>(ranks.size());
  const double expected = n * (n + 1.0) / 2.0;
  const double sum = std::accumulate(ranks.ranks.begin(), ranks.ranks.end(), 0.0);
  return std::abs(sum - expected) <= 1e-9 * std::max(1.0, std::abs(expected));
}

}  // namespace rankvsm
