#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace rankvsm {

/// How equal values share rank positions.
///
///   average  mean of the occupied positions (fractional ranks)
///   min      lowest occupied position
///   max      highest occupied position
///   ordinal  distinct positions, ties broken by original index
///   dense    1 + number of distinct smaller values
enum class TiePolicy { kAverage, kMin, kMax, kOrdinal, kDense };

std::string_view to_string(TiePolicy policy);
TiePolicy parse_tie_policy(std::string_view text);

/// 1-based ascending ranks: the smallest value gets rank 1.
///
/// 0-based ranks differ by a constant shift that every correlation computed
/// from them ignores.
struct RankVector {
  std::vector<double> ranks;
  TiePolicy tie_policy = TiePolicy::kAverage;
  bool has_ties = false;

  std::size_t size() const noexcept { return ranks.size(); }
  std::span<const double> values() const noexcept { return ranks; }
};

/// Throws on empty input or non-finite values.
RankVector rank_vector(std::span<const double> values, TiePolicy policy = TiePolicy::kAverage);

/// True iff the ranks sum to n(n+1)/2 within 1e-9 relative tolerance. Only
/// meaningful for average ranks; throws for any other policy.
bool rank_sum_check(const RankVector& ranks);

}  // namespace rankvsm
