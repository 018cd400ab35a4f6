#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "rankvsm/ranking.hpp"
#include "rankvsm/vector_space.hpp"

namespace rankvsm {

enum class Measure { kCosine, kPearson, kSpearman };

inline constexpr std::array<Measure, 3> kAllMeasures{Measure::kCosine, Measure::kSpearman,
                                                     Measure::kPearson};

/// "cs", "pcc", "srcc".
std::string_view to_string(Measure measure);
Measure parse_measure(std::string_view text);

/// A similarity value, or a flag saying the measure is undefined for the
/// inputs (zero norm for cosine, zero variance for the correlations).
struct MeasureResult {
  Measure measure = Measure::kCosine;
  double value = 0.0;
  bool degenerate = false;

  std::optional<double> get() const {
    return degenerate ? std::nullopt : std::optional<double>(value);
  }

  static MeasureResult undefined(Measure m) { return {m, 0.0, true}; }
};

MeasureResult cosine(std::span<const double> u, std::span<const double> v);

/// Sample Pearson correlation. Requires n >= 2.
MeasureResult pearson(std::span<const double> u, std::span<const double> v);

/// Pearson correlation of the two rank vectors. When neither ranking has
/// ties the closed form 1 - 6 sum(d^2) / (n (n^2 - 1)) is used instead; the
/// two agree on tie-free input.
MeasureResult spearman(std::span<const double> u, std::span<const double> v,
                       TiePolicy policy = TiePolicy::kAverage);

/// Spearman from already computed ranks, through the same dispatch as above.
MeasureResult spearman_from_ranks(const RankVector& ru, const RankVector& rv);

/// 1 - 6 sum(d^2) / (n (n^2 - 1)). Exact only for tie-free rankings.
double spearman_closed_form(std::span<const double> ru, std::span<const double> rv);

struct MeasureTriple {
  MeasureResult cs{Measure::kCosine};
  MeasureResult srcc{Measure::kSpearman};
  MeasureResult pcc{Measure::kPearson};

  const MeasureResult& operator[](Measure m) const;
};

MeasureResult compute(Measure measure, std::span<const double> u, std::span<const double> v,
                      TiePolicy policy = TiePolicy::kAverage);

MeasureTriple all_measures(std::span<const double> u, std::span<const double> v,
                           TiePolicy policy = TiePolicy::kAverage);

inline MeasureTriple all_measures(const DocumentVector& u, const DocumentVector& v,
                                  TiePolicy policy = TiePolicy::kAverage) {
  return all_measures(u.values(), v.values(), policy);
}

}  // namespace rankvsm
