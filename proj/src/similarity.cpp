#include "rankvsm/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rankvsm/error.hpp"

namespace rankvsm {

namespace {

using Accum = long double;

void require_same_length(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kLengthMismatch, "vector lengths differ (" + std::to_string(u.size()) +
                                                " vs " + std::to_string(v.size()) + ")");
  }
}

void require_pair(std::span<const double> u, std::span<const double> v) {
  require_same_length(u, v);
  if (u.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "correlation needs at least two coordinates");
  }
}

bool is_constant(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(), [&](double e) { return e == x.front(); });
}

double clamp_unit(Accum r) { return static_cast<double>(std::clamp<Accum>(r, -1.0L, 1.0L)); }

}  // namespace

std::string_view to_string(Measure measure) {
  switch (measure) {
    case Measure::kCosine:
      return "cs";
    case Measure::kPearson:
      return "pcc";
    case Measure::kSpearman:
      return "srcc";
  }
  return "cs";
}

Measure parse_measure(std::string_view text) {
  if (text == "cs") return Measure::kCosine;
  if (text == "pcc") return Measure::kPearson;
  if (text == "srcc") return Measure::kSpearman;
  throw Error(ErrorCode::kInvalidArgument,
              "measure must be one of cs, srcc, pcc (got '" + std::string(text) + "')");
}

MeasureResult cosine(std::span<const double> u, std::span<const double> v) {
  require_same_length(u, v);
  // Only coordinates where u is nonzero contribute to the dot product.
  const auto su = SparseView::of(u);
  Accum dot = 0;
  for (std::size_t k = 0; k < su.index.size(); ++k) {
    dot += static_cast<Accum>(su.value[k]) * v[su.index[k]];
  }
  Accum uu = 0;
  for (const double x : su.value) uu += static_cast<Accum>(x) * x;
  Accum vv = 0;
  for (const double x : v) vv += static_cast<Accum>(x) * x;

  if (uu == 0 || vv == 0) return MeasureResult::undefined(Measure::kCosine);
  return {Measure::kCosine, clamp_unit(dot / std::sqrt(uu * vv)), false};
}

MeasureResult pearson(std::span<const double> u, std::span<const double> v) {
  require_pair(u, v);
  if (is_constant(u) || is_constant(v)) return MeasureResult::undefined(Measure::kPearson);
  if (std::equal(u.begin(), u.end(), v.begin())) return {Measure::kPearson, 1.0, false};

  const auto n = static_cast<Accum>(u.size());
  Accum mu = 0;
  Accum mv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    mu += u[i];
    mv += v[i];
  }
  mu /= n;
  mv /= n;

  Accum suu = 0;
  Accum svv = 0;
  Accum suv = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Accum du = u[i] - mu;
    const Accum dv = v[i] - mv;
    suu += du * du;
    svv += dv * dv;
    suv += du * dv;
  }
  if (suu == 0 || svv == 0) return MeasureResult::undefined(Measure::kPearson);
  // The 1/(n-1) factors of the covariance and both deviations cancel.
  return {Measure::kPearson, clamp_unit(suv / std::sqrt(suu * svv)), false};
}

double spearman_closed_form(std::span<const double> ru, std::span<const double> rv) {
  require_pair(ru, rv);
  Accum d2 = 0;
  for (std::size_t i = 0; i < ru.size(); ++i) {
    const Accum d = static_cast<Accum>(ru[i]) - rv[i];
    d2 += d * d;
  }
  const auto n = static_cast<Accum>(ru.size());
  return static_cast<double>(1.0L - 6.0L * d2 / (n * (n * n - 1.0L)));
}

MeasureResult spearman_from_ranks(const RankVector& ru, const RankVector& rv) {
  require_pair(ru.values(), rv.values());
  if (is_constant(ru.values()) || is_constant(rv.values())) {
    return MeasureResult::undefined(Measure::kSpearman);
  }
  if (!ru.has_ties && !rv.has_ties) {
    return {Measure::kSpearman, spearman_closed_form(ru.values(), rv.values()), false};
  }
  auto r = pearson(ru.values(), rv.values());
  r.measure = Measure::kSpearman;
  return r;
}

MeasureResult spearman(std::span<const double> u, std::span<const double> v, TiePolicy policy) {
  require_pair(u, v);
  return spearman_from_ranks(rank_vector(u, policy), rank_vector(v, policy));
}

const MeasureResult& MeasureTriple::operator[](Measure m) const {
  switch (m) {
    case Measure::kCosine:
      return cs;
    case Measure::kPearson:
      return pcc;
    case Measure::kSpearman:
      return srcc;
  }
  return cs;
}

MeasureResult compute(Measure measure, std::span<const double> u, std::span<const double> v,
                      TiePolicy policy) {
  switch (measure) {
    case Measure::kCosine:
      return cosine(u, v);
    case Measure::kPearson:
      return pearson(u, v);
    case Measure::kSpearman:
      return spearman(u, v, policy);
  }
  return cosine(u, v);
}

MeasureTriple all_measures(std::span<const double> u, std::span<const double> v,
                           TiePolicy policy) {
  return {cosine(u, v), spearman(u, v, policy), pearson(u, v)};
}

}  // namespace rankvsm
