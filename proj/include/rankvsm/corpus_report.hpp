#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankvsm/similarity.hpp"

namespace rankvsm {

/// How similarity values are printed: fixed with `precision` decimals, or
/// the shortest round-trip representation when `full` is set. Undefined
/// values print as "n/a".
struct NumberFormat {
  int precision = 4;
  bool full = false;
};

std::string format_value(std::optional<double> value, const NumberFormat& format = {});

/// Pairwise values of up to three measures over one corpus. Every grid is
/// symmetric; the diagonal is 1 except where a document is degenerate for
/// that measure.
class SimilarityMatrix {
 public:
  SimilarityMatrix(std::vector<std::string> doc_ids, std::span<const Measure> measures,
                   TiePolicy tie_policy);

  const std::vector<std::string>& doc_ids() const noexcept { return doc_ids_; }
  std::size_t size() const noexcept { return doc_ids_.size(); }
  TiePolicy tie_policy() const noexcept { return tie_policy_; }
  bool has(Measure m) const { return grids_[slot(m)].has_value(); }
  std::vector<Measure> measures() const;

  /// Throws for a measure that was not computed.
  std::optional<double> at(Measure m, std::size_t i, std::size_t j) const;
  std::optional<std::size_t> index_of(std::string_view id) const;

  /// Writes both (i, j) and (j, i).
  void set(Measure m, std::size_t i, std::size_t j, std::optional<double> value);

 private:
  static std::size_t slot(Measure m) { return static_cast<std::size_t>(m); }

  std::vector<std::string> doc_ids_;
  TiePolicy tie_policy_;
  std::array<std::optional<std::vector<std::optional<double>>>, 3> grids_;
};

/// Computes every unordered pair once and mirrors it. `threads == 0` picks
/// the hardware concurrency; the result does not depend on the count.
SimilarityMatrix pairwise_matrix(std::span<const DocumentVector> vectors,
                                 std::span<const Measure> measures = kAllMeasures,
                                 TiePolicy tie_policy = TiePolicy::kAverage,
                                 unsigned threads = 0);

/// One row of a comparison table. doc_a precedes doc_b in corpus order.
struct PairRecord {
  std::string doc_a;
  std::string doc_b;
  std::optional<double> cs;
  std::optional<double> srcc;
  std::optional<double> pcc;
};

using DocPair = std::pair<std::string, std::string>;

/// Records for `pairs` in the order given, or for every unordered pair when
/// `pairs` is empty. Throws on unknown ids or a document paired with itself.
std::vector<PairRecord> comparison_report(const SimilarityMatrix& matrix,
                                          std::span<const DocPair> pairs = {});

/// Parses "a,b" pairs separated by ';' or newlines.
std::vector<DocPair> parse_pair_list(std::string_view text);

struct ScatterPoint {
  std::string pair;
  std::optional<double> cs;
  std::optional<double> srcc;
  std::optional<double> pcc;
};

/// One point per unordered pair, row-major over the upper triangle. The
/// label is "a|b".
std::vector<ScatterPoint> measure_scatter(const SimilarityMatrix& matrix);

struct RankPoint {
  std::string term;
  double rank_u = 0.0;
  double rank_v = 0.0;
};

/// Both ranks of every vocabulary term, in vocabulary order.
std::vector<RankPoint> rank_scatter(const DocumentVector& u, const DocumentVector& v,
                                    const Vocabulary& vocabulary,
                                    TiePolicy tie_policy = TiePolicy::kAverage);

std::string csv_field(std::string_view text);

void write_matrix_csv(std::ostream& out, const SimilarityMatrix& matrix, Measure measure,
                      const NumberFormat& format = {});
/// Full-precision values; undefined cells are null.
void write_matrix_json(std::ostream& out, const SimilarityMatrix& matrix);
void write_report_csv(std::ostream& out, std::span<const PairRecord> records,
                      const NumberFormat& format = {});
void write_measure_scatter_csv(std::ostream& out, std::span<const ScatterPoint> points,
                               const NumberFormat& format = {});
void write_rank_scatter_csv(std::ostream& out, std::span<const RankPoint> points);

}  // namespace rankvsm
