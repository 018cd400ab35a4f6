#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankvsm/text_pipeline.hpp"

namespace rankvsm {

enum class LogBase { kE, k10, k2 };

std::string_view to_string(LogBase base);
/// Accepts "e", "10" and "2".
LogBase parse_log_base(std::string_view text);

/// A document's TF-IDF weights, one per vocabulary term.
struct DocumentVector {
  std::string doc_id;
  std::vector<double> weights;

  std::size_t size() const noexcept { return weights.size(); }
  std::span<const double> values() const noexcept { return weights; }
  bool is_zero() const noexcept;

  bool operator==(const DocumentVector&) const = default;
};

/// Positions and values of the nonzero weights, in coordinate order.
struct SparseView {
  std::vector<std::size_t> index;
  std::vector<double> value;

  static SparseView of(std::span<const double> dense);
};

/// Document frequencies over a fixed corpus. Immutable once built.
class TfIdfModel {
 public:
  TfIdfModel(Vocabulary vocabulary, std::vector<std::size_t> doc_freq, std::size_t corpus_size,
             LogBase log_base);

  /// Single pass over the corpus.
  static TfIdfModel fit(const Corpus& corpus, LogBase log_base = LogBase::kE);

  const Vocabulary& vocabulary() const noexcept { return vocabulary_; }
  const std::vector<std::size_t>& doc_freq() const noexcept { return doc_freq_; }
  std::size_t corpus_size() const noexcept { return corpus_size_; }
  LogBase log_base() const noexcept { return log_base_; }

  /// idf of the term at vocabulary position `i`.
  double idf_at(std::size_t i) const { return idf_[i]; }

  bool operator==(const TfIdfModel& other) const;

 private:
  Vocabulary vocabulary_;
  std::vector<std::size_t> doc_freq_;
  std::size_t corpus_size_;
  LogBase log_base_;
  std::vector<double> idf_;
};

/// Occurrences of `term` over the document's token count.
double term_frequency(const Document& document, std::string_view term);

/// log(|D| / df(term)) in the model's base.
double inverse_document_frequency(const TfIdfModel& model, std::string_view term);

DocumentVector vectorize(const TfIdfModel& model, const Document& document);

/// Vectorizes every document, preserving corpus order. Documents without
/// tokens get an all-zero vector, which every measure reports as degenerate.
std::vector<DocumentVector> vectorize_corpus(const TfIdfModel& model, const Corpus& corpus);

}  // namespace rankvsm
