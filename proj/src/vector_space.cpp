#include "rankvsm/vector_space.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "rankvsm/error.hpp"

namespace rankvsm {

namespace {

double log_in_base(double x, LogBase base) {
  switch (base) {
    case LogBase::kE:
      return std::log(x);
    case LogBase::k10:
      return std::log10(x);
    case LogBase::k2:
      return std::log2(x);
  }
  return std::log(x);
}

}  // namespace

std::string_view to_string(LogBase base) {
  switch (base) {
    case LogBase::kE:
      return "e";
    case LogBase::k10:
      return "10";
    case LogBase::k2:
      return "2";
  }
  return "e";
}

LogBase parse_log_base(std::string_view text) {
  if (text == "e") return LogBase::kE;
  if (text == "10") return LogBase::k10;
  if (text == "2") return LogBase::k2;
  throw Error(ErrorCode::kInvalidArgument,
              "log base must be one of e, 10, 2 (got '" + std::string(text) + "')");
}

bool DocumentVector::is_zero() const noexcept {
  return std::all_of(weights.begin(), weights.end(), [](double w) { return w == 0.0; });
}

SparseView SparseView::of(std::span<const double> dense) {
  SparseView view;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) {
      view.index.push_back(i);
      view.value.push_back(dense[i]);
    }
  }
  return view;
}

TfIdfModel::TfIdfModel(Vocabulary vocabulary, std::vector<std::size_t> doc_freq,
                       std::size_t corpus_size, LogBase log_base)
    : vocabulary_(std::move(vocabulary)),
      doc_freq_(std::move(doc_freq)),
      corpus_size_(corpus_size),
      log_base_(log_base) {
  if (corpus_size_ == 0) throw Error(ErrorCode::kEmptyCorpus, "model corpus size is zero");
  if (doc_freq_.size() != vocabulary_.size()) {
    throw Error(ErrorCode::kLengthMismatch, "doc_freq length " + std::to_string(doc_freq_.size()) +
                                                " differs from vocabulary size " +
                                                std::to_string(vocabulary_.size()));
  }
  idf_.reserve(doc_freq_.size());
  for (std::size_t i = 0; i < doc_freq_.size(); ++i) {
    const std::size_t df = doc_freq_[i];
    if (df < 1 || df > corpus_size_) {
      throw Error(ErrorCode::kInvalidArgument, "doc_freq of '" + vocabulary_[i] +
                                                   "' is outside [1, corpus_size]");
    }
    // df == |D| gives exactly 0, never -0 or a rounding residue.
    idf_.push_back(df == corpus_size_
                       ? 0.0
                       : log_in_base(static_cast<double>(corpus_size_) / static_cast<double>(df),
                                     log_base_));
  }
}

TfIdfModel TfIdfModel::fit(const Corpus& corpus, LogBase log_base) {
  auto vocabulary = build_vocabulary(corpus);
  std::vector<std::size_t> doc_freq(vocabulary.size(), 0);
  std::vector<bool> seen(vocabulary.size());
  for (const auto& doc : corpus.documents()) {
    std::fill(seen.begin(), seen.end(), false);
    for (const auto& token : doc.tokens) {
      const std::size_t i = *vocabulary.position(token);
      if (!seen[i]) {
        seen[i] = true;
        ++doc_freq[i];
      }
    }
  }
  return TfIdfModel(std::move(vocabulary), std::move(doc_freq), corpus.size(), log_base);
}

bool TfIdfModel::operator==(const TfIdfModel& other) const {
  return vocabulary_ == other.vocabulary_ && doc_freq_ == other.doc_freq_ &&
         corpus_size_ == other.corpus_size_ && log_base_ == other.log_base_;
}

double term_frequency(const Document& document, std::string_view term) {
  if (document.tokens.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "document '" + document.id + "' has no tokens");
  }
  const auto count = std::count(document.tokens.begin(), document.tokens.end(), term);
  return static_cast<double>(count) / static_cast<double>(document.tokens.size());
}

double inverse_document_frequency(const TfIdfModel& model, std::string_view term) {
  const auto i = model.vocabulary().position(term);
  if (!i) throw Error(ErrorCode::kUnknownTerm, "term '" + std::string(term) + "' is not in the vocabulary");
  return model.idf_at(*i);
}

DocumentVector vectorize(const TfIdfModel& model, const Document& document) {
  if (document.tokens.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "document '" + document.id + "' has no tokens");
  }
  const auto& vocabulary = model.vocabulary();
  std::unordered_map<std::size_t, std::size_t> counts;
  for (const auto& token : document.tokens) {
    const auto i = vocabulary.position(token);
    if (!i) {
      throw Error(ErrorCode::kUnknownTerm, "document '" + document.id + "' has token '" + token +
                                               "' outside the model vocabulary");
    }
    ++counts[*i];
  }

  DocumentVector vec{document.id, std::vector<double>(vocabulary.size(), 0.0)};
  const auto n = static_cast<double>(document.tokens.size());
  for (const auto& [i, count] : counts) {
    vec.weights[i] = (static_cast<double>(count) / n) * model.idf_at(i);
  }
  return vec;
}

std::vector<DocumentVector> vectorize_corpus(const TfIdfModel& model, const Corpus& corpus) {
  std::vector<DocumentVector> out;
  out.reserve(corpus.size());
  for (const auto& doc : corpus.documents()) {
    if (doc.degenerate()) {
      out.push_back({doc.id, std::vector<double>(model.vocabulary().size(), 0.0)});
    } else {
      out.push_back(vectorize(model, doc));
    }
  }
  return out;
}

}  // namespace rankvsm
