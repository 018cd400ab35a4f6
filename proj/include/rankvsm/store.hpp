#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "rankvsm/text_pipeline.hpp"
#include "rankvsm/vector_space.hpp"

namespace rankvsm {

// Versioned JSON files for the staged pipeline. Loading validates the
// format tag, the version and every invariant of the stored types, and
// throws Error(kParse) on anything else.

inline constexpr int kStoreVersion = 1;

struct StoredCorpus {
  Corpus corpus;
  PipelineConfig config;
};

void save_corpus(std::ostream& out, const Corpus& corpus, const PipelineConfig& config);
void save_corpus(const std::filesystem::path& path, const Corpus& corpus,
                 const PipelineConfig& config);
StoredCorpus load_corpus(std::istream& in);
StoredCorpus load_corpus(const std::filesystem::path& path);

/// A fitted model together with the vectors of the corpus it was fitted on.
struct VectorStore {
  TfIdfModel model;
  std::vector<DocumentVector> vectors;

  const DocumentVector& at(std::string_view id) const;
};

void save_vectors(std::ostream& out, const VectorStore& store);
void save_vectors(const std::filesystem::path& path, const VectorStore& store);
VectorStore load_vectors(std::istream& in);
VectorStore load_vectors(const std::filesystem::path& path);

}  // namespace rankvsm
