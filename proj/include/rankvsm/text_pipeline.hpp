#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace rankvsm {

using Term = std::string;
using TokenList = std::vector<Term>;

/// Tokenizer and ingestion settings.
///
/// Persisted as a flat `key = value` file with the keys `lowercase`,
/// `min_token_len`, `stopwords_path` and `pretokenized`. The stopword set is
/// not part of the file; it is loaded from `stopwords_path` on demand.
struct PipelineConfig {
  bool lowercase = true;
  std::size_t min_token_len = 1;
  std::optional<std::filesystem::path> stopwords_path;
  bool pretokenized = false;

  std::unordered_set<Term> stopwords;

  /// Reads `stopwords_path` (if set) into `stopwords`, folded the same way
  /// tokens are.
  void load_stopwords();
};

PipelineConfig read_pipeline_config(std::istream& in);
PipelineConfig read_pipeline_config(const std::filesystem::path& path);
void write_pipeline_config(std::ostream& out, const PipelineConfig& config);

struct Document {
  std::string id;
  std::optional<std::string> raw_text;
  TokenList tokens;

  /// A document without tokens cannot carry a weight vector.
  bool degenerate() const noexcept { return tokens.empty(); }
};

class Corpus {
 public:
  /// Throws on an empty document list or duplicate ids.
  explicit Corpus(std::vector<Document> documents);

  const std::vector<Document>& documents() const noexcept { return documents_; }
  std::size_t size() const noexcept { return documents_.size(); }
  const Document& operator[](std::size_t i) const { return documents_[i]; }

  std::optional<std::size_t> find(std::string_view id) const;
  const Document& at(std::string_view id) const;

  bool operator==(const Corpus& other) const;

 private:
  std::vector<Document> documents_;
};

/// Sorted unique term list shared by every vector of a corpus. Terms are in
/// ascending byte-wise order, so a term's position is its vector coordinate.
class Vocabulary {
 public:
  Vocabulary() = default;
  /// Throws unless `terms` is strictly ascending and free of empty strings.
  explicit Vocabulary(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& operator[](std::size_t i) const { return terms_[i]; }
  std::optional<std::size_t> position(std::string_view term) const;

  bool operator==(const Vocabulary& other) const { return terms_ == other.terms_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::vector<Term> terms_;
  std::unordered_map<Term, std::size_t, Hash, std::equal_to<>> index_;
};

/// One document before tokenization: raw text, or a whitespace-separated
/// token line in pre-tokenized mode.
struct CorpusInput {
  std::string id;
  std::string text;
};

/// Splits `raw_text` into maximal runs of alphanumeric code points (UTF-8),
/// then applies case folding, the stopword filter and the minimum length
/// (counted in code points). Token order is preserved.
TokenList tokenize(std::string_view raw_text, const PipelineConfig& config);

/// Splits on ASCII whitespace, nothing else.
TokenList split_whitespace(std::string_view line);

Corpus build_corpus(std::span<const CorpusInput> inputs, const PipelineConfig& config);

Vocabulary build_vocabulary(const Corpus& corpus);

/// Every `*.txt` file directly under `dir`, ordered by filename; id is the stem.
std::vector<CorpusInput> read_text_directory(const std::filesystem::path& dir);

/// One document per line: `id<TAB>tok tok ...`. Blank lines are skipped.
std::vector<CorpusInput> read_pretokenized(std::istream& in);
std::vector<CorpusInput> read_pretokenized(const std::filesystem::path& path);

/// Dispatches on `config.pretokenized`.
std::vector<CorpusInput> read_inputs(const std::filesystem::path& path,
                                     const PipelineConfig& config);

}  // namespace rankvsm
