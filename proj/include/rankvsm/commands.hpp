#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rankvsm/corpus_report.hpp"
#include "rankvsm/text_pipeline.hpp"
#include "rankvsm/vector_space.hpp"

namespace rankvsm::cli {

enum class InputMode { kRaw, kPretokenized };

/// Everything a pipeline stage can be configured with. Each command reads
/// only the fields it needs.
struct RunConfig {
  std::filesystem::path input;
  InputMode mode = InputMode::kRaw;
  LogBase log_base = LogBase::kE;
  TiePolicy tie_policy = TiePolicy::kAverage;
  bool lowercase = true;
  std::size_t min_token_len = 1;
  std::optional<std::filesystem::path> stopwords_path;
  std::filesystem::path out_dir = ".";
  int precision = 4;
  bool full_precision = false;
  unsigned threads = 0;

  /// Throws Error(kConfig) when a field is out of range.
  void validate() const;

  PipelineConfig pipeline() const;
  NumberFormat number_format() const { return {precision, full_precision}; }
};

/// Copies the pipeline keys of a config file into `config`.
void apply_pipeline_config(RunConfig& config, const PipelineConfig& file);

inline constexpr const char* kCorpusFile = "corpus.json";
inline constexpr const char* kVectorsFile = "vectors.json";

/// Reads and tokenizes the input, writes `<out_dir>/corpus.json`.
std::filesystem::path cmd_ingest(const RunConfig& config);

/// Fits the model, writes `<out_dir>/vectors.json`. Fails when no document
/// has a nonzero vector, since every measure would be undefined.
std::filesystem::path cmd_vectorize(const std::filesystem::path& corpus_file,
                                    const RunConfig& config);

/// Prints one measure, or all three as "name value" lines when `measure`
/// is empty.
void cmd_sim(const std::filesystem::path& vectors_file, const std::string& doc_a,
             const std::string& doc_b, std::optional<Measure> measure, const RunConfig& config,
             std::ostream& out);

/// Writes cs.csv, srcc.csv, pcc.csv, matrix.json and measure_scatter.csv
/// under `out_dir` and returns their paths.
std::vector<std::filesystem::path> cmd_matrix(const std::filesystem::path& vectors_file,
                                              const RunConfig& config);

void cmd_compare(const std::filesystem::path& vectors_file, const std::vector<DocPair>& pairs,
                 const RunConfig& config, std::ostream& out);

void cmd_scatter(const std::filesystem::path& vectors_file, const RunConfig& config,
                 std::ostream& out);

void cmd_rank_scatter(const std::filesystem::path& vectors_file, const std::string& doc_a,
                      const std::string& doc_b, const RunConfig& config, std::ostream& out);

}  // namespace rankvsm::cli
