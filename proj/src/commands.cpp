#include "rankvsm/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "rankvsm/error.hpp"
#include "rankvsm/store.hpp"

namespace rankvsm::cli {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  return out;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create '" + dir.string() + "': " + ec.message());
}

void require_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kIo, "no such file '" + path.string() + "'");
  }
}

VectorStore load_store(const std::filesystem::path& vectors_file) {
  require_file(vectors_file);
  return load_vectors(vectors_file);
}

}  // namespace

void RunConfig::validate() const {
  if (precision < 1 || precision > 12) {
    throw Error(ErrorCode::kConfig, "precision must be in [1, 12], got " + std::to_string(precision));
  }
  if (min_token_len < 1) throw Error(ErrorCode::kConfig, "min_token_len must be at least 1");
}

PipelineConfig RunConfig::pipeline() const {
  PipelineConfig p;
  p.lowercase = lowercase;
  p.min_token_len = min_token_len;
  p.stopwords_path = stopwords_path;
  p.pretokenized = mode == InputMode::kPretokenized;
  return p;
}

void apply_pipeline_config(RunConfig& config, const PipelineConfig& file) {
  config.lowercase = file.lowercase;
  config.min_token_len = file.min_token_len;
  config.stopwords_path = file.stopwords_path;
  if (file.pretokenized) config.mode = InputMode::kPretokenized;
}

std::filesystem::path cmd_ingest(const RunConfig& config) {
  config.validate();
  std::error_code ec;
  if (!std::filesystem::exists(config.input, ec)) {
    throw Error(ErrorCode::kIo, "no such file or directory '" + config.input.string() + "'");
  }
  auto pipeline = config.pipeline();
  pipeline.load_stopwords();
  const auto inputs = read_inputs(config.input, pipeline);
  const Corpus corpus = build_corpus(inputs, pipeline);

  ensure_dir(config.out_dir);
  const auto path = config.out_dir / kCorpusFile;
  save_corpus(path, corpus, pipeline);
  return path;
}

std::filesystem::path cmd_vectorize(const std::filesystem::path& corpus_file,
                                    const RunConfig& config) {
  config.validate();
  require_file(corpus_file);
  const auto stored = load_corpus(corpus_file);
  const auto model = TfIdfModel::fit(stored.corpus, config.log_base);
  auto vectors = vectorize_corpus(model, stored.corpus);
  if (std::all_of(vectors.begin(), vectors.end(), [](const auto& v) { return v.is_zero(); })) {
    throw Error(ErrorCode::kDegenerateCorpus,
                "every document vector is zero (no term separates the documents); "
                "all similarity measures would be undefined");
  }

  ensure_dir(config.out_dir);
  const auto path = config.out_dir / kVectorsFile;
  save_vectors(path, VectorStore{model, std::move(vectors)});
  return path;
}

void cmd_sim(const std::filesystem::path& vectors_file, const std::string& doc_a,
             const std::string& doc_b, std::optional<Measure> measure, const RunConfig& config,
             std::ostream& out) {
  config.validate();
  const auto store = load_store(vectors_file);
  const auto& u = store.at(doc_a);
  const auto& v = store.at(doc_b);
  const auto format = config.number_format();
  if (measure) {
    out << format_value(compute(*measure, u.values(), v.values(), config.tie_policy).get(), format)
        << '\n';
    return;
  }
  const auto all = all_measures(u, v, config.tie_policy);
  for (const Measure m : kAllMeasures) {
    out << to_string(m) << ' ' << format_value(all[m].get(), format) << '\n';
  }
}

std::vector<std::filesystem::path> cmd_matrix(const std::filesystem::path& vectors_file,
                                              const RunConfig& config) {
  config.validate();
  const auto store = load_store(vectors_file);
  if (store.vectors.size() < 2) {
    throw Error(ErrorCode::kDegenerateCorpus, "a similarity matrix needs at least two documents");
  }
  const auto matrix = pairwise_matrix(store.vectors, kAllMeasures, config.tie_policy, config.threads);
  const auto format = config.number_format();

  ensure_dir(config.out_dir);
  std::vector<std::filesystem::path> written;
  for (const Measure m : kAllMeasures) {
    const auto path = config.out_dir / (std::string(to_string(m)) + ".csv");
    auto out = open_output(path);
    write_matrix_csv(out, matrix, m, format);
    written.push_back(path);
  }
  {
    const auto path = config.out_dir / "matrix.json";
    auto out = open_output(path);
    write_matrix_json(out, matrix);
    written.push_back(path);
  }
  {
    const auto path = config.out_dir / "measure_scatter.csv";
    auto out = open_output(path);
    write_measure_scatter_csv(out, measure_scatter(matrix), format);
    written.push_back(path);
  }
  return written;
}

void cmd_compare(const std::filesystem::path& vectors_file, const std::vector<DocPair>& pairs,
                 const RunConfig& config, std::ostream& out) {
  config.validate();
  const auto store = load_store(vectors_file);
  if (store.vectors.size() < 2) {
    throw Error(ErrorCode::kDegenerateCorpus, "a comparison needs at least two documents");
  }
  // Fail on unknown ids before doing the full matrix.
  for (const auto& [a, b] : pairs) {
    store.at(a);
    store.at(b);
  }
  const auto matrix = pairwise_matrix(store.vectors, kAllMeasures, config.tie_policy, config.threads);
  write_report_csv(out, comparison_report(matrix, pairs), config.number_format());
}

void cmd_scatter(const std::filesystem::path& vectors_file, const RunConfig& config,
                 std::ostream& out) {
  config.validate();
  const auto store = load_store(vectors_file);
  if (store.vectors.size() < 2) {
    throw Error(ErrorCode::kDegenerateCorpus, "a scatter needs at least two documents");
  }
  const auto matrix = pairwise_matrix(store.vectors, kAllMeasures, config.tie_policy, config.threads);
  write_measure_scatter_csv(out, measure_scatter(matrix), config.number_format());
}

void cmd_rank_scatter(const std::filesystem::path& vectors_file, const std::string& doc_a,
                      const std::string& doc_b, const RunConfig& config, std::ostream& out) {
  config.validate();
  const auto store = load_store(vectors_file);
  const auto points =
      rank_scatter(store.at(doc_a), store.at(doc_b), store.model.vocabulary(), config.tie_policy);
  write_rank_scatter_csv(out, points);
}

}  // namespace rankvsm::cli
