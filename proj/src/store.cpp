#include "rankvsm/store.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "json.hpp"
#include "rankvsm/error.hpp"

namespace rankvsm {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kCorpusFormat = "rankvsm-corpus";
constexpr std::string_view kVectorsFormat = "rankvsm-vectors";

Json parse(std::istream& in) {
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

void check_header(const Json& doc, std::string_view format) {
  if (!doc.is_object() || !doc.contains("format") || doc["format"] != format) {
    throw Error(ErrorCode::kParse, "not a " + std::string(format) + " file");
  }
  if (!doc.contains("version") || doc["version"] != kStoreVersion) {
    throw Error(ErrorCode::kParse, "unsupported " + std::string(format) + " version");
  }
}

// nlohmann type errors become parse errors; the domain constructors throw
// their own Error codes for invariant violations.
template <typename F>
auto guarded(std::string_view what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, "malformed " + std::string(what) + ": " + e.what());
  }
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

void save_corpus(std::ostream& out, const Corpus& corpus, const PipelineConfig& config) {
  Json doc;
  doc["format"] = kCorpusFormat;
  doc["version"] = kStoreVersion;
  doc["pipeline"] = {
      {"lowercase", config.lowercase},
      {"min_token_len", config.min_token_len},
      {"stopwords_path", config.stopwords_path ? Json(config.stopwords_path->string()) : Json(nullptr)},
      {"pretokenized", config.pretokenized},
  };
  auto& docs = doc["documents"] = Json::array();
  for (const auto& d : corpus.documents()) {
    Json entry{{"id", d.id}};
    if (d.raw_text) entry["raw_text"] = *d.raw_text;
    entry["tokens"] = d.tokens;
    docs.push_back(std::move(entry));
  }
  out << doc.dump(2) << '\n';
}

void save_corpus(const std::filesystem::path& path, const Corpus& corpus,
                 const PipelineConfig& config) {
  auto out = open_output(path);
  save_corpus(out, corpus, config);
}

StoredCorpus load_corpus(std::istream& in) {
  const Json doc = parse(in);
  check_header(doc, kCorpusFormat);
  return guarded("corpus file", [&] {
    PipelineConfig config;
    const auto& p = doc.at("pipeline");
    config.lowercase = p.at("lowercase").get<bool>();
    config.min_token_len = p.at("min_token_len").get<std::size_t>();
    if (!p.at("stopwords_path").is_null()) {
      config.stopwords_path = p.at("stopwords_path").get<std::string>();
    }
    config.pretokenized = p.at("pretokenized").get<bool>();

    std::vector<Document> documents;
    for (const auto& entry : doc.at("documents")) {
      Document d{.id = entry.at("id").get<std::string>(), .raw_text = std::nullopt,
                 .tokens = entry.at("tokens").get<TokenList>()};
      if (entry.contains("raw_text")) d.raw_text = entry["raw_text"].get<std::string>();
      for (const auto& t : d.tokens) {
        if (t.empty() || t.find_first_of(" \t\n\r\f\v") != std::string::npos) {
          throw Error(ErrorCode::kParse, "document '" + d.id + "' has an empty or whitespace token");
        }
      }
      documents.push_back(std::move(d));
    }
    return StoredCorpus{Corpus(std::move(documents)), std::move(config)};
  });
}

StoredCorpus load_corpus(const std::filesystem::path& path) {
  auto in = open_input(path);
  return load_corpus(in);
}

const DocumentVector& VectorStore::at(std::string_view id) const {
  for (const auto& v : vectors) {
    if (v.doc_id == id) return v;
  }
  throw Error(ErrorCode::kUnknownDocument, "unknown document id '" + std::string(id) + "'");
}

void save_vectors(std::ostream& out, const VectorStore& store) {
  const auto& model = store.model;
  Json doc;
  doc["format"] = kVectorsFormat;
  doc["version"] = kStoreVersion;
  doc["log_base"] = to_string(model.log_base());
  doc["corpus_size"] = model.corpus_size();
  doc["vocabulary"] = model.vocabulary().terms();
  doc["doc_freq"] = model.doc_freq();
  auto& docs = doc["documents"] = Json::array();
  // Doubles are written in shortest round-trip form, so reloading is exact.
  for (const auto& v : store.vectors) docs.push_back({{"id", v.doc_id}, {"weights", v.weights}});
  out << doc.dump(2) << '\n';
}

void save_vectors(const std::filesystem::path& path, const VectorStore& store) {
  auto out = open_output(path);
  save_vectors(out, store);
}

VectorStore load_vectors(std::istream& in) {
  const Json doc = parse(in);
  check_header(doc, kVectorsFormat);
  return guarded("vectors file", [&] {
    TfIdfModel model(Vocabulary(doc.at("vocabulary").get<std::vector<Term>>()),
                     doc.at("doc_freq").get<std::vector<std::size_t>>(),
                     doc.at("corpus_size").get<std::size_t>(),
                     parse_log_base(doc.at("log_base").get<std::string>()));

    std::vector<DocumentVector> vectors;
    for (const auto& entry : doc.at("documents")) {
      DocumentVector v{entry.at("id").get<std::string>(), entry.at("weights").get<std::vector<double>>()};
      if (v.size() != model.vocabulary().size()) {
        throw Error(ErrorCode::kParse, "vector '" + v.doc_id + "' length does not match the vocabulary");
      }
      for (const double w : v.weights) {
        if (!std::isfinite(w) || w < 0.0) {
          throw Error(ErrorCode::kParse, "vector '" + v.doc_id + "' has a negative or non-finite weight");
        }
      }
      for (const auto& other : vectors) {
        if (other.doc_id == v.doc_id) {
          throw Error(ErrorCode::kDuplicateId, "duplicate document id '" + v.doc_id + "'");
        }
      }
      vectors.push_back(std::move(v));
    }
    if (vectors.empty()) throw Error(ErrorCode::kParse, "vectors file has no documents");
    return VectorStore{std::move(model), std::move(vectors)};
  });
}

VectorStore load_vectors(const std::filesystem::path& path) {
  auto in = open_input(path);
  return load_vectors(in);
}

}  // namespace rankvsm
