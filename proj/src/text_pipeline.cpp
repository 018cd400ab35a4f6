#include "rankvsm/text_pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "rankvsm/error.hpp"
#include "utf8.hpp"

namespace rankvsm {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ascii_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ascii_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string fold(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t pos = 0; pos < word.size();) {
    utf8::append(out, utf8::to_lower(utf8::decode(word, pos)));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw Error(ErrorCode::kConfig,
              "config key '" + std::string(key) + "' expects a boolean, got '" +
                  std::string(value) + "'");
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

void PipelineConfig::load_stopwords() {
  stopwords.clear();
  if (!stopwords_path) return;
  auto in = open_input(*stopwords_path);
  std::string line;
  while (std::getline(in, line)) {
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    for (auto& word : split_whitespace(body)) {
      stopwords.insert(lowercase ? fold(word) : std::move(word));
    }
  }
}

PipelineConfig read_pipeline_config(std::istream& in) {
  PipelineConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kConfig,
                  "config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(body.substr(0, eq));
    const auto value = trim(body.substr(eq + 1));
    if (key == "lowercase") {
      config.lowercase = parse_bool(key, value);
    } else if (key == "pretokenized") {
      config.pretokenized = parse_bool(key, value);
    } else if (key == "min_token_len") {
      std::size_t parsed = 0;
      try {
        std::size_t used = 0;
        const long long v = std::stoll(std::string(value), &used);
        if (used != value.size() || v < 1) throw std::invalid_argument("range");
        parsed = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kConfig, "config key 'min_token_len' expects a positive integer, got '" +
                                            std::string(value) + "'");
      }
      config.min_token_len = parsed;
    } else if (key == "stopwords_path") {
      if (value.empty()) {
        config.stopwords_path.reset();
      } else {
        config.stopwords_path = std::filesystem::path(std::string(value));
      }
    } else {
      throw Error(ErrorCode::kConfig, "config line " + std::to_string(line_no) +
                                          ": unknown key '" + std::string(key) + "'");
    }
  }
  return config;
}

PipelineConfig read_pipeline_config(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_pipeline_config(in);
}

void write_pipeline_config(std::ostream& out, const PipelineConfig& config) {
  out << "lowercase = " << (config.lowercase ? "true" : "false") << '\n'
      << "min_token_len = " << config.min_token_len << '\n'
      << "stopwords_path = " << (config.stopwords_path ? config.stopwords_path->string() : "")
      << '\n'
      << "pretokenized = " << (config.pretokenized ? "true" : "false") << '\n';
}

Corpus::Corpus(std::vector<Document> documents) : documents_(std::move(documents)) {
  if (documents_.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus has no documents");
  std::set<std::string_view> seen;
  for (const auto& doc : documents_) {
    if (!seen.insert(doc.id).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate document id '" + doc.id + "'");
    }
  }
}

std::optional<std::size_t> Corpus::find(std::string_view id) const {
  for (std::size_t i = 0; i < documents_.size(); ++i) {
    if (documents_[i].id == id) return i;
  }
  return std::nullopt;
}

const Document& Corpus::at(std::string_view id) const {
  const auto i = find(id);
  if (!i) throw Error(ErrorCode::kUnknownDocument, "unknown document id '" + std::string(id) + "'");
  return documents_[*i];
}

bool Corpus::operator==(const Corpus& other) const {
  return std::equal(documents_.begin(), documents_.end(), other.documents_.begin(),
                    other.documents_.end(), [](const Document& a, const Document& b) {
                      return a.id == b.id && a.tokens == b.tokens && a.raw_text == b.raw_text;
                    });
}

Vocabulary::Vocabulary(std::vector<Term> terms) : terms_(std::move(terms)) {
  index_.reserve(terms_.size());
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].empty()) throw Error(ErrorCode::kInvalidArgument, "vocabulary term is empty");
    if (i > 0 && !(terms_[i - 1] < terms_[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vocabulary terms are not strictly ascending at '" + terms_[i] + "'");
    }
    index_.emplace(terms_[i], i);
  }
}

std::optional<std::size_t> Vocabulary::position(std::string_view term) const {
  const auto it = index_.find(term);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TokenList tokenize(std::string_view raw_text, const PipelineConfig& config) {
  TokenList tokens;
  std::string current;
  std::size_t current_len = 0;

  const auto flush = [&] {
    if (current.empty()) return;
    if (current_len >= config.min_token_len && !config.stopwords.contains(current)) {
      tokens.push_back(std::move(current));
    }
    current.clear();
    current_len = 0;
  };

  for (std::size_t pos = 0; pos < raw_text.size();) {
    const char32_t cp = utf8::decode(raw_text, pos);
    if (utf8::is_word_char(cp)) {
      utf8::append(current, config.lowercase ? utf8::to_lower(cp) : cp);
      ++current_len;
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

TokenList split_whitespace(std::string_view line) {
  TokenList tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_ascii_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_ascii_space(line[i])) ++i;
    if (i > start) tokens.emplace_back(line.substr(start, i - start));
  }
  return tokens;
}

Corpus build_corpus(std::span<const CorpusInput> inputs, const PipelineConfig& config) {
  std::vector<Document> documents;
  documents.reserve(inputs.size());
  std::size_t total_tokens = 0;
  for (const auto& input : inputs) {
    Document doc{.id = input.id, .raw_text = std::nullopt, .tokens = {}};
    if (config.pretokenized) {
      doc.tokens = split_whitespace(input.text);
    } else {
      doc.raw_text = input.text;
      doc.tokens = tokenize(input.text, config);
    }
    total_tokens += doc.tokens.size();
    documents.push_back(std::move(doc));
  }
  Corpus corpus(std::move(documents));
  if (total_tokens == 0) throw Error(ErrorCode::kEmptyCorpus, "every document is empty after tokenization");
  return corpus;
}

Vocabulary build_vocabulary(const Corpus& corpus) {
  std::set<Term> unique;
  for (const auto& doc : corpus.documents()) unique.insert(doc.tokens.begin(), doc.tokens.end());
  if (unique.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus has no tokens");
  return Vocabulary(std::vector<Term>(unique.begin(), unique.end()));
}

std::vector<CorpusInput> read_text_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIo, "'" + dir.string() + "' is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });

  std::vector<CorpusInput> inputs;
  inputs.reserve(files.size());
  for (const auto& file : files) {
    auto in = open_input(file);
    std::ostringstream text;
    text << in.rdbuf();
    inputs.push_back({file.stem().string(), std::move(text).str()});
  }
  if (inputs.empty()) throw Error(ErrorCode::kEmptyCorpus, "no .txt files in '" + dir.string() + "'");
  return inputs;
}

std::vector<CorpusInput> read_pretokenized(std::istream& in) {
  std::vector<CorpusInput> inputs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::kParse,
                  "line " + std::to_string(line_no) + ": expected 'id<TAB>tokens'");
    }
    const auto id = trim(std::string_view(line).substr(0, tab));
    if (id.empty()) throw Error(ErrorCode::kParse, "line " + std::to_string(line_no) + ": empty id");
    inputs.push_back({std::string(id), line.substr(tab + 1)});
  }
  return inputs;
}

std::vector<CorpusInput> read_pretokenized(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_pretokenized(in);
}

std::vector<CorpusInput> read_inputs(const std::filesystem::path& path,
                                     const PipelineConfig& config) {
  if (config.pretokenized) return read_pretokenized(path);
  return read_text_directory(path);
}

}  // namespace rankvsm
