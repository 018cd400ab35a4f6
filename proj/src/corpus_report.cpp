#include "rankvsm/corpus_report.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "rankvsm/error.hpp"

namespace rankvsm {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

std::string shortest(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_value(std::optional<double> value, const NumberFormat& format) {
  if (!value) return "n/a";
  if (format.full) return shortest(*value == 0.0 ? 0.0 : *value);

  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, *value, std::chars_format::fixed, format.precision);
  std::string text(buf, res.ptr);
  // A value that rounds to zero prints without a sign.
  if (text.front() == '-' &&
      std::all_of(text.begin() + 1, text.end(), [](char c) { return c == '0' || c == '.'; })) {
    text.erase(0, 1);
  }
  return text;
}

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> doc_ids,
                                   std::span<const Measure> measures, TiePolicy tie_policy)
    : doc_ids_(std::move(doc_ids)), tie_policy_(tie_policy) {
  const std::size_t cells = doc_ids_.size() * doc_ids_.size();
  for (const Measure m : measures) {
    if (!grids_[slot(m)]) grids_[slot(m)].emplace(cells);
  }
}

std::vector<Measure> SimilarityMatrix::measures() const {
  std::vector<Measure> out;
  for (const Measure m : kAllMeasures) {
    if (has(m)) out.push_back(m);
  }
  return out;
}

std::optional<double> SimilarityMatrix::at(Measure m, std::size_t i, std::size_t j) const {
  const auto& grid = grids_[slot(m)];
  if (!grid) {
    throw Error(ErrorCode::kInvalidArgument,
                "measure '" + std::string(to_string(m)) + "' was not computed");
  }
  return (*grid)[i * doc_ids_.size() + j];
}

std::optional<std::size_t> SimilarityMatrix::index_of(std::string_view id) const {
  const auto it = std::find(doc_ids_.begin(), doc_ids_.end(), id);
  if (it == doc_ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - doc_ids_.begin());
}

void SimilarityMatrix::set(Measure m, std::size_t i, std::size_t j, std::optional<double> value) {
  auto& grid = *grids_[slot(m)];
  grid[i * doc_ids_.size() + j] = value;
  grid[j * doc_ids_.size() + i] = value;
}

SimilarityMatrix pairwise_matrix(std::span<const DocumentVector> vectors,
                                 std::span<const Measure> measures, TiePolicy tie_policy,
                                 unsigned threads) {
  const std::size_t n = vectors.size();
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "a similarity matrix needs at least two documents");
  for (const auto& v : vectors) {
    if (v.size() != vectors.front().size()) {
      throw Error(ErrorCode::kLengthMismatch, "vector '" + v.doc_id + "' has length " +
                                                  std::to_string(v.size()) + ", expected " +
                                                  std::to_string(vectors.front().size()));
    }
  }

  std::vector<std::string> ids;
  ids.reserve(n);
  for (const auto& v : vectors) ids.push_back(v.doc_id);
  SimilarityMatrix matrix(std::move(ids), measures, tie_policy);

  const bool want_cs = matrix.has(Measure::kCosine);
  const bool want_srcc = matrix.has(Measure::kSpearman);
  const bool want_pcc = matrix.has(Measure::kPearson);

  std::vector<RankVector> ranks;
  if (want_srcc) {
    ranks.reserve(n);
    for (const auto& v : vectors) ranks.push_back(rank_vector(v.values(), tie_policy));
  }

  // Diagonal: 1 for every document the measure is defined on.
  for (std::size_t i = 0; i < n; ++i) {
    const auto w = vectors[i].values();
    const bool zero = vectors[i].is_zero();
    const bool constant = std::all_of(w.begin(), w.end(), [&](double x) { return x == w.front(); });
    if (want_cs) matrix.set(Measure::kCosine, i, i, zero ? std::nullopt : std::optional(1.0));
    if (want_srcc) matrix.set(Measure::kSpearman, i, i, constant ? std::nullopt : std::optional(1.0));
    if (want_pcc) matrix.set(Measure::kPearson, i, i, constant ? std::nullopt : std::optional(1.0));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

  // Each worker owns a disjoint set of pairs, so cells are written once.
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < pairs.size(); k += stride) {
      const auto [i, j] = pairs[k];
      const auto u = vectors[i].values();
      const auto v = vectors[j].values();
      if (want_cs) matrix.set(Measure::kCosine, i, j, cosine(u, v).get());
      if (want_srcc) matrix.set(Measure::kSpearman, i, j, spearman_from_ranks(ranks[i], ranks[j]).get());
      if (want_pcc) matrix.set(Measure::kPearson, i, j, pearson(u, v).get());
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, pairs.size() / 64)));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }
  return matrix;
}

std::vector<PairRecord> comparison_report(const SimilarityMatrix& matrix,
                                          std::span<const DocPair> pairs) {
  const auto value = [&](Measure m, std::size_t i, std::size_t j) -> std::optional<double> {
    return matrix.has(m) ? matrix.at(m, i, j) : std::nullopt;
  };
  const auto record = [&](std::size_t i, std::size_t j) {
    return PairRecord{matrix.doc_ids()[i], matrix.doc_ids()[j], value(Measure::kCosine, i, j),
                      value(Measure::kSpearman, i, j), value(Measure::kPearson, i, j)};
  };

  std::vector<PairRecord> out;
  if (pairs.empty()) {
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      for (std::size_t j = i + 1; j < matrix.size(); ++j) out.push_back(record(i, j));
    }
    return out;
  }

  const auto lookup = [&](const std::string& id) {
    const auto i = matrix.index_of(id);
    if (!i) throw Error(ErrorCode::kUnknownDocument, "unknown document id '" + id + "'");
    return *i;
  };
  for (const auto& [a, b] : pairs) {
    const std::size_t i = lookup(a);
    const std::size_t j = lookup(b);
    if (i == j) throw Error(ErrorCode::kInvalidArgument, "pair '" + a + "," + b + "' names one document twice");
    out.push_back(record(std::min(i, j), std::max(i, j)));
  }
  return out;
}

std::vector<DocPair> parse_pair_list(std::string_view text) {
  std::vector<DocPair> pairs;
  while (!text.empty()) {
    const auto sep = text.find_first_of(";\n");
    const auto item = trim(text.substr(0, sep));
    text = sep == std::string_view::npos ? std::string_view{} : text.substr(sep + 1);
    if (item.empty() || item.front() == '#') continue;

    const auto comma = item.find(',');
    const auto a = comma == std::string_view::npos ? std::string_view{} : trim(item.substr(0, comma));
    const auto b = comma == std::string_view::npos ? std::string_view{} : trim(item.substr(comma + 1));
    if (a.empty() || b.empty() || b.find(',') != std::string_view::npos) {
      throw Error(ErrorCode::kParse, "malformed pair '" + std::string(item) + "', expected 'a,b'");
    }
    pairs.emplace_back(std::string(a), std::string(b));
  }
  return pairs;
}

std::vector<ScatterPoint> measure_scatter(const SimilarityMatrix& matrix) {
  std::vector<ScatterPoint> points;
  for (const auto& r : comparison_report(matrix)) {
    points.push_back({r.doc_a + "|" + r.doc_b, r.cs, r.srcc, r.pcc});
  }
  return points;
}

std::vector<RankPoint> rank_scatter(const DocumentVector& u, const DocumentVector& v,
                                    const Vocabulary& vocabulary, TiePolicy tie_policy) {
  if (u.size() != v.size() || u.size() != vocabulary.size()) {
    throw Error(ErrorCode::kLengthMismatch, "vectors '" + u.doc_id + "' and '" + v.doc_id +
                                                "' do not match the vocabulary size " +
                                                std::to_string(vocabulary.size()));
  }
  const auto ru = rank_vector(u.values(), tie_policy);
  const auto rv = rank_vector(v.values(), tie_policy);
  std::vector<RankPoint> points;
  points.reserve(vocabulary.size());
  for (std::size_t i = 0; i < vocabulary.size(); ++i) {
    points.push_back({vocabulary[i], ru.ranks[i], rv.ranks[i]});
  }
  return points;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_matrix_csv(std::ostream& out, const SimilarityMatrix& matrix, Measure measure,
                      const NumberFormat& format) {
  out << "doc";
  for (const auto& id : matrix.doc_ids()) out << ',' << csv_field(id);
  out << '\n';
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out << csv_field(matrix.doc_ids()[i]);
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      out << ',' << format_value(matrix.at(measure, i, j), format);
    }
    out << '\n';
  }
}

void write_matrix_json(std::ostream& out, const SimilarityMatrix& matrix) {
  nlohmann::ordered_json doc;
  doc["format"] = "rankvsm-matrix";
  doc["version"] = 1;
  doc["tie_policy"] = to_string(matrix.tie_policy());
  doc["doc_ids"] = matrix.doc_ids();
  auto& grids = doc["measures"] = nlohmann::ordered_json::object();
  for (const Measure m : matrix.measures()) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (std::size_t j = 0; j < matrix.size(); ++j) {
        const auto v = matrix.at(m, i, j);
        row.push_back(v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr));
      }
      rows.push_back(std::move(row));
    }
    grids[std::string(to_string(m))] = std::move(rows);
  }
  out << doc.dump(2) << '\n';
}

void write_report_csv(std::ostream& out, std::span<const PairRecord> records,
                      const NumberFormat& format) {
  out << "doc_a,doc_b,cs,srcc,pcc\n";
  for (const auto& r : records) {
    out << csv_field(r.doc_a) << ',' << csv_field(r.doc_b) << ',' << format_value(r.cs, format)
        << ',' << format_value(r.srcc, format) << ',' << format_value(r.pcc, format) << '\n';
  }
}

void write_measure_scatter_csv(std::ostream& out, std::span<const ScatterPoint> points,
                               const NumberFormat& format) {
  out << "pair,cs,srcc,pcc\n";
  for (const auto& p : points) {
    out << csv_field(p.pair) << ',' << format_value(p.cs, format) << ','
        << format_value(p.srcc, format) << ',' << format_value(p.pcc, format) << '\n';
  }
}

void write_rank_scatter_csv(std::ostream& out, std::span<const RankPoint> points) {
  out << "term,rank_u,rank_v\n";
  for (const auto& p : points) {
    out << csv_field(p.term) << ',' << shortest(p.rank_u) << ',' << shortest(p.rank_v) << '\n';
  }
}

}  // namespace rankvsm
