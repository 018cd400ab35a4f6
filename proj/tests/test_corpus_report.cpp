#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "rankvsm/corpus_report.hpp"
#include "test_util.hpp"

using namespace rankvsm;
using rankvsm::test::code_of;

namespace {

std::vector<DocumentVector> example_vectors() {
  const auto corpus = test::example_corpus();
  return vectorize_corpus(TfIdfModel::fit(corpus), corpus);
}

std::vector<DocumentVector> random_vectors(std::mt19937_64& rng, std::size_t docs, std::size_t dim) {
  std::vector<DocumentVector> out;
  for (std::size_t d = 0; d < docs; ++d) {
    out.push_back({"doc" + std::to_string(d), oracle::sparse_weights(rng, dim, 0.3)});
  }
  return out;
}

}  // namespace

TEST_CASE("format_value") {
  CHECK(format_value(-2.0 / 7.0) == "-0.2857");
  CHECK(format_value(0.0) == "0.0000");
  CHECK(format_value(-0.0) == "0.0000");
  CHECK(format_value(-0.00001) == "0.0000");
  CHECK(format_value(1.0, {2, false}) == "1.00");
  CHECK(format_value(-2.0 / 7.0, {6, false}) == "-0.285714");
  CHECK(format_value(std::nullopt) == "n/a");
  CHECK(format_value(0.1, {4, true}) == "0.1");
  CHECK(format_value(-2.0 / 7.0, {4, true}) == "-0.2857142857142857");
}

TEST_CASE("pairwise_matrix: worked example") {
  const auto m = pairwise_matrix(example_vectors());
  REQUIRE(m.size() == 2);
  CHECK(m.at(Measure::kCosine, 0, 1) == 0.0);
  CHECK(*m.at(Measure::kSpearman, 0, 1) == doctest::Approx(-0.285714).epsilon(1e-6));
  CHECK(*m.at(Measure::kPearson, 1, 0) == doctest::Approx(-0.285714).epsilon(1e-6));
  for (const Measure meas : kAllMeasures) {
    CHECK(m.at(meas, 0, 0) == 1.0);
    CHECK(m.at(meas, 1, 1) == 1.0);
  }
}

TEST_CASE("pairwise_matrix: two identical documents") {
  const std::vector<DocumentVector> v{{"a", {0.1, 0.0, 0.3}}, {"b", {0.1, 0.0, 0.3}}};
  const auto m = pairwise_matrix(v);
  CHECK(*m.at(Measure::kCosine, 0, 1) == doctest::Approx(1.0));
  CHECK(m.at(Measure::kSpearman, 0, 1) == 1.0);
  CHECK(m.at(Measure::kPearson, 0, 1) == 1.0);
}

TEST_CASE("pairwise_matrix: degenerate documents") {
  const std::vector<DocumentVector> v{{"zero", {0, 0, 0}}, {"flat", {0.2, 0.2, 0.2}}, {"x", {0.1, 0, 0.5}}};
  const auto m = pairwise_matrix(v);
  CHECK_FALSE(m.at(Measure::kCosine, 0, 0).has_value());
  CHECK_FALSE(m.at(Measure::kSpearman, 0, 0).has_value());
  CHECK(m.at(Measure::kCosine, 1, 1) == 1.0);
  CHECK_FALSE(m.at(Measure::kPearson, 1, 1).has_value());
  CHECK_FALSE(m.at(Measure::kCosine, 0, 2).has_value());
  CHECK(m.at(Measure::kCosine, 1, 2).has_value());
  CHECK_FALSE(m.at(Measure::kPearson, 1, 2).has_value());
}

TEST_CASE("pairwise_matrix: equals direct recomputation, for any thread count") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto vectors = random_vectors(rng, 3 + trial % 9, 40);
    const auto single = pairwise_matrix(vectors, kAllMeasures, TiePolicy::kAverage, 1);
    const auto multi = pairwise_matrix(vectors, kAllMeasures, TiePolicy::kAverage, 4);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      for (std::size_t j = 0; j < vectors.size(); ++j) {
        for (const Measure meas : kAllMeasures) {
          REQUIRE(single.at(meas, i, j) == multi.at(meas, i, j));
          REQUIRE(single.at(meas, i, j) == single.at(meas, j, i));
          if (i == j) {
            REQUIRE(single.at(meas, i, i) == 1.0);
            continue;
          }
          const auto cell = single.at(meas, i, j);
          const auto direct = compute(meas, vectors[i].values(), vectors[j].values()).get();
          REQUIRE(cell == direct);
        }
        if (i != j) {
          REQUIRE(*single.at(Measure::kCosine, i, j) ==
                  doctest::Approx(oracle::cosine(vectors[i].weights, vectors[j].weights)).epsilon(1e-12));
          REQUIRE(*single.at(Measure::kSpearman, i, j) ==
                  doctest::Approx(oracle::spearman(vectors[i].weights, vectors[j].weights)).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("pairwise_matrix: subset of measures and errors") {
  std::mt19937_64 rng(1);
  const auto vectors = random_vectors(rng, 3, 10);
  const std::array<Measure, 1> only_cs{Measure::kCosine};
  const auto m = pairwise_matrix(vectors, only_cs);
  CHECK(m.has(Measure::kCosine));
  CHECK_FALSE(m.has(Measure::kPearson));
  CHECK(code_of([&] { m.at(Measure::kPearson, 0, 1); }) == ErrorCode::kInvalidArgument);

  const std::vector<DocumentVector> one{{"a", {1.0}}};
  CHECK(code_of([&] { pairwise_matrix(one); }) == ErrorCode::kInvalidArgument);
  const std::vector<DocumentVector> ragged{{"a", {1.0, 2.0}}, {"b", {1.0}}};
  CHECK(code_of([&] { pairwise_matrix(ragged); }) == ErrorCode::kLengthMismatch);
}

TEST_CASE("comparison_report") {
  const auto m = pairwise_matrix(example_vectors());
  const auto all = comparison_report(m);
  REQUIRE(all.size() == 1);
  CHECK(all[0].doc_a == "d1");
  CHECK(all[0].doc_b == "d2");

  // Reversed request is normalized to corpus order.
  const std::vector<DocPair> reversed{{"d2", "d1"}};
  const auto r = comparison_report(m, reversed);
  REQUIRE(r.size() == 1);
  CHECK(r[0].doc_a == "d1");

  std::ostringstream out;
  write_report_csv(out, r);
  CHECK(out.str() == "doc_a,doc_b,cs,srcc,pcc\nd1,d2,0.0000,-0.2857,-0.2857\n");

  const std::vector<DocPair> unknown{{"d1", "d9"}};
  CHECK(code_of([&] { comparison_report(m, unknown); }) == ErrorCode::kUnknownDocument);
  const std::vector<DocPair> self{{"d1", "d1"}};
  CHECK(code_of([&] { comparison_report(m, self); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("comparison_report: table layout with a degenerate PCC") {
  const std::vector<DocumentVector> v{
      {"d1", {0.27, 0.0, 0.1, 0.3}}, {"d4", {0.2, 0.2, 0.2, 0.2}}, {"d8", {0.0, 0.5, 0.1, 0.3}}};
  const auto m = pairwise_matrix(v);
  const std::vector<DocPair> pairs{{"d1", "d4"}, {"d1", "d8"}};
  std::ostringstream out;
  write_report_csv(out, comparison_report(m, pairs));
  std::istringstream lines(out.str());
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(header == "doc_a,doc_b,cs,srcc,pcc");
  CHECK(first.rfind("d1,d4,", 0) == 0);
  CHECK(first.substr(first.size() - 7) == "n/a,n/a");
  CHECK(second.find("n/a") == std::string::npos);
}

TEST_CASE("parse_pair_list") {
  const auto pairs = parse_pair_list("d1,d4; d8 , d9\n\n# note\nd2,d4");
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[1] == DocPair{"d8", "d9"});
  CHECK(parse_pair_list("").empty());
  CHECK(code_of([] { parse_pair_list("d1"); }) == ErrorCode::kParse);
  CHECK(code_of([] { parse_pair_list("a,b,c"); }) == ErrorCode::kParse);
}

TEST_CASE("measure_scatter") {
  std::mt19937_64 rng(12);
  const auto vectors = random_vectors(rng, 14, 30);
  const auto m = pairwise_matrix(vectors);
  const auto points = measure_scatter(m);
  REQUIRE(points.size() == 91);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 14; ++i) {
    for (std::size_t j = i + 1; j < 14; ++j, ++k) {
      REQUIRE(points[k].pair == vectors[i].doc_id + "|" + vectors[j].doc_id);
      REQUIRE(points[k].cs == m.at(Measure::kCosine, i, j));
      REQUIRE(points[k].srcc == m.at(Measure::kSpearman, i, j));
      REQUIRE(points[k].pcc == m.at(Measure::kPearson, i, j));
    }
  }
  CHECK(measure_scatter(pairwise_matrix(example_vectors())).size() == 1);
}

TEST_CASE("rank_scatter: worked example") {
  const auto corpus = test::example_corpus();
  const auto model = TfIdfModel::fit(corpus);
  const auto vectors = vectorize_corpus(model, corpus);
  const auto points = rank_scatter(vectors[0], vectors[1], model.vocabulary());
  REQUIRE(points.size() == 9);
  CHECK(points[0].term == "ask");
  CHECK(points[0].rank_u == 4);
  CHECK(points[0].rank_v == 4);
  CHECK(points[2].term == "have");
  CHECK(points[2].rank_u == 8.5);
  CHECK(points[2].rank_v == 4);
  CHECK(points[8].term == "wife");
  CHECK(points[8].rank_u == 4);
  CHECK(points[8].rank_v == 8.5);

  // Spearman recomputed from the emitted points matches the matrix.
  std::vector<double> xs, ys;
  for (const auto& p : points) xs.push_back(p.rank_u), ys.push_back(p.rank_v);
  const auto m = pairwise_matrix(vectors);
  CHECK(std::abs(oracle::pearson(xs, ys) - *m.at(Measure::kSpearman, 0, 1)) <= 1e-12);

  std::ostringstream out;
  write_rank_scatter_csv(out, points);
  CHECK(out.str().rfind("term,rank_u,rank_v\nask,4,4\nbefore,4,4\nhave,8.5,4\n", 0) == 0);

  const auto diag = rank_scatter(vectors[0], vectors[0], model.vocabulary());
  for (const auto& p : diag) CHECK(p.rank_u == p.rank_v);

  const DocumentVector short_vec{"s", {1.0}};
  CHECK(code_of([&] { rank_scatter(vectors[0], short_vec, model.vocabulary()); }) ==
        ErrorCode::kLengthMismatch);
}

TEST_CASE("matrix writers") {
  const auto m = pairwise_matrix(example_vectors());
  std::ostringstream csv;
  write_matrix_csv(csv, m, Measure::kSpearman);
  CHECK(csv.str() == "doc,d1,d2\nd1,1.0000,-0.2857\nd2,-0.2857,1.0000\n");

  std::ostringstream json;
  write_matrix_json(json, m);
  CHECK(json.str().find("\"format\": \"rankvsm-matrix\"") != std::string::npos);
  CHECK(json.str().find("-0.2857142857142857") != std::string::npos);

  const std::vector<DocumentVector> v{{"zero", {0, 0}}, {"x", {0.1, 0.2}}};
  std::ostringstream json2;
  write_matrix_json(json2, pairwise_matrix(v));
  CHECK(json2.str().find("null") != std::string::npos);

  std::ostringstream scatter;
  write_measure_scatter_csv(scatter, measure_scatter(m));
  CHECK(scatter.str() == "pair,cs,srcc,pcc\nd1|d2,0.0000,-0.2857,-0.2857\n");

  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}
