// rankvsm: TF-IDF document vectors compared by cosine, Pearson and
// Spearman similarity, as a staged command-line pipeline.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rankvsm/commands.hpp"
#include "rankvsm/error.hpp"

namespace {

using rankvsm::cli::RunConfig;

struct Options {
  RunConfig run;
  std::string log_base = "e";
  std::string tie_policy = "average";
  std::string measure = "all";
  std::string pairs;
  std::string pairs_file;
  std::string config_file;
  std::string doc_a;
  std::string doc_b;
  std::string stage_input;
};

void add_output_options(CLI::App& cmd, Options& opt) {
  cmd.add_option("--out-dir", opt.run.out_dir, "Directory for written artifacts")
      ->envname("RANKVSM_OUT_DIR");
}

void add_format_options(CLI::App& cmd, Options& opt) {
  cmd.add_option("--precision", opt.run.precision, "Decimal places in printed values [1, 12]")
      ->envname("RANKVSM_PRECISION");
  cmd.add_flag("--full-precision", opt.run.full_precision,
               "Print shortest round-trip values instead of fixed decimals");
}

void add_rank_options(CLI::App& cmd, Options& opt) {
  cmd.add_option("--tie-policy", opt.tie_policy, "average, min, max, ordinal or dense")
      ->envname("RANKVSM_TIE_POLICY");
}

void add_thread_options(CLI::App& cmd, Options& opt) {
  cmd.add_option("--threads", opt.run.threads, "Worker threads for the matrix (0 = all cores)")
      ->envname("RANKVSM_THREADS");
}

int run(int argc, char** argv) {
  CLI::App app{"TF-IDF document similarity: cosine, Pearson and Spearman rank correlation"};
  app.set_version_flag("--version", std::string("rankvsm ") + RANKVSM_VERSION);
  app.require_subcommand(1);

  Options opt;

  auto* ingest = app.add_subcommand("ingest", "Tokenize a directory of .txt files or a pre-tokenized file");
  ingest->add_option("input", opt.run.input, "Directory (raw mode) or id<TAB>tokens file")->required();
  auto* pretok = ingest->add_flag("--pretokenized", "Input is one 'id<TAB>tok tok ...' line per document");
  auto* lower = ingest->add_flag("--lowercase,!--no-lowercase", opt.run.lowercase, "Fold case (default on)");
  auto* min_len = ingest->add_option("--min-token-len", opt.run.min_token_len, "Drop shorter tokens")
                      ->envname("RANKVSM_MIN_TOKEN_LEN");
  std::string stopwords;
  auto* stop = ingest->add_option("--stopwords", stopwords, "File of stopwords to drop")
                   ->envname("RANKVSM_STOPWORDS");
  ingest->add_option("--config", opt.config_file, "Pipeline config file (key = value)");
  add_output_options(*ingest, opt);

  auto* vectorize = app.add_subcommand("vectorize", "Fit TF-IDF weights and write document vectors");
  vectorize->add_option("corpus", opt.stage_input, "corpus.json from ingest")->required();
  vectorize->add_option("--log-base", opt.log_base, "IDF logarithm base: e, 10 or 2")
      ->envname("RANKVSM_LOG_BASE");
  add_output_options(*vectorize, opt);

  auto* sim = app.add_subcommand("sim", "Similarity of two documents");
  sim->add_option("vectors", opt.stage_input, "vectors.json from vectorize")->required();
  sim->add_option("doc_a", opt.doc_a)->required();
  sim->add_option("doc_b", opt.doc_b)->required();
  sim->add_option("--measure", opt.measure, "cs, srcc, pcc or all");
  add_rank_options(*sim, opt);
  add_format_options(*sim, opt);

  auto* matrix = app.add_subcommand("matrix", "Pairwise matrices as CSV and JSON, plus scatter data");
  matrix->add_option("vectors", opt.stage_input)->required();
  add_rank_options(*matrix, opt);
  add_format_options(*matrix, opt);
  add_output_options(*matrix, opt);
  add_thread_options(*matrix, opt);

  auto* compare = app.add_subcommand("compare", "Per-pair table of CS, SRCC and PCC");
  compare->add_option("vectors", opt.stage_input)->required();
  compare->add_option("--pairs", opt.pairs, "Pairs as 'a,b;c,d' (default: all pairs)");
  compare->add_option("--pairs-file", opt.pairs_file, "File with one 'a,b' pair per line");
  add_rank_options(*compare, opt);
  add_format_options(*compare, opt);
  add_thread_options(*compare, opt);

  auto* scatter = app.add_subcommand("scatter", "One (cs, srcc, pcc) point per document pair");
  scatter->add_option("vectors", opt.stage_input)->required();
  add_rank_options(*scatter, opt);
  add_format_options(*scatter, opt);
  add_thread_options(*scatter, opt);

  auto* rank_scatter = app.add_subcommand("rank-scatter", "Per-term ranks of two documents");
  rank_scatter->add_option("vectors", opt.stage_input)->required();
  rank_scatter->add_option("doc_a", opt.doc_a)->required();
  rank_scatter->add_option("doc_b", opt.doc_b)->required();
  add_rank_options(*rank_scatter, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  auto& run = opt.run;
  run.log_base = rankvsm::parse_log_base(opt.log_base);
  run.tie_policy = rankvsm::parse_tie_policy(opt.tie_policy);

  if (ingest->parsed()) {
    // Config file first; flags given on the command line win.
    if (!opt.config_file.empty()) {
      const bool lowercase = run.lowercase;
      const std::size_t min_token_len = run.min_token_len;
      rankvsm::cli::apply_pipeline_config(run, rankvsm::read_pipeline_config(opt.config_file));
      if (lower->count() > 0) run.lowercase = lowercase;
      if (min_len->count() > 0) run.min_token_len = min_token_len;
    }
    if (stop->count() > 0) run.stopwords_path = stopwords;
    if (pretok->count() > 0) run.mode = rankvsm::cli::InputMode::kPretokenized;
    // A single file can only be a pre-tokenized corpus.
    std::error_code ec;
    if (std::filesystem::is_regular_file(run.input, ec)) run.mode = rankvsm::cli::InputMode::kPretokenized;
    std::cout << rankvsm::cli::cmd_ingest(run).string() << '\n';
  } else if (vectorize->parsed()) {
    std::cout << rankvsm::cli::cmd_vectorize(opt.stage_input, run).string() << '\n';
  } else if (sim->parsed()) {
    std::optional<rankvsm::Measure> measure;
    if (opt.measure != "all") measure = rankvsm::parse_measure(opt.measure);
    rankvsm::cli::cmd_sim(opt.stage_input, opt.doc_a, opt.doc_b, measure, run, std::cout);
  } else if (matrix->parsed()) {
    for (const auto& path : rankvsm::cli::cmd_matrix(opt.stage_input, run)) {
      std::cout << path.string() << '\n';
    }
  } else if (compare->parsed()) {
    std::vector<rankvsm::DocPair> pairs = rankvsm::parse_pair_list(opt.pairs);
    if (!opt.pairs_file.empty()) {
      std::ifstream in(opt.pairs_file);
      if (!in) throw rankvsm::Error(rankvsm::ErrorCode::kIo, "cannot open '" + opt.pairs_file + "'");
      std::ostringstream text;
      text << in.rdbuf();
      const auto more = rankvsm::parse_pair_list(text.str());
      pairs.insert(pairs.end(), more.begin(), more.end());
    }
    rankvsm::cli::cmd_compare(opt.stage_input, pairs, run, std::cout);
  } else if (scatter->parsed()) {
    rankvsm::cli::cmd_scatter(opt.stage_input, run, std::cout);
  } else if (rank_scatter->parsed()) {
    rankvsm::cli::cmd_rank_scatter(opt.stage_input, opt.doc_a, opt.doc_b, run, std::cout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const rankvsm::Error& e) {
    std::cerr << "rankvsm: error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "rankvsm: error: " << e.what() << '\n';
    return 1;
  }
}
