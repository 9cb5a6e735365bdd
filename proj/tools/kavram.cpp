// Copyright 2026 The Kavram Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Command line front end. Three subcommands share a flat config file:
//
//   kavram build-lexicon --dict tdk.xml --out lexdir/
//   kavram mine --dict lexdir/lexicon.klx --corpus docs/ --algorithm simple \
//       --levels 2 --topk 3,5,7,10,15 --out run1/
//   kavram evaluate --results run1/results-simple-l2-freq-k15.jsonl \
//       --gold gold.tsv --out eval1/
//
// Exit codes: 0 success, 2 bad configuration, 3 unreadable or malformed
// input, 4 processing failure.

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kavram/analyzer.hpp"
#include "kavram/concepts.hpp"
#include "kavram/corpus.hpp"
#include "kavram/dictionary.hpp"
#include "kavram/errors.hpp"
#include "kavram/eval.hpp"
#include "kavram/process_analyzer.hpp"
#include "kavram/results_io.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInput = 3;
constexpr int kExitProcessing = 4;

// Distinguishes unusable input files from unusable configuration when
// mapping exceptions at the top level.
struct InputError : kavram::Error {
  using Error::Error;
};

void write_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw kavram::IoError("cannot open for writing: " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw kavram::IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw kavram::IoError("cannot move " + tmp.string() + " into place: " +
                          path.string());
  }
}

void ensure_output_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw kavram::ConfigError("cannot create output directory: " + dir.string());
  }
}

bool is_lexicon_cache(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  char magic[4] = {};
  return in.read(magic, 4) && std::string_view(magic, 4) == "KVLX";
}

struct AnalyzerHandle {
  std::unique_ptr<kavram::MorphAnalyzer> owned;
  const kavram::MorphAnalyzer* ptr = nullptr;
};

// `baseline` needs the lexicon; `exec:CMD` wraps an external process.
AnalyzerHandle make_analyzer(const std::string& selector,
                             const kavram::Lexicon& lexicon) {
  AnalyzerHandle handle;
  if (selector == "baseline") {
    handle.owned = std::make_unique<kavram::BaselineAnalyzer>(lexicon);
  } else if (selector.rfind("exec:", 0) == 0) {
    const std::string command = selector.substr(5);
    if (command.empty()) {
      throw kavram::ConfigError("--analyzer exec: needs a command");
    }
    handle.owned = std::make_unique<kavram::ProcessAnalyzer>(command);
  } else {
    throw kavram::ConfigError("unknown analyzer '" + selector +
                              "' (use baseline or exec:CMD)");
  }
  handle.ptr = handle.owned.get();
  return handle;
}

// Loads either a binary cache (single path) or one or more dictionary XML
// files; XML sources get meaning nouns and stop words derived here.
kavram::Lexicon load_dictionary(const std::vector<std::string>& dict_paths,
                                const std::string& analyzer_selector,
                                double stopword_fraction, bool strict,
                                std::vector<std::string>* warnings) {
  if (dict_paths.empty()) {
    throw kavram::ConfigError("at least one --dict is required");
  }
  for (const auto& path : dict_paths) {
    if (!fs::exists(path)) {
      throw InputError("dictionary path does not exist: " + path);
    }
  }

  bool any_cache = false;
  for (const auto& path : dict_paths) any_cache |= is_lexicon_cache(path);
  if (any_cache) {
    if (dict_paths.size() != 1) {
      throw kavram::ConfigError(
          "a lexicon cache cannot be combined with other dictionaries");
    }
    std::ifstream in(dict_paths.front(), std::ios::binary);
    return kavram::load_lexicon(in);
  }

  kavram::ParseOptions options;
  options.mode = strict ? kavram::ParseMode::Strict : kavram::ParseMode::Lenient;
  std::vector<kavram::Lexicon> parts;
  for (const auto& path : dict_paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open dictionary: " + path);
    try {
      auto parsed = kavram::parse_dictionary(in, options);
      if (warnings != nullptr) {
        for (auto& w : parsed.warnings) warnings->push_back(path + ": " + w);
      }
      parts.push_back(std::move(parsed.lexicon));
    } catch (const kavram::ParseError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  kavram::Lexicon lexicon = parts.size() == 1
                                ? std::move(parts.front())
                                : kavram::merge_lexicons(std::move(parts));

  const AnalyzerHandle analyzer = make_analyzer(analyzer_selector, lexicon);
  auto noun_warnings = kavram::populate_meaning_nouns(lexicon, *analyzer.ptr);
  if (warnings != nullptr) {
    warnings->insert(warnings->end(), noun_warnings.begin(), noun_warnings.end());
  }
  kavram::derive_stop_words(lexicon, stopword_fraction);
  return lexicon;
}

// Everything the flags can set, one struct per run for provenance.
struct Options {
  std::vector<std::string> dict;
  std::string corpus;
  std::string algorithm = "simple";
  int levels = 2;
  std::string weighting = "frequency";
  std::size_t window = 30;
  double stopword_fraction = 0.01;
  std::vector<std::size_t> topk = {3, 5, 7, 10, 15};
  std::string gold;
  std::string mode = "both";
  std::string out;
  std::string analyzer = "baseline";
  std::size_t jobs = 1;
  std::string scope = "document";
  bool strict = false;
  bool dump_senses = false;
  bool dump_matrix = false;
  std::vector<std::string> results;
  std::string corpus_id = "corpus";
};

std::string algorithm_id(const Options& opt) {
  const std::string weight_tag = opt.weighting == "binary" ? "bin" : "freq";
  if (opt.algorithm == "context") return "context-" + weight_tag;
  return "simple-l" + std::to_string(opt.levels) + "-" + weight_tag;
}

kavram::AlgorithmConfig make_config(const Options& opt) {
  kavram::AlgorithmConfig cfg;
  cfg.algorithm = opt.algorithm == "context" ? kavram::Algorithm::Context
                                             : kavram::Algorithm::Simple;
  cfg.levels = opt.levels;
  cfg.weighting = opt.weighting == "binary" ? kavram::Weighting::Binary
                                            : kavram::Weighting::Frequency;
  if (opt.window < 2) {
    throw kavram::ConfigError("--window must be at least 2");
  }
  cfg.context_half_width = opt.window / 2;
  cfg.scope = opt.scope == "corpus" ? kavram::Scope::WholeCorpus
                                    : kavram::Scope::PerDocument;
  cfg.validate();
  return cfg;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& warning : warnings) {
    std::cerr << "[warn] " << warning << '\n';
  }
}

int cmd_build_lexicon(const Options& opt, const std::string& config_snapshot) {
  ensure_output_dir(opt.out);
  std::vector<std::string> warnings;
  const kavram::Lexicon lexicon = load_dictionary(
      opt.dict, opt.analyzer, opt.stopword_fraction, opt.strict, &warnings);
  print_warnings(warnings);

  std::ostringstream cache;
  kavram::save_lexicon(lexicon, cache);
  write_atomic(fs::path(opt.out) / "lexicon.klx", std::move(cache).str());

  std::ostringstream stopwords;
  for (const auto& word : lexicon.stop_words()) stopwords << word << '\n';
  write_atomic(fs::path(opt.out) / "stopwords.txt", std::move(stopwords).str());
  write_atomic(fs::path(opt.out) / "config.cfg", config_snapshot);

  std::size_t noun_entries = lexicon.noun_headwords().size();
  std::cout << "entries: " << lexicon.size() << '\n'
            << "noun entries: " << noun_entries << '\n'
            << "stop words: " << lexicon.stop_words().size() << '\n'
            << "written: " << (fs::path(opt.out) / "lexicon.klx").string()
            << '\n';
  return kExitOk;
}

std::string render_senses_tsv(const kavram::CorpusSenses& senses) {
  std::ostringstream out;
  for (const auto& [doc_id, sense_map] : senses) {
    for (const auto& [lemma, choice] : sense_map) {
      out << doc_id << '\t' << lemma << '\t' << choice.meaning_index << '\t'
          << choice.score << '\n';
    }
  }
  return std::move(out).str();
}

std::string render_matrices_tsv(
    const std::map<std::string, kavram::ConceptMatrix>& matrices) {
  std::ostringstream out;
  for (const auto& [doc_id, matrix] : matrices) {
    for (const auto& [pos, value] : matrix.cells) {
      out << doc_id << '\t' << matrix.rows[pos.first] << '\t'
          << matrix.cols[pos.second] << '\t' << value << '\n';
    }
  }
  return std::move(out).str();
}

int cmd_mine(const Options& opt, const std::string& config_snapshot) {
  ensure_output_dir(opt.out);
  const kavram::AlgorithmConfig cfg = make_config(opt);
  if (opt.topk.empty()) {
    throw kavram::ConfigError("--topk needs at least one window size");
  }

  std::vector<std::string> warnings;
  const kavram::Lexicon lexicon = load_dictionary(
      opt.dict, opt.analyzer, opt.stopword_fraction, opt.strict, &warnings);
  print_warnings(warnings);

  std::vector<kavram::RawDocument> docs;
  try {
    docs = kavram::load_corpus(opt.corpus);
  } catch (const kavram::Error& e) {
    throw InputError(e.what());
  }
  if (docs.empty()) {
    throw InputError("corpus is empty: " + opt.corpus);
  }

  const AnalyzerHandle analyzer = make_analyzer(opt.analyzer, lexicon);
  const std::string alg_id = algorithm_id(opt);
  std::cerr << "[mine] " << docs.size() << " documents, lexicon "
            << lexicon.size() << " entries, algorithm " << alg_id << ", jobs "
            << opt.jobs << '\n';

  // One pass at the largest window; smaller k files are truncations of it.
  const std::size_t max_k = *std::max_element(opt.topk.begin(), opt.topk.end());
  kavram::MineOptions mine_options;
  mine_options.jobs = opt.jobs;
  mine_options.collect_senses = opt.dump_senses;
  mine_options.collect_matrices = opt.dump_matrix;
  kavram::MiningOutput output =
      kavram::mine(docs, lexicon, *analyzer.ptr, cfg, max_k, mine_options);

  std::vector<kavram::DocumentResult> full;
  if (cfg.scope == kavram::Scope::WholeCorpus) {
    kavram::DocumentResult corpus_result;
    corpus_result.doc_id = "corpus";
    corpus_result.concepts = *output.corpus_ranking;
    full.push_back(std::move(corpus_result));
  } else {
    full = std::move(output.per_document);
  }

  for (const std::size_t k : opt.topk) {
    kavram::ResultsFile results;
    results.algorithm_id = alg_id;
    results.k = k;
    for (const auto& doc_result : full) {
      kavram::DocumentResult truncated;
      truncated.doc_id = doc_result.doc_id;
      truncated.concepts.items.assign(
          doc_result.concepts.items.begin(),
          doc_result.concepts.items.begin() +
              std::min<std::size_t>(k, doc_result.concepts.items.size()));
      results.documents.push_back(std::move(truncated));
    }
    const std::string stem = "results-" + alg_id + "-k" + std::to_string(k);
    std::ostringstream tsv;
    kavram::write_results_tsv(results, tsv);
    write_atomic(fs::path(opt.out) / (stem + ".tsv"), std::move(tsv).str());
    std::ostringstream jsonl;
    kavram::write_results_jsonl(results, jsonl);
    write_atomic(fs::path(opt.out) / (stem + ".jsonl"), std::move(jsonl).str());
  }

  if (opt.dump_senses) {
    write_atomic(fs::path(opt.out) / "senses.tsv",
                 render_senses_tsv(output.senses));
  }
  if (opt.dump_matrix) {
    write_atomic(fs::path(opt.out) / "matrices.tsv",
                 render_matrices_tsv(output.matrices));
  }
  write_atomic(fs::path(opt.out) / "config.cfg", config_snapshot);

  std::cerr << "[mine] wrote " << opt.topk.size() * 2 << " result files to "
            << opt.out << '\n';
  return kExitOk;
}

int cmd_evaluate(const Options& opt, const std::string& config_snapshot) {
  if (opt.results.empty()) {
    throw kavram::ConfigError("at least one --results file is required");
  }
  if (opt.gold.empty()) {
    throw kavram::ConfigError("--gold is required");
  }

  std::ifstream gold_in(opt.gold);
  if (!gold_in) throw InputError("cannot open gold file: " + opt.gold);
  kavram::GoldAnnotations gold;
  try {
    gold = kavram::load_gold(gold_in);
  } catch (const kavram::ParseError& e) {
    throw InputError(opt.gold + ": " + e.what());
  }

  std::vector<kavram::EvalMode> modes;
  if (opt.mode == "topk") {
    modes = {kavram::EvalMode::TopKVsTopK};
  } else if (opt.mode == "all-gold") {
    modes = {kavram::EvalMode::TopKVsAllGold};
  } else {
    modes = {kavram::EvalMode::TopKVsTopK, kavram::EvalMode::TopKVsAllGold};
  }

  kavram::EvaluationReport report;
  for (const auto& results_path : opt.results) {
    std::ifstream in(results_path);
    if (!in) throw InputError("cannot open results file: " + results_path);
    kavram::ResultsFile results;
    try {
      results = kavram::read_results_jsonl(in);
    } catch (const kavram::ParseError& e) {
      throw InputError(results_path + ": " + e.what());
    }
    try {
      kavram::merge_report(
          report, kavram::evaluate(opt.corpus_id, results.algorithm_id,
                                   results.documents, gold, opt.topk, modes));
    } catch (const kavram::Error& e) {
      // No document overlap between results and gold is a data problem,
      // not an internal failure.
      throw InputError(results_path + ": " + e.what());
    }
  }
  print_warnings(report.warnings);

  std::cout << kavram::render_report_table(report);
  if (!opt.out.empty()) {
    ensure_output_dir(opt.out);
    std::ostringstream tsv;
    kavram::write_report_tsv(report, tsv);
    write_atomic(fs::path(opt.out) / "report.tsv", std::move(tsv).str());
    std::ostringstream json;
    kavram::write_report_json(report, json);
    write_atomic(fs::path(opt.out) / "report.json", std::move(json).str());
    write_atomic(fs::path(opt.out) / "config.cfg", config_snapshot);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dictionary-driven concept mining for Turkish text"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a config file");
  app.get_config_formatter_base()->comment('#');

  Options opt;

  CLI::App* build = app.add_subcommand(
      "build-lexicon", "Parse dictionary XML into a reusable lexicon cache");
  build->add_option("--dict", opt.dict, "Dictionary XML file (repeatable)")
      ->required();
  build->add_option("--out", opt.out, "Output directory")->required();
  build->add_option("--stopword-fraction", opt.stopword_fraction,
                    "Fraction of distinct meaning-text lemmas made stop words")
      ->check(CLI::Range(1e-9, 1.0));
  build->add_option("--analyzer", opt.analyzer,
                    "Morphological analyzer: baseline or exec:CMD");
  build->add_flag("--strict", opt.strict,
                  "Reject entries without a usable name instead of skipping");

  CLI::App* mine = app.add_subcommand(
      "mine", "Mine concepts from a corpus using a dictionary or cache");
  mine->add_option("--dict", opt.dict,
                   "Dictionary XML (repeatable) or one lexicon cache")
      ->required();
  mine->add_option("--corpus", opt.corpus,
                   "Corpus directory or manifest file")
      ->required();
  mine->add_option("--algorithm", opt.algorithm, "simple or context")
      ->check(CLI::IsMember({"simple", "context"}));
  mine->add_option("--levels", opt.levels,
                   "Hierarchy depth for the simple algorithm")
      ->check(CLI::IsMember({2, 3, 4}));
  mine->add_option("--weighting", opt.weighting, "binary or frequency")
      ->check(CLI::IsMember({"binary", "frequency"}));
  mine->add_option("--window", opt.window,
                   "Total context window size (half on each side)");
  mine->add_option("--stopword-fraction", opt.stopword_fraction,
                   "Stop-word fraction when building from XML")
      ->check(CLI::Range(1e-9, 1.0));
  mine->add_option("--topk", opt.topk, "Ranking cutoffs, e.g. 3,5,7,10,15")
      ->delimiter(',');
  mine->add_option("--out", opt.out, "Output directory")->required();
  mine->add_option("--analyzer", opt.analyzer,
                   "Morphological analyzer: baseline or exec:CMD");
  mine->add_option("--jobs", opt.jobs, "Worker threads across documents")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  mine->add_option("--scope", opt.scope,
                   "document (rank per document) or corpus (one ranking)")
      ->check(CLI::IsMember({"document", "corpus"}));
  mine->add_flag("--strict", opt.strict, "Strict dictionary parsing");
  mine->add_flag("--dump-senses", opt.dump_senses,
                 "Write chosen senses to senses.tsv");
  mine->add_flag("--dump-matrix", opt.dump_matrix,
                 "Write concept matrices to matrices.tsv");

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Score mining results against gold annotations");
  evaluate->add_option("--results", opt.results,
                       "Results .jsonl file (repeatable)")
      ->required();
  evaluate->add_option("--gold", opt.gold, "Gold annotations TSV")->required();
  evaluate->add_option("--mode", opt.mode, "topk, all-gold or both")
      ->check(CLI::IsMember({"topk", "all-gold", "both"}));
  evaluate->add_option("--topk", opt.topk, "Comparison windows")
      ->delimiter(',');
  evaluate->add_option("--out", opt.out, "Output directory (optional)");
  evaluate->add_option("--corpus-id", opt.corpus_id,
                       "Corpus label used in reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  // The snapshot reproduces this exact run: defaults included, flags folded.
  const std::string config_snapshot = app.config_to_str(true, true);

  try {
    if (build->parsed()) return cmd_build_lexicon(opt, config_snapshot);
    if (mine->parsed()) return cmd_mine(opt, config_snapshot);
    if (evaluate->parsed()) return cmd_evaluate(opt, config_snapshot);
    std::cerr << "error: no subcommand given\n";
    return kExitConfig;
  } catch (const kavram::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const kavram::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const kavram::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const kavram::NotFoundError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitProcessing;
  }
}
