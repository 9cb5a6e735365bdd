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

#ifndef KAVRAM_EVAL_HPP
#define KAVRAM_EVAL_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kavram/concepts.hpp"

namespace kavram {

// Manually determined concepts per document, normalized like mining output.
struct GoldAnnotations {
  std::map<std::string, std::vector<std::string>> docs;
};

// TSV: `doc_id TAB concept1,concept2,...`, '#' starts a comment. Lemmas are
// normalized on load; per-document duplicates are dropped keeping first.
GoldAnnotations load_gold(std::istream& in);

enum class EvalMode { TopKVsTopK, TopKVsAllGold };

std::string to_string(EvalMode mode);

// |top-k(predicted) ∩ top-k(gold)| / k' with k' = min(k, |predicted|).
// Empty prediction: 1.0 against empty gold, else 0.0.
double accuracy_top_k(const RankedConcepts& predicted,
                      const std::vector<std::string>& gold, std::size_t k);

// |top-k(predicted) ∩ gold| / k', same degenerate handling.
double accuracy_vs_all_gold(const RankedConcepts& predicted,
                            const std::vector<std::string>& gold,
                            std::size_t k);

struct EvalRow {
  std::string corpus_id;
  std::string algorithm_id;
  EvalMode mode = EvalMode::TopKVsTopK;
  std::size_t k = 0;
  double accuracy_pct = 0.0;  // macro average over documents, in [0, 100]
  std::size_t documents = 0;
};

struct EvaluationReport {
  std::vector<EvalRow> rows;
  std::vector<std::string> warnings;  // e.g. documents missing from gold
};

inline const std::vector<std::size_t> kDefaultWindows = {3, 5, 7, 10, 15};

// Macro-averaged accuracy per (mode, k) over the documents present in both
// `results` and `gold`. Documents missing from gold are skipped with a
// warning; if nothing overlaps, throws Error.
EvaluationReport evaluate(const std::string& corpus_id,
                          const std::string& algorithm_id,
                          const std::vector<DocumentResult>& results,
                          const GoldAnnotations& gold,
                          const std::vector<std::size_t>& windows = kDefaultWindows,
                          const std::vector<EvalMode>& modes = {
                              EvalMode::TopKVsTopK, EvalMode::TopKVsAllGold});

// Appends rhs rows/warnings to lhs.
void merge_report(EvaluationReport& lhs, const EvaluationReport& rhs);

// Aligned-column table, one block per (corpus, mode), window rows and one
// column per algorithm.
std::string render_report_table(const EvaluationReport& report);

void write_report_tsv(const EvaluationReport& report, std::ostream& out);
void write_report_json(const EvaluationReport& report, std::ostream& out);

}  // namespace kavram

#endif  // KAVRAM_EVAL_HPP
