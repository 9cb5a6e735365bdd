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

#include "kavram/eval.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kavram/errors.hpp"
#include "kavram/textpipeline.hpp"

namespace kavram {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

}  // namespace

GoldAnnotations load_gold(std::istream& in) {
  GoldAnnotations gold;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t tab = stripped.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError("gold line needs `doc_id<TAB>concepts`", line_no);
    }
    const std::string doc_id = trim(stripped.substr(0, tab));
    if (gold.docs.count(doc_id) > 0) {
      throw ParseError("duplicate gold document id '" + doc_id + "'", line_no);
    }
    std::vector<std::string> concepts;
    std::set<std::string> seen;
    std::size_t start = tab + 1;
    for (std::size_t i = start; i <= stripped.size(); ++i) {
      if (i == stripped.size() || stripped[i] == ',') {
        const std::string normalized =
            normalize(trim(stripped.substr(start, i - start)));
        if (!normalized.empty() && seen.insert(normalized).second) {
          concepts.push_back(normalized);
        }
        start = i + 1;
      }
    }
    gold.docs.emplace(doc_id, std::move(concepts));
  }
  return gold;
}

std::string to_string(EvalMode mode) {
  return mode == EvalMode::TopKVsTopK ? "topk" : "all-gold";
}

namespace {

double overlap_accuracy(const RankedConcepts& predicted,
                        const std::vector<std::string>& gold_pool,
                        std::size_t k) {
  const std::size_t effective_k = std::min(k, predicted.size());
  if (effective_k == 0) return gold_pool.empty() ? 1.0 : 0.0;

  const std::set<std::string> gold_set(gold_pool.begin(), gold_pool.end());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < effective_k; ++i) {
    if (gold_set.count(predicted.items[i].first) > 0) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(effective_k);
}

}  // namespace

double accuracy_top_k(const RankedConcepts& predicted,
                      const std::vector<std::string>& gold, std::size_t k) {
  std::vector<std::string> gold_top(
      gold.begin(), gold.begin() + std::min<std::size_t>(k, gold.size()));
  return overlap_accuracy(predicted, gold_top, k);
}

double accuracy_vs_all_gold(const RankedConcepts& predicted,
                            const std::vector<std::string>& gold,
                            std::size_t k) {
  return overlap_accuracy(predicted, gold, k);
}

EvaluationReport evaluate(const std::string& corpus_id,
                          const std::string& algorithm_id,
                          const std::vector<DocumentResult>& results,
                          const GoldAnnotations& gold,
                          const std::vector<std::size_t>& windows,
                          const std::vector<EvalMode>& modes) {
  EvaluationReport report;

  std::vector<const DocumentResult*> matched;
  for (const auto& result : results) {
    if (gold.docs.count(result.doc_id) > 0) {
      matched.push_back(&result);
    } else {
      report.warnings.push_back("document '" + result.doc_id +
                                "' has no gold annotation, skipped");
    }
  }
  if (matched.empty()) {
    throw Error("no overlap between mining results and gold annotations");
  }

  for (const EvalMode mode : modes) {
    for (const std::size_t k : windows) {
      double sum = 0.0;
      for (const DocumentResult* result : matched) {
        const auto& gold_concepts = gold.docs.at(result->doc_id);
        sum += mode == EvalMode::TopKVsTopK
                   ? accuracy_top_k(result->concepts, gold_concepts, k)
                   : accuracy_vs_all_gold(result->concepts, gold_concepts, k);
      }
      EvalRow row;
      row.corpus_id = corpus_id;
      row.algorithm_id = algorithm_id;
      row.mode = mode;
      row.k = k;
      row.documents = matched.size();
      row.accuracy_pct = 100.0 * sum / static_cast<double>(matched.size());
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

void merge_report(EvaluationReport& lhs, const EvaluationReport& rhs) {
  lhs.rows.insert(lhs.rows.end(), rhs.rows.begin(), rhs.rows.end());
  lhs.warnings.insert(lhs.warnings.end(), rhs.warnings.begin(),
                      rhs.warnings.end());
}

std::string render_report_table(const EvaluationReport& report) {
  // Group rows by (corpus, mode); columns are the algorithms in first-seen
  // order, rows the windows in ascending order.
  std::vector<std::pair<std::string, EvalMode>> blocks;
  std::vector<std::string> algorithms;
  for (const auto& row : report.rows) {
    const std::pair<std::string, EvalMode> key{row.corpus_id, row.mode};
    if (std::find(blocks.begin(), blocks.end(), key) == blocks.end()) {
      blocks.push_back(key);
    }
    if (std::find(algorithms.begin(), algorithms.end(), row.algorithm_id) ==
        algorithms.end()) {
      algorithms.push_back(row.algorithm_id);
    }
  }

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  for (const auto& [corpus_id, mode] : blocks) {
    std::set<std::size_t> windows;
    std::map<std::pair<std::size_t, std::string>, double> values;
    std::size_t documents = 0;
    for (const auto& row : report.rows) {
      if (row.corpus_id != corpus_id || row.mode != mode) continue;
      windows.insert(row.k);
      values[{row.k, row.algorithm_id}] = row.accuracy_pct;
      documents = std::max(documents, row.documents);
    }

    out << corpus_id << " / " << to_string(mode) << " (" << documents
        << " documents, accuracy %)\n";
    out << std::setw(8) << std::left << "top-k" << std::right;
    for (const auto& algorithm : algorithms) {
      out << std::setw(std::max<int>(12, static_cast<int>(algorithm.size()) + 2))
          << algorithm;
    }
    out << '\n';
    for (const std::size_t k : windows) {
      out << std::setw(8) << std::left << k << std::right;
      for (const auto& algorithm : algorithms) {
        const int width =
            std::max<int>(12, static_cast<int>(algorithm.size()) + 2);
        const auto it = values.find({k, algorithm});
        if (it == values.end()) {
          out << std::setw(width) << "-";
        } else {
          out << std::setw(width) << it->second;
        }
      }
      out << '\n';
    }
    out << '\n';
  }
  return std::move(out).str();
}

void write_report_tsv(const EvaluationReport& report, std::ostream& out) {
  out << "corpus\talgorithm\tmode\tk\taccuracy_pct\tdocuments\n";
  std::ostringstream fmt;
  for (const auto& row : report.rows) {
    fmt.str({});
    fmt << std::fixed << std::setprecision(4) << row.accuracy_pct;
    out << row.corpus_id << '\t' << row.algorithm_id << '\t'
        << to_string(row.mode) << '\t' << row.k << '\t' << fmt.str() << '\t'
        << row.documents << '\n';
  }
}

void write_report_json(const EvaluationReport& report, std::ostream& out) {
  nlohmann::json doc;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : report.rows) {
    doc["rows"].push_back({{"corpus", row.corpus_id},
                           {"algorithm", row.algorithm_id},
                           {"mode", to_string(row.mode)},
                           {"k", row.k},
                           {"accuracy_pct", row.accuracy_pct},
                           {"documents", row.documents}});
  }
  doc["warnings"] = report.warnings;
  out << doc.dump(2) << '\n';
}

}  // namespace kavram
