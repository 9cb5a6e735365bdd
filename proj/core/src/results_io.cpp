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

#include "kavram/results_io.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kavram/errors.hpp"

namespace kavram {

namespace {

std::string format_score(double score) {
  std::ostringstream out;
  out << std::setprecision(12) << score;
  return std::move(out).str();
}

}  // namespace

void write_results_tsv(const ResultsFile& results, std::ostream& out) {
  for (const auto& doc : results.documents) {
    out << doc.doc_id << '\t' << results.algorithm_id << '\t' << results.k
        << '\t';
    bool first = true;
    for (const auto& [lemma, score] : doc.concepts.items) {
      if (!first) out << ',';
      first = false;
      out << lemma << ':' << format_score(score);
    }
    out << '\n';
  }
}

void write_results_jsonl(const ResultsFile& results, std::ostream& out) {
  for (const auto& doc : results.documents) {
    nlohmann::json record;
    record["doc_id"] = doc.doc_id;
    record["algorithm"] = results.algorithm_id;
    record["k"] = results.k;
    record["concepts"] = nlohmann::json::array();
    for (const auto& [lemma, score] : doc.concepts.items) {
      record["concepts"].push_back({{"lemma", lemma}, {"score", score}});
    }
    out << record.dump() << '\n';
  }
}

ResultsFile read_results_jsonl(std::istream& in) {
  ResultsFile results;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("bad results record: ") + e.what(), line_no);
    }
    try {
      DocumentResult doc;
      doc.doc_id = record.at("doc_id").get<std::string>();
      const std::string algorithm = record.at("algorithm").get<std::string>();
      if (results.documents.empty()) {
        results.algorithm_id = algorithm;
        results.k = record.at("k").get<std::size_t>();
      } else if (algorithm != results.algorithm_id) {
        throw ParseError("mixed algorithm ids in one results file ('" +
                             results.algorithm_id + "' vs '" + algorithm + "')",
                         line_no);
      }
      for (const auto& concept_json : record.at("concepts")) {
        doc.concepts.items.emplace_back(
            concept_json.at("lemma").get<std::string>(),
            concept_json.at("score").get<double>());
      }
      results.documents.push_back(std::move(doc));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad results record: ") + e.what(), line_no);
    }
  }
  return results;
}

}  // namespace kavram
