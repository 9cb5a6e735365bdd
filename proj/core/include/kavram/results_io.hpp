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

#ifndef KAVRAM_RESULTS_IO_HPP
#define KAVRAM_RESULTS_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "kavram/concepts.hpp"

namespace kavram {

// Mining results on disk. One record per document (or a single "corpus"
// record for whole-corpus runs): doc id, algorithm id, the k the ranking
// was truncated to, and the ordered concept/score pairs.

struct ResultsFile {
  std::string algorithm_id;
  std::size_t k = 0;
  std::vector<DocumentResult> documents;
};

// TSV: doc_id TAB algorithm TAB k TAB lemma:score,lemma:score,...
void write_results_tsv(const ResultsFile& results, std::ostream& out);

// JSON lines, one object per document:
//   {"doc_id":...,"algorithm":...,"k":...,"concepts":[{"lemma":...,"score":...},...]}
void write_results_jsonl(const ResultsFile& results, std::ostream& out);

// Parses the JSON-lines form back. Throws ParseError on malformed records
// or mixed algorithm ids.
ResultsFile read_results_jsonl(std::istream& in);

}  // namespace kavram

#endif  // KAVRAM_RESULTS_IO_HPP
