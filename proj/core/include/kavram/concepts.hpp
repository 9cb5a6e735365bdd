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

#ifndef KAVRAM_CONCEPTS_HPP
#define KAVRAM_CONCEPTS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kavram/corpus.hpp"
#include "kavram/dictionary.hpp"
#include "kavram/wsd.hpp"

namespace kavram {

enum class Algorithm { Simple, Context };
enum class Weighting { Binary, Frequency };
enum class Scope { PerDocument, WholeCorpus };

struct AlgorithmConfig {
  Algorithm algorithm = Algorithm::Simple;
  int levels = 2;  // hierarchy depth for the simple algorithm: 2, 3 or 4
  Weighting weighting = Weighting::Frequency;
  // Geometric level coefficients. Applied only when levels >= 3; the
  // two-level structure fills without coefficients.
  std::vector<double> level_coefficients = {1.0, 0.5, 0.25, 0.125};
  std::size_t context_half_width = 15;  // 15 left + 15 right = 30-word window
  Scope scope = Scope::PerDocument;

  // Throws ConfigError on out-of-range values.
  void validate() const;
  // Matrix fill weight for a hierarchy level (1-based).
  double level_weight(int level) const;
};

// Sparse noun-by-candidate matrix. Rows are the document's pre-concept
// nouns in first-occurrence order; every row lemma also appears among the
// columns. Cells hold coefficient * row frequency (or the bare coefficient
// under binary weighting); absent cells are zero.
struct ConceptMatrix {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
  std::map<std::pair<std::size_t, std::size_t>, double> cells;

  double cell(std::size_t row, std::size_t col) const;
  std::optional<std::size_t> row_index(std::string_view lemma) const;
  std::optional<std::size_t> col_index(std::string_view lemma) const;
};

// Concepts ordered by score descending, lexicographic ascending on ties.
struct RankedConcepts {
  std::vector<std::pair<std::string, double>> items;

  bool empty() const { return items.empty(); }
  std::size_t size() const { return items.size(); }
};

// The corpus-validated meaning-text noun of a lemma, if any.
struct CompanionChoice {
  std::string lemma;
  std::optional<std::string> companion;
  std::size_t context_count = 0;
};

using CorpusSenses = std::map<std::string, SenseMap>;  // doc_id -> senses
using CompanionMap = std::map<std::string, CompanionChoice>;

// Simple frequency algorithm matrix: per row, the columns are the row
// lemma plus its hierarchy lemmas up to cfg.levels for the sense chosen in
// `senses`. A lemma reachable at several levels takes the weight of the
// closest one. Rows without a lexicon entry (or without a sense) contribute
// only their self-column.
ConceptMatrix build_matrix_simple(const DocumentNouns& doc,
                                  const Lexicon& lexicon,
                                  const SenseMap& senses,
                                  const AlgorithmConfig& cfg);

// Column sums, sorted descending with lexicographic tie-break.
RankedConcepts rank(const ConceptMatrix& matrix);

// Scans every occurrence of every lemma across the corpus, counts context
// nouns that belong to the lemma's chosen meaning, and keeps the most
// frequent one per lemma (ties lexicographic). Lemmas that never qualify a
// context noun get an absent companion.
CompanionMap compute_companions(const std::vector<DocumentNouns>& corpus,
                                const Lexicon& lexicon,
                                const CorpusSenses& senses,
                                const AlgorithmConfig& cfg);

// compute_companions for one lemma.
CompanionChoice select_companion(std::string_view lemma,
                                 const std::vector<DocumentNouns>& corpus,
                                 const Lexicon& lexicon,
                                 const CorpusSenses& senses,
                                 const AlgorithmConfig& cfg);

// Context-and-frequency algorithm matrix: per row at most two columns, the
// lemma itself and its corpus-validated companion.
ConceptMatrix build_matrix_context(const DocumentNouns& doc,
                                   const CompanionMap& companions,
                                   const AlgorithmConfig& cfg);

// Convenience overload that computes companions over `corpus` first.
ConceptMatrix build_matrix_context(const DocumentNouns& doc,
                                   const std::vector<DocumentNouns>& corpus,
                                   const Lexicon& lexicon,
                                   const CorpusSenses& senses,
                                   const AlgorithmConfig& cfg);

// Cell-wise sum. Labels are unioned in first-appearance order of their
// occupied cells; labels that own no cell in any input are dropped.
ConceptMatrix sum_matrices(const std::vector<ConceptMatrix>& matrices);

struct DocumentResult {
  std::string doc_id;
  RankedConcepts concepts;
};

struct MineOptions {
  std::size_t jobs = 1;
  bool collect_senses = false;
  bool collect_matrices = false;
};

struct MiningOutput {
  std::vector<DocumentResult> per_document;      // PerDocument scope
  std::optional<RankedConcepts> corpus_ranking;  // WholeCorpus scope
  CorpusSenses senses;                           // when collect_senses
  std::map<std::string, ConceptMatrix> matrices; // when collect_matrices
};

// Full pipeline: extract nouns, disambiguate, build the matrix per cfg,
// rank, truncate to the top k. Whole-corpus scope sums the per-document
// matrices (key "corpus" in the debug matrices map). Deterministic for any
// jobs count; document order follows the input order.
MiningOutput mine(const std::vector<RawDocument>& docs, const Lexicon& lexicon,
                  const MorphAnalyzer& analyzer, const AlgorithmConfig& cfg,
                  std::size_t k, const MineOptions& options = {});

}  // namespace kavram

#endif  // KAVRAM_CONCEPTS_HPP
