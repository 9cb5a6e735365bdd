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

#include "kavram/concepts.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "kavram/errors.hpp"

namespace kavram {

void AlgorithmConfig::validate() const {
  if (levels < 2 || levels > 4) {
    throw ConfigError("hierarchy levels must be 2, 3 or 4");
  }
  if (context_half_width == 0) {
    throw ConfigError("context window half-width must be positive");
  }
  if (levels >= 3) {
    if (level_coefficients.size() < static_cast<std::size_t>(levels)) {
      throw ConfigError("need a level coefficient for each of " +
                        std::to_string(levels) + " levels");
    }
    for (std::size_t i = 0; i < level_coefficients.size(); ++i) {
      if (!(level_coefficients[i] > 0.0)) {
        throw ConfigError("level coefficients must be positive");
      }
      if (i > 0 && level_coefficients[i] > level_coefficients[i - 1]) {
        throw ConfigError("level coefficients must be non-increasing");
      }
    }
  }
}

double AlgorithmConfig::level_weight(int level) const {
  // The two-level structure fills without coefficients; every hit counts
  // the same.
  if (levels == 2) return 1.0;
  return level_coefficients.at(static_cast<std::size_t>(level) - 1);
}

double ConceptMatrix::cell(std::size_t row, std::size_t col) const {
  auto it = cells.find({row, col});
  return it == cells.end() ? 0.0 : it->second;
}

namespace {

std::optional<std::size_t> find_index(const std::vector<std::string>& items,
                                      std::string_view lemma) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i] == lemma) return i;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> ConceptMatrix::row_index(std::string_view lemma) const {
  return find_index(rows, lemma);
}

std::optional<std::size_t> ConceptMatrix::col_index(std::string_view lemma) const {
  return find_index(cols, lemma);
}

namespace {

// Distinct document lemmas in first-occurrence order.
std::vector<std::string> row_lemmas(const DocumentNouns& doc) {
  std::vector<std::string> rows;
  std::set<std::string> seen;
  for (const auto& occ : doc.nouns) {
    if (seen.insert(occ.lemma).second) rows.push_back(occ.lemma);
  }
  return rows;
}

// Column index of `lemma`, appending it on first sight.
std::size_t intern_col(ConceptMatrix& matrix,
                       std::map<std::string, std::size_t>& index,
                       const std::string& lemma) {
  auto it = index.find(lemma);
  if (it != index.end()) return it->second;
  const std::size_t col = matrix.cols.size();
  matrix.cols.push_back(lemma);
  index.emplace(lemma, col);
  return col;
}

// Flattens the hierarchy into lemma -> shallowest level. The root itself is
// excluded; its self-column is handled by the caller.
std::map<std::string, int> hierarchy_levels(const HierarchyNode& root) {
  std::map<std::string, int> levels;
  std::deque<const HierarchyNode*> queue;
  for (const auto& child : root.children) queue.push_back(&child);
  while (!queue.empty()) {
    const HierarchyNode* node = queue.front();
    queue.pop_front();
    auto [it, inserted] = levels.emplace(node->lemma, node->level);
    if (!inserted && node->level < it->second) it->second = node->level;
    for (const auto& child : node->children) queue.push_back(&child);
  }
  return levels;
}

double row_weight(const DocumentNouns& doc, const std::string& lemma,
                  const AlgorithmConfig& cfg) {
  if (cfg.weighting == Weighting::Binary) return 1.0;
  auto it = doc.freq.find(lemma);
  return it == doc.freq.end() ? 0.0 : static_cast<double>(it->second);
}

}  // namespace

ConceptMatrix build_matrix_simple(const DocumentNouns& doc,
                                  const Lexicon& lexicon,
                                  const SenseMap& senses,
                                  const AlgorithmConfig& cfg) {
  cfg.validate();
  ConceptMatrix matrix;
  matrix.rows = row_lemmas(doc);
  std::map<std::string, std::size_t> col_index;

  for (std::size_t r = 0; r < matrix.rows.size(); ++r) {
    const std::string& lemma = matrix.rows[r];
    const double base = row_weight(doc, lemma, cfg);

    // Candidate lemmas with the weight of their shallowest level; the row
    // lemma itself is the level-1 candidate.
    std::map<std::string, double> weights;
    weights[lemma] = cfg.level_weight(1);
    const auto sense = senses.find(lemma);
    if (sense != senses.end() && lexicon.find(lemma) != nullptr) {
      const HierarchyNode root = expand_hierarchy(
          lexicon, lemma, sense->second.meaning_index, cfg.levels);
      for (const auto& [candidate, level] : hierarchy_levels(root)) {
        const double weight = cfg.level_weight(level);
        auto [it, inserted] = weights.emplace(candidate, weight);
        if (!inserted && weight > it->second) it->second = weight;
      }
    }

    for (const auto& [candidate, weight] : weights) {
      const std::size_t c = intern_col(matrix, col_index, candidate);
      matrix.cells[{r, c}] += weight * base;
    }
  }
  return matrix;
}

RankedConcepts rank(const ConceptMatrix& matrix) {
  std::vector<double> sums(matrix.cols.size(), 0.0);
  for (const auto& [pos, value] : matrix.cells) sums[pos.second] += value;

  RankedConcepts ranked;
  ranked.items.reserve(matrix.cols.size());
  for (std::size_t c = 0; c < matrix.cols.size(); ++c) {
    ranked.items.emplace_back(matrix.cols[c], sums[c]);
  }
  std::sort(ranked.items.begin(), ranked.items.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
  return ranked;
}

CompanionChoice select_companion(std::string_view lemma,
                                 const std::vector<DocumentNouns>& corpus,
                                 const Lexicon& lexicon,
                                 const CorpusSenses& senses,
                                 const AlgorithmConfig& cfg) {
  CompanionChoice choice;
  choice.lemma = std::string(lemma);

  const DictionaryEntry* entry = lexicon.find(lemma);
  if (entry == nullptr || entry->meanings.empty()) return choice;

  std::map<std::string, std::size_t> counts;
  for (const auto& doc : corpus) {
    const auto doc_senses = senses.find(doc.doc_id);
    if (doc_senses == senses.end()) continue;
    const auto sense = doc_senses->second.find(choice.lemma);
    if (sense == doc_senses->second.end()) continue;
    if (sense->second.meaning_index >= entry->meanings.size()) continue;

    // The meaning nouns this document's sense choice puts in play.
    const std::vector<std::string> nouns =
        lexicon.scoring_nouns(entry->meanings[sense->second.meaning_index]);
    const std::set<std::string> qualifying(nouns.begin(), nouns.end());
    if (qualifying.empty()) continue;

    for (std::size_t i = 0; i < doc.nouns.size(); ++i) {
      if (doc.nouns[i].lemma != choice.lemma) continue;
      const ContextWindow window =
          build_context(doc, i, cfg.context_half_width);
      for (const auto& context_lemma : window.context_nouns) {
        if (qualifying.count(context_lemma) > 0) ++counts[context_lemma];
      }
    }
  }

  for (const auto& [candidate, count] : counts) {
    if (count > choice.context_count) {
      choice.companion = candidate;
      choice.context_count = count;
    }
    // std::map iterates in lexicographic order, so on equal counts the
    // earlier (smaller) candidate sticks.
  }
  return choice;
}

CompanionMap compute_companions(const std::vector<DocumentNouns>& corpus,
                                const Lexicon& lexicon,
                                const CorpusSenses& senses,
                                const AlgorithmConfig& cfg) {
  std::set<std::string> lemmas;
  for (const auto& doc : corpus) {
    for (const auto& occ : doc.nouns) lemmas.insert(occ.lemma);
  }
  CompanionMap companions;
  for (const auto& lemma : lemmas) {
    companions.emplace(lemma,
                       select_companion(lemma, corpus, lexicon, senses, cfg));
  }
  return companions;
}

ConceptMatrix build_matrix_context(const DocumentNouns& doc,
                                   const CompanionMap& companions,
                                   const AlgorithmConfig& cfg) {
  ConceptMatrix matrix;
  matrix.rows = row_lemmas(doc);
  std::map<std::string, std::size_t> col_index;

  for (std::size_t r = 0; r < matrix.rows.size(); ++r) {
    const std::string& lemma = matrix.rows[r];
    const double base = row_weight(doc, lemma, cfg);
    matrix.cells[{r, intern_col(matrix, col_index, lemma)}] += base;

    const auto it = companions.find(lemma);
    if (it == companions.end() || !it->second.companion.has_value()) continue;
    const std::string& companion = *it->second.companion;
    if (companion == lemma) continue;  // self column already filled
    matrix.cells[{r, intern_col(matrix, col_index, companion)}] += base;
  }
  return matrix;
}

ConceptMatrix build_matrix_context(const DocumentNouns& doc,
                                   const std::vector<DocumentNouns>& corpus,
                                   const Lexicon& lexicon,
                                   const CorpusSenses& senses,
                                   const AlgorithmConfig& cfg) {
  return build_matrix_context(
      doc, compute_companions(corpus, lexicon, senses, cfg), cfg);
}

ConceptMatrix sum_matrices(const std::vector<ConceptMatrix>& matrices) {
  ConceptMatrix total;
  std::map<std::string, std::size_t> row_index;
  std::map<std::string, std::size_t> col_index;
  for (const auto& matrix : matrices) {
    for (const auto& [pos, value] : matrix.cells) {
      const std::string& row_lemma = matrix.rows[pos.first];
      const std::string& col_lemma = matrix.cols[pos.second];
      auto row_it = row_index.find(row_lemma);
      if (row_it == row_index.end()) {
        row_it = row_index.emplace(row_lemma, total.rows.size()).first;
        total.rows.push_back(row_lemma);
      }
      const std::size_t c = intern_col(total, col_index, col_lemma);
      total.cells[{row_it->second, c}] += value;
    }
  }
  return total;
}

namespace {

RankedConcepts truncate(RankedConcepts ranked, std::size_t k) {
  if (k > 0 && ranked.items.size() > k) ranked.items.resize(k);
  return ranked;
}

// Runs `work(i)` for every i < count on `jobs` threads. The first exception
// wins and is rethrown on the caller's thread.
void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)>& work) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  const std::size_t worker_count = std::min(jobs, count);
  workers.reserve(worker_count);
  for (std::size_t w = 0; w < worker_count; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          work(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

MiningOutput mine(const std::vector<RawDocument>& docs, const Lexicon& lexicon,
                  const MorphAnalyzer& analyzer, const AlgorithmConfig& cfg,
                  std::size_t k, const MineOptions& options) {
  cfg.validate();
  const std::size_t jobs = std::max<std::size_t>(options.jobs, 1);

  // Stage 1: noun extraction and sense choice, one slot per document so the
  // output order never depends on thread scheduling.
  std::vector<DocumentNouns> nouns(docs.size());
  std::vector<SenseMap> senses(docs.size());
  parallel_for(docs.size(), jobs, [&](std::size_t i) {
    nouns[i] = extract_document_nouns(docs[i].text, docs[i].id, analyzer, lexicon);
    senses[i] = choose_senses(nouns[i], lexicon, cfg.context_half_width);
  });

  CorpusSenses corpus_senses;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    corpus_senses[docs[i].id] = senses[i];
  }

  // Stage 2 (context algorithm only): companions need the whole corpus.
  CompanionMap companions;
  if (cfg.algorithm == Algorithm::Context) {
    companions = compute_companions(nouns, lexicon, corpus_senses, cfg);
  }

  // Stage 3: one matrix per document.
  std::vector<ConceptMatrix> matrices(docs.size());
  parallel_for(docs.size(), jobs, [&](std::size_t i) {
    if (cfg.algorithm == Algorithm::Simple) {
      matrices[i] = build_matrix_simple(nouns[i], lexicon, senses[i], cfg);
    } else {
      matrices[i] = build_matrix_context(nouns[i], companions, cfg);
    }
  });

  MiningOutput output;
  if (options.collect_senses) output.senses = corpus_senses;

  if (cfg.scope == Scope::WholeCorpus) {
    const ConceptMatrix total = sum_matrices(matrices);
    output.corpus_ranking = truncate(rank(total), k);
    if (options.collect_matrices) output.matrices.emplace("corpus", total);
  } else {
    output.per_document.reserve(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) {
      DocumentResult result;
      result.doc_id = docs[i].id;
      result.concepts = truncate(rank(matrices[i]), k);
      output.per_document.push_back(std::move(result));
    }
  }
  if (options.collect_matrices) {
    for (std::size_t i = 0; i < docs.size(); ++i) {
      output.matrices.emplace(docs[i].id, std::move(matrices[i]));
    }
  }
  return output;
}

}  // namespace kavram
