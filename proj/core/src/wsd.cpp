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

#include "kavram/wsd.hpp"

#include <algorithm>
#include <stdexcept>

namespace kavram {

ContextWindow build_context(const DocumentNouns& doc,
                            std::size_t occurrence_index,
                            std::size_t half_width) {
  if (occurrence_index >= doc.nouns.size()) {
    throw std::out_of_range("occurrence index " +
                            std::to_string(occurrence_index) +
                            " out of range for document '" + doc.doc_id + "'");
  }
  ContextWindow window;
  window.center_lemma = doc.nouns[occurrence_index].lemma;

  const std::size_t begin =
      occurrence_index >= half_width ? occurrence_index - half_width : 0;
  const std::size_t end =
      std::min(doc.nouns.size(), occurrence_index + half_width + 1);
  window.context_nouns.reserve(end - begin - 1);
  for (std::size_t i = begin; i < end; ++i) {
    if (i == occurrence_index) continue;
    window.context_nouns.push_back(doc.nouns[i].lemma);
  }
  return window;
}

double common_count(const Meaning& meaning, const ContextWindow& window,
                    const std::set<std::string>& stop_words) {
  std::set<std::string> meaning_nouns;
  for (const auto& noun : meaning.nouns) {
    if (stop_words.count(noun) == 0) meaning_nouns.insert(noun);
  }
  if (meaning_nouns.empty()) return 0.0;

  std::size_t overlap = 0;
  for (const auto& lemma : window.context_nouns) {
    if (meaning_nouns.count(lemma) > 0) ++overlap;
  }
  return static_cast<double>(overlap) /
         static_cast<double>(meaning_nouns.size());
}

std::optional<SenseChoice> disambiguate(std::string_view lemma,
                                        const ContextWindow& window,
                                        const Lexicon& lexicon) {
  const DictionaryEntry* entry = lexicon.find(lemma);
  if (entry == nullptr || entry->meanings.empty()) return std::nullopt;

  SenseChoice choice;
  choice.lemma = std::string(lemma);
  choice.meaning_index = 0;
  choice.score = common_count(entry->meanings[0], window, lexicon.stop_words());
  for (std::size_t i = 1; i < entry->meanings.size(); ++i) {
    const double score =
        common_count(entry->meanings[i], window, lexicon.stop_words());
    if (score > choice.score) {
      choice.score = score;
      choice.meaning_index = i;
    }
  }
  return choice;
}

SenseMap choose_senses(const DocumentNouns& doc, const Lexicon& lexicon,
                       std::size_t half_width) {
  SenseMap senses;
  for (std::size_t i = 0; i < doc.nouns.size(); ++i) {
    const std::string& lemma = doc.nouns[i].lemma;
    if (senses.count(lemma) > 0) continue;  // first occurrence decides
    const ContextWindow window = build_context(doc, i, half_width);
    if (auto choice = disambiguate(lemma, window, lexicon)) {
      senses.emplace(lemma, std::move(*choice));
    }
  }
  return senses;
}

}  // namespace kavram
