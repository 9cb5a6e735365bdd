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

#ifndef KAVRAM_WSD_HPP
#define KAVRAM_WSD_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "kavram/dictionary.hpp"
#include "kavram/textpipeline.hpp"

namespace kavram {

// The noun neighborhood of one occurrence: up to `half_width` noun
// positions on each side, center excluded. Context lemmas keep their
// multiplicity.
struct ContextWindow {
  std::string center_lemma;
  std::vector<std::string> context_nouns;
};

// The meaning picked for a lemma in one document.
struct SenseChoice {
  std::string lemma;
  std::size_t meaning_index = 0;
  double score = 0.0;  // normalized overlap of the chosen meaning
};

// Chosen sense per lemma for one document.
using SenseMap = std::map<std::string, SenseChoice>;

// Slices the noun stream around nouns[occurrence_index], truncating at the
// document boundaries. Throws std::out_of_range on a bad index.
ContextWindow build_context(const DocumentNouns& doc,
                            std::size_t occurrence_index,
                            std::size_t half_width = 15);

// Number of window tokens (with multiplicity) whose lemma occurs among the
// meaning's nouns, divided by the count of distinct meaning nouns. Lemmas
// in `stop_words` are ignored on the meaning side. A meaning with no
// (remaining) nouns scores 0.
double common_count(const Meaning& meaning, const ContextWindow& window,
                    const std::set<std::string>& stop_words = {});

// Argmax of the normalized overlap over the entry's meanings. Ties and
// all-zero scores resolve to the lowest meaning index (dictionary order =
// primary sense). Returns nullopt when the lemma has no lexicon entry or
// the entry has no meanings; callers then treat the word as a self-only
// concept candidate.
std::optional<SenseChoice> disambiguate(std::string_view lemma,
                                        const ContextWindow& window,
                                        const Lexicon& lexicon);

// One SenseChoice per distinct in-lexicon lemma of the document, computed
// at the lemma's first occurrence.
SenseMap choose_senses(const DocumentNouns& doc, const Lexicon& lexicon,
                       std::size_t half_width = 15);

}  // namespace kavram

#endif  // KAVRAM_WSD_HPP
