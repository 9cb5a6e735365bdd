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

#include "kavram/analyzer.hpp"

#include <vector>

#include "kavram/unicode.hpp"

namespace kavram {

std::vector<Analysis> BaselineAnalyzer::analyze(std::string_view surface) const {
  std::vector<Analysis> out;
  if (surface.empty()) return out;

  // Byte offsets of code-point boundaries; prefixes are cut only there so a
  // multi-byte character is never split.
  std::vector<std::size_t> boundaries;
  std::size_t pos = 0;
  while (pos < surface.size()) {
    boundaries.push_back(pos);
    char32_t cp = 0;
    pos += utf8_decode(surface, pos, cp);
  }
  boundaries.push_back(surface.size());
  const std::size_t total_cps = boundaries.size() - 1;

  for (std::size_t cps = total_cps; cps >= 1; --cps) {
    const std::string_view prefix = surface.substr(0, boundaries[cps]);
    const bool exact = cps == total_cps;
    if (!exact && cps < min_stem_) break;
    const DictionaryEntry* entry = lexicon_.find(prefix);
    if (entry == nullptr) continue;
    Analysis a;
    a.lemma = entry->headword;
    a.pos = entry->is_noun ? Pos::Noun : Pos::Other;
    a.confidence = exact ? 1.0
                         : static_cast<double>(cps) /
                               static_cast<double>(total_cps);
    out.push_back(std::move(a));
    break;
  }

  if (out.empty()) {
    Analysis fallback;
    fallback.lemma = std::string(surface);
    fallback.pos = Pos::Other;
    fallback.confidence = 0.0;
    out.push_back(std::move(fallback));
  }
  return out;
}

}  // namespace kavram
