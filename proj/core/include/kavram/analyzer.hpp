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

#ifndef KAVRAM_ANALYZER_HPP
#define KAVRAM_ANALYZER_HPP

#include <cstddef>

#include "kavram/dictionary.hpp"
#include "kavram/textpipeline.hpp"

namespace kavram {

// Lexicon-backed longest-prefix analyzer. Needs no external tools: trailing
// characters are stripped one by one as a crude suffix model and the longest
// headword prefix wins. An exact headword match scores confidence 1.0;
// shorter prefixes score matched-length / surface-length. Prefixes shorter
// than `min_stem` code points are only accepted as exact matches. When
// nothing matches, the surface itself comes back with pos = Other.
class BaselineAnalyzer : public MorphAnalyzer {
 public:
  explicit BaselineAnalyzer(const Lexicon& lexicon, std::size_t min_stem = 2)
      : lexicon_(lexicon), min_stem_(min_stem) {}

  std::vector<Analysis> analyze(std::string_view surface) const override;

 private:
  const Lexicon& lexicon_;
  std::size_t min_stem_;
};

}  // namespace kavram

#endif  // KAVRAM_ANALYZER_HPP
