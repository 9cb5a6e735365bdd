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

#ifndef KAVRAM_TEXTPIPELINE_HPP
#define KAVRAM_TEXTPIPELINE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kavram {

class Lexicon;

// A raw token as produced by the tokenizer.
struct Token {
  std::string surface;    // original spelling
  std::size_t position;   // 0-based index in the token stream
  std::size_t begin;      // byte offset into the source text
  std::size_t end;        // one past the last byte
};

enum class Pos { Noun, Other };

// One morphological reading of a surface form.
struct Analysis {
  std::string lemma;
  Pos pos = Pos::Other;
  double confidence = 0.0;  // in [0, 1]
};

// Contract for morphological analyzers. Implementations must be
// deterministic, must return at least one Analysis for every non-empty
// surface, and must be safe for concurrent use.
//
// The pipeline always takes the first (rank-1) analysis. Surfaces arrive
// already normalized and apostrophe-clipped.
class MorphAnalyzer {
 public:
  virtual ~MorphAnalyzer() = default;
  virtual std::vector<Analysis> analyze(std::string_view surface) const = 0;
};

// Splits text into maximal runs of letters, digits and apostrophes.
// Punctuation is dropped; surrounding apostrophes are trimmed off the
// token. Byte spans refer to the input.
std::vector<Token> tokenize(std::string_view text);

// Canonical form used for all lemma and headword comparisons: Turkish
// lowercasing (I -> i-dotless, dotted-I -> i), composition of the combining
// marks that occur in Turkish text, curly apostrophes mapped to ASCII,
// whitespace runs collapsed to single spaces, surrounding apostrophes and
// whitespace trimmed. Idempotent.
std::string normalize(std::string_view surface);

// Drops a Turkish apostrophe-marked suffix: "ankara'da" -> "ankara".
// Input is expected to be normalized; strings without an apostrophe pass
// through unchanged.
std::string strip_apostrophe_suffix(std::string_view normalized);

// normalize() followed by strip_apostrophe_suffix(); the form handed to
// analyzers.
std::string prepare_for_analysis(std::string_view surface);

struct NounOccurrence {
  std::string lemma;
  std::size_t position;  // token position in the source document
};

// The noun skeleton of one document: every non-stop-word noun lemma in
// order, plus per-lemma occurrence counts.
struct DocumentNouns {
  std::string doc_id;
  std::vector<NounOccurrence> nouns;
  std::map<std::string, std::size_t> freq;
};

// Full extraction pipeline: tokenize -> normalize -> analyze -> keep nouns
// -> drop stop words. Multi-word headwords from the lexicon are matched as
// contiguous token sequences and consume their tokens. Positions refer to
// the original token stream.
DocumentNouns extract_document_nouns(std::string_view text, std::string doc_id,
                                     const MorphAnalyzer& analyzer,
                                     const Lexicon& lexicon);

}  // namespace kavram

#endif  // KAVRAM_TEXTPIPELINE_HPP
