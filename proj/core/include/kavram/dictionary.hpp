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

#ifndef KAVRAM_DICTIONARY_HPP
#define KAVRAM_DICTIONARY_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kavram/textpipeline.hpp"

namespace kavram {

// One sense of a dictionary entry. `nouns` holds the normalized noun lemmas
// of the definition prose in text order, duplicates preserved. Stop words
// stay in here; they are filtered out at scoring time, not at storage time.
struct Meaning {
  std::string text;
  std::vector<std::string> nouns;
};

struct DictionaryEntry {
  std::string headword;                     // normalized
  std::string raw_name;                     // as written in the source XML
  std::vector<std::string> lexical_class;   // parse order, duplicates dropped
  std::vector<Meaning> meanings;            // XML document order
  bool is_noun = false;

  bool has_class(std::string_view label) const;
};

enum class ParseMode { Lenient, Strict };

struct ParseOptions {
  ParseMode mode = ParseMode::Lenient;
  // Class labels that mark an entry as a noun, compared after normalize().
  std::vector<std::string> noun_labels = {"isim", "noun"};
};

// Immutable store of dictionary entries keyed by normalized headword.
// add_entry/merge_entry/set_stop_words form the build surface; once a
// lexicon reaches the mining pipeline it is treated as const and can be
// shared freely across threads.
class Lexicon {
 public:
  using EntryMap = std::map<std::string, DictionaryEntry>;

  // A multi-word headword, indexed by its first word for matching in
  // running text.
  struct Compound {
    std::vector<std::string> words;
    const DictionaryEntry* entry;
  };

  // Throws Error when the headword is already present.
  void add_entry(DictionaryEntry entry);
  // Folds a duplicate headword into the existing entry: meanings appended,
  // class labels unioned. Returns true when a fold happened.
  bool merge_entry(DictionaryEntry entry);
  void set_stop_words(std::set<std::string> words);

  const DictionaryEntry* find(std::string_view normalized_headword) const;
  const EntryMap& entries() const { return entries_; }
  const std::set<std::string>& stop_words() const { return stop_words_; }
  const std::set<std::string>& noun_headwords() const { return noun_headwords_; }
  bool is_stop_word(std::string_view lemma) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Compounds whose first word equals `first_word`, longest first.
  const std::vector<Compound>* compounds_for(std::string_view first_word) const;

  // The meaning's nouns with stop words removed: the view every similarity
  // and scoring formula consumes.
  std::vector<std::string> scoring_nouns(const Meaning& meaning) const;

 private:
  friend std::vector<std::string> populate_meaning_nouns(
      Lexicon& lexicon, const MorphAnalyzer& analyzer);

  void index_entry(const DictionaryEntry& stored);

  EntryMap entries_;
  std::set<std::string> stop_words_;
  std::set<std::string> noun_headwords_;
  std::map<std::string, std::vector<Compound>> compounds_;
};

struct ParseResult {
  Lexicon lexicon;
  std::vector<std::string> warnings;
};

// Parses dictionary XML (elements: entry, name, lex_class, meaning,
// meaning_text; everything else ignored; tag values equal to "undefined"
// are treated as absent). Meaning nouns and stop words are not populated
// here. Throws ParseError with a line number on malformed XML; in strict
// mode a missing or empty <name> is an error, in lenient mode the entry is
// skipped with a warning. Duplicate headwords within one source are folded
// with a warning.
ParseResult parse_dictionary(std::istream& xml_source,
                             const ParseOptions& options = {});

// Rejects duplicate headwords across sources with Error. Stop words are not
// carried over; derive them on the merged lexicon.
Lexicon merge_lexicons(std::vector<Lexicon> sources);

// Fills meaning.nouns for every meaning of `entry` by running the meaning
// text through the token pipeline and keeping noun analyses. A token the
// analyzer fails on is skipped; the returned strings describe such skips.
std::vector<std::string> extract_meaning_nouns(DictionaryEntry& entry,
                                               const MorphAnalyzer& analyzer);

// extract_meaning_nouns over every entry in the lexicon.
std::vector<std::string> populate_meaning_nouns(Lexicon& lexicon,
                                                const MorphAnalyzer& analyzer);

// The ceil(fraction * D) most frequent meaning-text lemmas, where D is the
// number of distinct lemmas and frequencies are counted at token level.
// Ties at the cutoff go to the lexicographically smaller lemma. fraction
// must lie in (0, 1].
std::set<std::string> compute_stop_words(const Lexicon& lexicon,
                                         double fraction = 0.01);

// compute_stop_words + set_stop_words.
void derive_stop_words(Lexicon& lexicon, double fraction = 0.01);

// Node of the meaning-noun hierarchy. level 1 is the main word; the
// coefficient follows the geometric scheme 1 / 2^(level-1).
struct HierarchyNode {
  std::string lemma;
  int level = 1;
  double coefficient = 1.0;
  std::vector<HierarchyNode> children;
};

// Expands the hierarchy rooted at `headword`: level 2 holds the scoring
// nouns of the meaning selected by `meaning_index`, deeper levels the
// scoring nouns of each node's first meaning. Lemmas absent from the
// lexicon become leaves; a lemma never repeats on a root-to-leaf path;
// duplicate children of one node are kept once. levels must be 2, 3 or 4.
// Throws NotFoundError when the headword is missing.
HierarchyNode expand_hierarchy(const Lexicon& lexicon,
                               std::string_view headword,
                               std::size_t meaning_index, int levels);

// Versioned binary cache so mining runs can skip the XML pass. Writing the
// same lexicon twice produces byte-identical output.
inline constexpr unsigned char kLexiconCacheVersion = 1;

void save_lexicon(const Lexicon& lexicon, std::ostream& out);
Lexicon load_lexicon(std::istream& in);

}  // namespace kavram

#endif  // KAVRAM_DICTIONARY_HPP
