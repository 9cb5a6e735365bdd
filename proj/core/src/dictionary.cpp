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

#include "kavram/dictionary.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <utility>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "kavram/errors.hpp"

namespace kavram {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (std::isspace(static_cast<unsigned char>(s[b])) != 0)) ++b;
  while (e > b && (std::isspace(static_cast<unsigned char>(s[e - 1])) != 0)) --e;
  return std::string(s.substr(b, e - b));
}

// Tag values equal to "undefined" mean the tag is absent.
bool is_defined(const std::string& trimmed) {
  return !trimmed.empty() && trimmed != "undefined";
}

std::vector<std::string> split_words(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      if (i > start) out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

bool DictionaryEntry::has_class(std::string_view label) const {
  const std::string wanted = normalize(label);
  for (const auto& cls : lexical_class) {
    if (normalize(cls) == wanted) return true;
  }
  return false;
}

void Lexicon::add_entry(DictionaryEntry entry) {
  if (entry.headword.empty()) {
    throw Error("cannot add a dictionary entry with an empty headword");
  }
  std::string key = entry.headword;
  auto [it, inserted] = entries_.emplace(std::move(key), std::move(entry));
  if (!inserted) {
    throw Error("duplicate headword: " + it->first);
  }
  index_entry(it->second);
}

bool Lexicon::merge_entry(DictionaryEntry entry) {
  auto it = entries_.find(entry.headword);
  if (it == entries_.end()) {
    add_entry(std::move(entry));
    return false;
  }
  DictionaryEntry& existing = it->second;
  for (auto& meaning : entry.meanings) {
    existing.meanings.push_back(std::move(meaning));
  }
  for (const auto& cls : entry.lexical_class) {
    if (std::find(existing.lexical_class.begin(), existing.lexical_class.end(),
                  cls) == existing.lexical_class.end()) {
      existing.lexical_class.push_back(cls);
    }
  }
  if (entry.is_noun && !existing.is_noun) {
    existing.is_noun = true;
    noun_headwords_.insert(existing.headword);
  }
  return true;
}

void Lexicon::set_stop_words(std::set<std::string> words) {
  stop_words_ = std::move(words);
}

const DictionaryEntry* Lexicon::find(std::string_view normalized_headword) const {
  auto it = entries_.find(std::string(normalized_headword));
  return it == entries_.end() ? nullptr : &it->second;
}

bool Lexicon::is_stop_word(std::string_view lemma) const {
  return stop_words_.count(std::string(lemma)) > 0;
}

const std::vector<Lexicon::Compound>* Lexicon::compounds_for(
    std::string_view first_word) const {
  auto it = compounds_.find(std::string(first_word));
  return it == compounds_.end() ? nullptr : &it->second;
}

std::vector<std::string> Lexicon::scoring_nouns(const Meaning& meaning) const {
  std::vector<std::string> out;
  out.reserve(meaning.nouns.size());
  for (const auto& noun : meaning.nouns) {
    if (stop_words_.count(noun) == 0) out.push_back(noun);
  }
  return out;
}

void Lexicon::index_entry(const DictionaryEntry& stored) {
  if (stored.is_noun) noun_headwords_.insert(stored.headword);
  const std::vector<std::string> words = split_words(stored.headword, ' ');
  if (words.size() > 1) {
    auto& bucket = compounds_[words[0]];
    bucket.push_back({words, &stored});
    std::sort(bucket.begin(), bucket.end(),
              [](const Compound& a, const Compound& b) {
                if (a.words.size() != b.words.size()) {
                  return a.words.size() > b.words.size();
                }
                return a.entry->headword < b.entry->headword;
              });
  }
}

namespace {

namespace pt = boost::property_tree;

void parse_entry_node(const pt::ptree& node, std::size_t index,
                      const ParseOptions& options, ParseResult& result) {
  DictionaryEntry entry;

  const auto name_node = node.get_child_optional("name");
  const std::string raw_name = name_node ? name_node->get_value<std::string>() : "";
  const std::string trimmed_name = trim(raw_name);
  if (!name_node || !is_defined(trimmed_name)) {
    const std::string msg =
        "entry #" + std::to_string(index) + " has no usable <name>";
    if (options.mode == ParseMode::Strict) throw ParseError(msg, 0);
    result.warnings.push_back(msg + ", skipped");
    return;
  }
  entry.raw_name = raw_name;
  entry.headword = normalize(trimmed_name);
  if (entry.headword.empty()) {
    const std::string msg = "entry #" + std::to_string(index) +
                            " has a name that normalizes to nothing";
    if (options.mode == ParseMode::Strict) throw ParseError(msg, 0);
    result.warnings.push_back(msg + ", skipped");
    return;
  }

  const std::string lex_class =
      trim(node.get<std::string>("lex_class", std::string()));
  if (is_defined(lex_class)) {
    for (const auto& piece : split_words(lex_class, ',')) {
      const std::string label = trim(piece);
      if (label.empty()) continue;
      if (std::find(entry.lexical_class.begin(), entry.lexical_class.end(),
                    label) == entry.lexical_class.end()) {
        entry.lexical_class.push_back(label);
      }
    }
  }
  for (const auto& label : options.noun_labels) {
    if (entry.has_class(label)) {
      entry.is_noun = true;
      break;
    }
  }

  for (const auto& [child_name, child] : node) {
    if (child_name != "meaning") continue;
    const std::string text =
        trim(child.get<std::string>("meaning_text", std::string()));
    if (!is_defined(text)) {
      result.warnings.push_back("entry '" + entry.headword +
                                "' has a meaning without text, skipped");
      continue;
    }
    Meaning meaning;
    meaning.text = text;
    entry.meanings.push_back(std::move(meaning));
  }

  const std::string headword = entry.headword;
  if (result.lexicon.merge_entry(std::move(entry))) {
    result.warnings.push_back("duplicate headword folded: " + headword);
  }
}

}  // namespace

ParseResult parse_dictionary(std::istream& xml_source,
                             const ParseOptions& options) {
  pt::ptree tree;
  try {
    pt::read_xml(xml_source, tree, pt::xml_parser::no_comments);
  } catch (const pt::xml_parser_error& e) {
    throw ParseError("malformed dictionary XML: " + e.message(), e.line());
  }

  ParseResult result;
  std::size_t index = 0;
  for (const auto& [root_name, root] : tree) {
    if (root_name.rfind("<?", 0) == 0 || root_name == "<xmlcomment>") continue;
    if (root_name == "entry") {
      parse_entry_node(root, index++, options, result);
      continue;
    }
    for (const auto& [child_name, child] : root) {
      if (child_name == "entry") parse_entry_node(child, index++, options, result);
    }
  }
  return result;
}

Lexicon merge_lexicons(std::vector<Lexicon> sources) {
  Lexicon merged;
  for (auto& source : sources) {
    for (const auto& [headword, entry] : source.entries()) {
      merged.add_entry(entry);  // throws on duplicates across sources
    }
  }
  return merged;
}

std::vector<std::string> extract_meaning_nouns(DictionaryEntry& entry,
                                               const MorphAnalyzer& analyzer) {
  std::vector<std::string> warnings;
  for (Meaning& meaning : entry.meanings) {
    meaning.nouns.clear();
    for (const Token& token : tokenize(meaning.text)) {
      const std::string prepared = prepare_for_analysis(token.surface);
      if (prepared.empty()) continue;
      std::vector<Analysis> analyses;
      try {
        analyses = analyzer.analyze(prepared);
      } catch (const std::exception& e) {
        warnings.push_back("analyzer failed on '" + prepared + "' in entry '" +
                           entry.headword + "': " + e.what());
        continue;
      }
      if (analyses.empty()) {
        warnings.push_back("analyzer returned nothing for '" + prepared +
                           "' in entry '" + entry.headword + "'");
        continue;
      }
      const Analysis& top = analyses.front();
      if (top.pos == Pos::Noun && !top.lemma.empty()) {
        meaning.nouns.push_back(top.lemma);
      }
    }
  }
  return warnings;
}

std::vector<std::string> populate_meaning_nouns(Lexicon& lexicon,
                                                const MorphAnalyzer& analyzer) {
  std::vector<std::string> warnings;
  for (auto& [headword, entry] : lexicon.entries_) {
    auto entry_warnings = extract_meaning_nouns(entry, analyzer);
    warnings.insert(warnings.end(),
                    std::make_move_iterator(entry_warnings.begin()),
                    std::make_move_iterator(entry_warnings.end()));
  }
  return warnings;
}

std::set<std::string> compute_stop_words(const Lexicon& lexicon,
                                         double fraction) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw ConfigError("stop-word fraction must lie in (0, 1]");
  }
  std::map<std::string, std::size_t> counts;
  for (const auto& [headword, entry] : lexicon.entries()) {
    for (const auto& meaning : entry.meanings) {
      for (const auto& noun : meaning.nouns) ++counts[noun];
    }
  }
  const std::size_t distinct = counts.size();
  if (distinct == 0) return {};

  // ceil(fraction * D); the epsilon flattens binary-representation noise
  // (0.01 * 200 must give 2, not 3).
  std::size_t cutoff = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(distinct) - 1e-9));
  cutoff = std::min(cutoff, distinct);
  if (cutoff == 0) cutoff = 1;

  std::vector<std::pair<std::string, std::size_t>> ordered(counts.begin(),
                                                           counts.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  std::set<std::string> stop_words;
  for (std::size_t i = 0; i < cutoff; ++i) stop_words.insert(ordered[i].first);
  return stop_words;
}

void derive_stop_words(Lexicon& lexicon, double fraction) {
  lexicon.set_stop_words(compute_stop_words(lexicon, fraction));
}

namespace {

void expand_node(HierarchyNode& node, const Lexicon& lexicon,
                 const Meaning* meaning, int levels,
                 std::set<std::string>& path) {
  if (node.level >= levels || meaning == nullptr) return;
  std::set<std::string> seen;
  for (const auto& lemma : lexicon.scoring_nouns(*meaning)) {
    if (path.count(lemma) > 0 || !seen.insert(lemma).second) continue;
    HierarchyNode child;
    child.lemma = lemma;
    child.level = node.level + 1;
    child.coefficient = 1.0 / static_cast<double>(1u << (child.level - 1));
    const DictionaryEntry* entry = lexicon.find(lemma);
    if (entry != nullptr && !entry->meanings.empty() && child.level < levels) {
      path.insert(lemma);
      // Levels below the root always use the first meaning; only the root
      // carries a disambiguated sense.
      expand_node(child, lexicon, &entry->meanings.front(), levels, path);
      path.erase(lemma);
    }
    node.children.push_back(std::move(child));
  }
}

}  // namespace

HierarchyNode expand_hierarchy(const Lexicon& lexicon,
                               std::string_view headword,
                               std::size_t meaning_index, int levels) {
  if (levels < 2 || levels > 4) {
    throw ConfigError("hierarchy levels must be 2, 3 or 4");
  }
  const std::string hw = normalize(headword);
  const DictionaryEntry* entry = lexicon.find(hw);
  if (entry == nullptr) {
    throw NotFoundError("headword not in lexicon: " + hw);
  }
  if (meaning_index >= entry->meanings.size()) {
    throw Error("meaning index " + std::to_string(meaning_index) +
                " out of range for '" + hw + "'");
  }
  HierarchyNode root;
  root.lemma = hw;
  root.level = 1;
  root.coefficient = 1.0;
  std::set<std::string> path{hw};
  expand_node(root, lexicon, &entry->meanings[meaning_index], levels, path);
  return root;
}

}  // namespace kavram
