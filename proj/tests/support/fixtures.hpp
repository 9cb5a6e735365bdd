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
//
// Shared test fixtures: tiny hand-built lexica, a randomized instance
// generator for oracle cross-checks, and a planted-concept corpus whose
// expected answer is known by construction.

#ifndef KAVRAM_TESTS_FIXTURES_HPP
#define KAVRAM_TESTS_FIXTURES_HPP

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kavram/concepts.hpp"
#include "kavram/corpus.hpp"
#include "kavram/dictionary.hpp"
#include "kavram/wsd.hpp"

namespace fixtures {

// A noun entry whose meanings are given directly as noun-lemma lists; the
// meaning text is synthesized from the nouns since only the nouns matter to
// the scoring code.
inline kavram::DictionaryEntry noun_entry(
    const std::string& headword,
    const std::vector<std::vector<std::string>>& meanings) {
  kavram::DictionaryEntry entry;
  entry.headword = headword;
  entry.raw_name = headword;
  entry.lexical_class = {"isim"};
  entry.is_noun = true;
  for (const auto& nouns : meanings) {
    kavram::Meaning meaning;
    for (const auto& noun : nouns) {
      meaning.text += (meaning.text.empty() ? "" : " ") + noun;
    }
    meaning.nouns = nouns;
    entry.meanings.push_back(std::move(meaning));
  }
  return entry;
}

// Document made of an explicit lemma sequence at consecutive positions.
inline kavram::DocumentNouns make_doc(const std::string& doc_id,
                                      const std::vector<std::string>& lemmas) {
  kavram::DocumentNouns doc;
  doc.doc_id = doc_id;
  for (std::size_t i = 0; i < lemmas.size(); ++i) {
    doc.nouns.push_back({lemmas[i], i});
    ++doc.freq[lemmas[i]];
  }
  return doc;
}

// One randomized oracle-equivalence instance: a small lexicon, a noun
// stream, and a valid sense choice per in-lexicon lemma.
struct RandomInstance {
  kavram::Lexicon lexicon;
  kavram::DocumentNouns doc;
  kavram::SenseMap senses;
};

inline RandomInstance make_random_instance(std::mt19937& rng) {
  static const std::vector<std::string> pool = {
      "alet", "bicim", "cisim", "dal",  "ekin",  "fikir", "gerec",
      "halka", "isik",  "kanit", "liste", "motif", "nesne", "oda"};

  std::uniform_int_distribution<std::size_t> entry_count(1, 10);
  std::uniform_int_distribution<std::size_t> meaning_count(1, 3);
  std::uniform_int_distribution<std::size_t> noun_count(0, 5);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> doc_len(0, 30);
  std::uniform_int_distribution<int> coin(0, 9);

  RandomInstance instance;

  const std::size_t entries = entry_count(rng);
  std::set<std::string> used;
  for (std::size_t e = 0; e < entries; ++e) {
    const std::string headword = pool[pick(rng)];
    if (!used.insert(headword).second) continue;
    std::vector<std::vector<std::string>> meanings;
    const std::size_t m = meaning_count(rng);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::string> nouns;
      const std::size_t n = noun_count(rng);
      for (std::size_t j = 0; j < n; ++j) nouns.push_back(pool[pick(rng)]);
      meanings.push_back(std::move(nouns));
    }
    instance.lexicon.add_entry(noun_entry(headword, meanings));
  }

  // A couple of random stop words, sometimes none.
  std::set<std::string> stops;
  if (coin(rng) < 3) stops.insert(pool[pick(rng)]);
  if (coin(rng) < 2) stops.insert(pool[pick(rng)]);
  instance.lexicon.set_stop_words(stops);

  // Noun stream drawn from the pool, skipping stop words the way the
  // extraction pipeline would have.
  std::vector<std::string> lemmas;
  const std::size_t len = doc_len(rng);
  for (std::size_t i = 0; i < len; ++i) {
    const std::string lemma = pool[pick(rng)];
    if (stops.count(lemma) > 0) continue;
    lemmas.push_back(lemma);
  }
  instance.doc = make_doc("rnd", lemmas);

  for (const auto& lemma : lemmas) {
    if (instance.senses.count(lemma) > 0) continue;
    const kavram::DictionaryEntry* entry = instance.lexicon.find(lemma);
    if (entry == nullptr || entry->meanings.empty()) continue;
    std::uniform_int_distribution<std::size_t> sense_pick(
        0, entry->meanings.size() - 1);
    kavram::SenseChoice choice;
    choice.lemma = lemma;
    choice.meaning_index = sense_pick(rng);
    instance.senses.emplace(lemma, choice);
  }
  return instance;
}

// A corpus where every document's dominant concept is planted by
// construction: member words of a topic all carry the topic concept in
// their meaning texts, and the concept itself shows up in running text so
// context scanning can validate it. The filler noun "sey" saturates every
// meaning text and is the designed stop word.
struct PlantedCorpus {
  std::string dict_xml;
  std::vector<kavram::RawDocument> docs;
  std::map<std::string, std::string> planted;  // doc_id -> concept lemma
};

inline PlantedCorpus make_planted_corpus(std::mt19937& rng,
                                         std::size_t doc_count = 20) {
  const std::vector<std::string> concepts = {"vora", "zeta", "mund", "kilt"};
  const std::map<std::string, std::vector<std::string>> members = {
      {"vora", {"badela", "bodika", "bugela", "bemira"}},
      {"zeta", {"cadela", "codika", "cugela", "cemira"}},
      {"mund", {"dadela", "dodika", "dugela", "demira"}},
      {"kilt", {"fadela", "fodika", "fugela", "femira"}},
  };

  std::ostringstream xml;
  xml << "<dictionary>\n";
  auto emit = [&xml](const std::string& name, const std::string& text) {
    xml << "  <entry>\n    <name>" << name
        << "</name>\n    <lex_class>isim</lex_class>\n"
        << "    <meaning><meaning_text>" << text
        << "</meaning_text></meaning>\n  </entry>\n";
  };
  for (const auto& [topic, topic_members] : members) {
    for (const auto& member : topic_members) emit(member, topic + " sey");
    emit(topic, "sey");
  }
  emit("sey", "sey");
  xml << "</dictionary>\n";

  PlantedCorpus corpus;
  corpus.dict_xml = xml.str();

  std::uniform_int_distribution<std::size_t> reps(3, 6);
  std::uniform_int_distribution<std::size_t> concept_reps(1, 2);
  std::uniform_int_distribution<std::size_t> noise_count(2, 4);
  std::uniform_int_distribution<std::size_t> topic_pick(0, concepts.size() - 1);

  for (std::size_t d = 0; d < doc_count; ++d) {
    const std::string& topic = concepts[d % concepts.size()];
    std::vector<std::string> words;
    for (const auto& member : members.at(topic)) {
      const std::size_t r = reps(rng);
      for (std::size_t i = 0; i < r; ++i) words.push_back(member);
    }
    const std::size_t cr = concept_reps(rng);
    for (std::size_t i = 0; i < cr; ++i) words.push_back(topic);

    // Light cross-topic noise plus non-noun padding the pipeline drops.
    const std::size_t noise = noise_count(rng);
    for (std::size_t i = 0; i < noise; ++i) {
      std::size_t other = topic_pick(rng);
      if (concepts[other] == topic) other = (other + 1) % concepts.size();
      const auto& other_members = members.at(concepts[other]);
      std::uniform_int_distribution<std::size_t> member_pick(
          0, other_members.size() - 1);
      words.push_back(other_members[member_pick(rng)]);
    }
    words.push_back("ve");
    words.push_back("gibi");

    std::shuffle(words.begin(), words.end(), rng);

    kavram::RawDocument doc;
    doc.id = "doc" + std::to_string(d);
    for (const auto& word : words) {
      doc.text += word;
      doc.text += ' ';
    }
    corpus.docs.push_back(std::move(doc));
    corpus.planted["doc" + std::to_string(d)] = topic;
  }
  return corpus;
}

}  // namespace fixtures

#endif  // KAVRAM_TESTS_FIXTURES_HPP
