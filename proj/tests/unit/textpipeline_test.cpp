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

#include "kavram/textpipeline.hpp"

#include <random>
#include <regex>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "kavram/analyzer.hpp"
#include "kavram/dictionary.hpp"

using namespace kavram;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& token : tokens) out.push_back(token.surface);
  return out;
}

}  // namespace

TEST_CASE("tokenize splits on punctuation and keeps order") {
  CHECK(surfaces(tokenize("Kediler evde.")) ==
        std::vector<std::string>{"Kediler", "evde"});
  CHECK(tokenize("").empty());
  CHECK(surfaces(tokenize("bir, iki; üç!")) ==
        std::vector<std::string>{"bir", "iki", "üç"});
}

TEST_CASE("tokenize records positions and byte spans") {
  const std::string text = "ev araba ev";
  const auto tokens = tokenize(text);
  REQUIRE(tokens.size() == 3);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    CHECK(tokens[i].position == i);
    CHECK(text.substr(tokens[i].begin, tokens[i].end - tokens[i].begin) ==
          tokens[i].surface);
  }
  CHECK(tokens[0].position < tokens[1].position);
  CHECK(tokens[1].position < tokens[2].position);
}

TEST_CASE("tokenize keeps word-internal apostrophes but trims edges") {
  const auto tokens = tokenize("Ankara'da 'quoted'");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].surface == "Ankara'da");
  CHECK(tokens[1].surface == "quoted");
}

TEST_CASE("tokenize matches a reference regex splitter on synthetic text") {
  // The reference splitter works on the same definition of a token: maximal
  // runs of letters, digits and apostrophes. Restricting the sample to
  // ASCII keeps std::regex honest (it is byte-based).
  std::mt19937 rng(20260815);
  const std::string alphabet = "abc d.ef, gh'i; 12!";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int round = 0; round < 50; ++round) {
    std::string text;
    for (int i = 0; i < 120; ++i) text.push_back(alphabet[pick(rng)]);

    std::vector<std::string> expected;
    static const std::regex word("[A-Za-z0-9']+");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), word);
         it != std::sregex_iterator(); ++it) {
      std::string w = it->str();
      // The tokenizer trims apostrophes that have no letter on one side.
      while (!w.empty() && w.front() == '\'') w.erase(w.begin());
      while (!w.empty() && w.back() == '\'') w.pop_back();
      if (!w.empty()) expected.push_back(w);
    }
    CHECK(surfaces(tokenize(text)) == expected);
  }
}

TEST_CASE("normalize applies Turkish casing") {
  CHECK(normalize("İstanbul") == "istanbul");
  CHECK(normalize("ISPARTA") == "ısparta");
  CHECK(normalize("FUTBOL") == "futbol");
  CHECK(normalize("Çağrı") == "çağrı");
}

TEST_CASE("normalize composes combining marks and folds quote variants") {
  // "e" + combining breve is the decomposed spelling of ğ's base form.
  CHECK(normalize("g\xCC\x86") == "ğ");           // g + U+0306
  CHECK(normalize("s\xCC\xA7") == "ş");           // s + U+0327
  CHECK(normalize("O\xCC\x88z") == "öz");         // O + U+0308
  CHECK(normalize("don\xE2\x80\x99t") == "don't");  // U+2019 -> '
}

TEST_CASE("normalize collapses whitespace and trims edges") {
  CHECK(normalize("  iki   kelime \t") == "iki kelime");
  CHECK(normalize("'alıntı'") == "alıntı");
}

TEST_CASE("normalize is idempotent on random-cased words") {
  std::mt19937 rng(97);
  const std::vector<std::string> stems = {"İstanbul", "ISPARTA", "Çiçek",
                                          "göğüs",    "ŞEHİR",   "ağaç",
                                          "Üzüm",     "ördek"};
  std::uniform_int_distribution<std::size_t> pick(0, stems.size() - 1);
  for (int i = 0; i < 1000; ++i) {
    std::string word = stems[pick(rng)] + (i % 3 == 0 ? "'de" : "");
    const std::string once = normalize(word);
    CHECK(normalize(once) == once);
  }
}

TEST_CASE("strip_apostrophe_suffix clips proper-noun suffixes") {
  CHECK(strip_apostrophe_suffix("ankara'da") == "ankara");
  CHECK(strip_apostrophe_suffix("izmir'den") == "izmir");
  CHECK(strip_apostrophe_suffix("kedi") == "kedi");
  // Only the first apostrophe cuts; nothing to clip means identity.
  CHECK(strip_apostrophe_suffix("o'na'da") == "o");
}

TEST_CASE("prepare_for_analysis chains normalize and suffix clipping") {
  CHECK(prepare_for_analysis("Ankara'da") == "ankara");
  CHECK(prepare_for_analysis("İstanbul") == "istanbul");
}

TEST_CASE("baseline analyzer lemmatizes by longest headword prefix") {
  Lexicon lexicon;
  lexicon.add_entry(fixtures::noun_entry("kedi", {{}}));
  lexicon.add_entry(fixtures::noun_entry("kedicik", {{}}));
  BaselineAnalyzer analyzer(lexicon);

  SUBCASE("inflected form finds the stem") {
    const auto analyses = analyzer.analyze("kediler");
    REQUIRE(analyses.size() == 1);
    CHECK(analyses[0].lemma == "kedi");
    CHECK(analyses[0].pos == Pos::Noun);
    CHECK(analyses[0].confidence > 0.0);
    CHECK(analyses[0].confidence < 1.0);
  }
  SUBCASE("exact headword wins with full confidence") {
    const auto analyses = analyzer.analyze("kedi");
    REQUIRE(analyses.size() == 1);
    CHECK(analyses[0].lemma == "kedi");
    CHECK(analyses[0].confidence == 1.0);
  }
  SUBCASE("longest prefix beats shorter one") {
    const auto analyses = analyzer.analyze("kedicikler");
    REQUIRE(analyses.size() == 1);
    CHECK(analyses[0].lemma == "kedicik");
  }
  SUBCASE("miss falls back to the surface as non-noun") {
    const auto analyses = analyzer.analyze("masa");
    REQUIRE(analyses.size() == 1);
    CHECK(analyses[0].lemma == "masa");
    CHECK(analyses[0].pos == Pos::Other);
  }
}

TEST_CASE("baseline analyzer handles a hand list of inflected forms") {
  Lexicon lexicon;
  for (const auto* stem : {"kedi", "ev", "araba", "futbol", "okul", "göz"}) {
    lexicon.add_entry(fixtures::noun_entry(stem, {{}}));
  }
  BaselineAnalyzer analyzer(lexicon);
  const std::vector<std::pair<std::string, std::string>> forms = {
      {"kediler", "kedi"},     {"kedilerin", "kedi"}, {"kediye", "kedi"},
      {"evde", "ev"},          {"evler", "ev"},       {"evimizden", "ev"},
      {"arabalar", "araba"},   {"arabamız", "araba"}, {"futbolcu", "futbol"},
      {"futbolda", "futbol"},  {"okullar", "okul"},   {"okuldan", "okul"},
      {"gözler", "göz"},       {"gözlük", "göz"},     {"kedi", "kedi"},
      {"ev", "ev"},            {"araba", "araba"},    {"futbol", "futbol"},
      {"okul", "okul"},        {"göz", "göz"},
  };
  for (const auto& [surface, lemma] : forms) {
    CAPTURE(surface);
    const auto analyses = analyzer.analyze(surface);
    REQUIRE(!analyses.empty());
    CHECK(analyses[0].lemma == lemma);
    CHECK(analyses[0].pos == Pos::Noun);
  }
}

TEST_CASE("baseline analyzer is deterministic") {
  Lexicon lexicon;
  lexicon.add_entry(fixtures::noun_entry("ev", {{}}));
  BaselineAnalyzer analyzer(lexicon);
  for (const auto* word : {"evde", "evler", "yok", ""}) {
    const auto a = analyzer.analyze(word);
    const auto b = analyzer.analyze(word);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].lemma == b[i].lemma);
      CHECK(a[i].pos == b[i].pos);
      CHECK(a[i].confidence == b[i].confidence);
    }
  }
}

TEST_CASE("extract_document_nouns runs the whole pipeline") {
  Lexicon lexicon;
  lexicon.add_entry(fixtures::noun_entry("futbol", {{}}));
  lexicon.add_entry(fixtures::noun_entry("salon", {{}}));
  lexicon.add_entry(fixtures::noun_entry("top", {{}}));
  kavram::DictionaryEntry adj;
  adj.headword = "güzel";
  adj.raw_name = "güzel";
  adj.lexical_class = {"sıfat"};
  lexicon.add_entry(adj);
  lexicon.set_stop_words({"top"});
  BaselineAnalyzer analyzer(lexicon);

  const auto doc = extract_document_nouns(
      "Futbol salonda güzel. Top futbolda.", "d1", analyzer, lexicon);

  // "top" is a stop word, "güzel" is not a noun: 3 noun tokens survive.
  REQUIRE(doc.nouns.size() == 3);
  CHECK(doc.nouns[0].lemma == "futbol");
  CHECK(doc.nouns[0].position == 0);
  CHECK(doc.nouns[1].lemma == "salon");
  CHECK(doc.nouns[1].position == 1);
  CHECK(doc.nouns[2].lemma == "futbol");
  CHECK(doc.nouns[2].position == 4);
  CHECK(doc.freq.at("futbol") == 2);
  CHECK(doc.freq.at("salon") == 1);
  CHECK(doc.freq.count("top") == 0);
}

TEST_CASE("extract_document_nouns counts a repeated noun") {
  Lexicon lexicon;
  lexicon.add_entry(fixtures::noun_entry("futbol", {{}}));
  BaselineAnalyzer analyzer(lexicon);
  std::string text;
  for (int i = 0; i < 10; ++i) text += "futbol ";
  const auto doc = extract_document_nouns(text, "d", analyzer, lexicon);
  CHECK(doc.freq.at("futbol") == 10);
  CHECK(doc.nouns.size() == 10);
}

TEST_CASE("extract_document_nouns freq equals the noun multiset") {
  Lexicon lexicon;
  lexicon.add_entry(fixtures::noun_entry("ev", {{}}));
  lexicon.add_entry(fixtures::noun_entry("araba", {{}}));
  BaselineAnalyzer analyzer(lexicon);
  const auto doc = extract_document_nouns("ev araba evler ev yok", "d",
                                          analyzer, lexicon);
  std::size_t total = 0;
  for (const auto& [lemma, count] : doc.freq) total += count;
  CHECK(total == doc.nouns.size());
  for (std::size_t i = 1; i < doc.nouns.size(); ++i) {
    CHECK(doc.nouns[i - 1].position < doc.nouns[i].position);
  }
}

TEST_CASE("extract_document_nouns matches compound headwords first") {
  Lexicon lexicon;
  lexicon.add_entry(fixtures::noun_entry("devlet", {{}}));
  lexicon.add_entry(fixtures::noun_entry("devlet kuşu", {{}}));
  BaselineAnalyzer analyzer(lexicon);

  const auto doc = extract_document_nouns("devlet kuşu geldi", "d", analyzer,
                                          lexicon);
  REQUIRE(doc.nouns.size() == 1);
  CHECK(doc.nouns[0].lemma == "devlet kuşu");
  CHECK(doc.freq.at("devlet kuşu") == 1);

  // Without the second compound token the single-word entry matches.
  const auto doc2 = extract_document_nouns("devlet geldi", "d2", analyzer,
                                           lexicon);
  REQUIRE(doc2.nouns.size() == 1);
  CHECK(doc2.nouns[0].lemma == "devlet");
}

TEST_CASE("a table-driven analyzer satisfies the same pipeline contract") {
  // Substitutability: the pipeline must not depend on BaselineAnalyzer
  // internals, only on the analyze() contract. This stand-in also covers
  // irregular plural-style mappings a prefix matcher cannot produce.
  struct TableAnalyzer : MorphAnalyzer {
    std::vector<Analysis> analyze(std::string_view surface) const override {
      Analysis a;
      if (surface == "mice") {
        a.lemma = "mouse";
        a.pos = Pos::Noun;
      } else if (surface == "rats") {
        a.lemma = "rat";
        a.pos = Pos::Noun;
      } else {
        a.lemma = std::string(surface);
        a.pos = Pos::Other;
      }
      a.confidence = 1.0;
      return {a};
    }
  };

  Lexicon lexicon;
  TableAnalyzer analyzer;
  const auto doc =
      extract_document_nouns("cats catch rats and mice", "d", analyzer, lexicon);
  REQUIRE(doc.nouns.size() == 2);
  CHECK(doc.nouns[0].lemma == "rat");
  CHECK(doc.nouns[1].lemma == "mouse");
  std::size_t total = 0;
  for (const auto& [lemma, count] : doc.freq) total += count;
  CHECK(total == doc.nouns.size());
}
