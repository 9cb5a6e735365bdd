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

#include <utility>

#include "kavram/dictionary.hpp"
#include "kavram/unicode.hpp"

namespace kavram {

namespace {

// NFC-style composition for the combining marks that occur in Turkish text
// (and the handful of Latin neighbors that share them). Returns 0 when the
// pair does not compose.
char32_t compose(char32_t base, char32_t mark) {
  switch (mark) {
    case 0x0302:  // circumflex
      switch (base) {
        case U'a': return 0x00E2; case U'A': return 0x00C2;
        case U'e': return 0x00EA; case U'E': return 0x00CA;
        case U'i': return 0x00EE; case U'I': return 0x00CE;
        case U'o': return 0x00F4; case U'O': return 0x00D4;
        case U'u': return 0x00FB; case U'U': return 0x00DB;
      }
      break;
    case 0x0306:  // breve
      switch (base) {
        case U'g': return 0x011F; case U'G': return 0x011E;
        case U'a': return 0x0103; case U'A': return 0x0102;
      }
      break;
    case 0x0308:  // diaeresis
      switch (base) {
        case U'o': return 0x00F6; case U'O': return 0x00D6;
        case U'u': return 0x00FC; case U'U': return 0x00DC;
        case U'e': return 0x00EB; case U'E': return 0x00CB;
        case U'i': return 0x00EF; case U'I': return 0x00CF;
        case U'a': return 0x00E4; case U'A': return 0x00C4;
      }
      break;
    case 0x0327:  // cedilla
      switch (base) {
        case U'c': return 0x00E7; case U'C': return 0x00C7;
        case U's': return 0x015F; case U'S': return 0x015E;
      }
      break;
    case 0x0307:  // dot above
      if (base == U'I') return 0x0130;
      if (base == U'i') return U'i';  // soft-dotted, mark is redundant
      break;
    default:
      break;
  }
  return 0;
}

bool is_space_cp(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\f' || cp == U'\v' || cp == 0x00A0;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  struct Cp {
    char32_t cp;
    std::size_t offset;
    std::size_t len;
  };
  std::vector<Cp> run;
  std::size_t pos = 0;

  auto flush = [&]() {
    if (run.empty()) return;
    std::size_t first = 0;
    std::size_t last = run.size();
    while (first < last && is_apostrophe(run[first].cp)) ++first;
    while (last > first && is_apostrophe(run[last - 1].cp)) --last;
    if (first < last) {
      const std::size_t begin = run[first].offset;
      const std::size_t end = run[last - 1].offset + run[last - 1].len;
      Token tok;
      tok.surface = std::string(text.substr(begin, end - begin));
      tok.position = tokens.size();
      tok.begin = begin;
      tok.end = end;
      tokens.push_back(std::move(tok));
    }
    run.clear();
  };

  while (pos < text.size()) {
    char32_t cp;
    const std::size_t len = utf8_decode(text, pos, cp);
    if (is_word_char(cp)) {
      run.push_back({cp, pos, len});
    } else {
      flush();
    }
    pos += len;
  }
  flush();
  return tokens;
}

std::string normalize(std::string_view surface) {
  const std::vector<char32_t> raw = utf8_decode_all(surface);

  // Compose combining marks, then lowercase.
  std::vector<char32_t> cps;
  cps.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    char32_t cur = raw[i];
    while (i + 1 < raw.size()) {
      const char32_t composed = compose(cur, raw[i + 1]);
      if (composed == 0) break;
      cur = composed;
      ++i;
    }
    if (cur == 0x2019) cur = U'\'';
    cps.push_back(to_lower_turkish(cur));
  }

  // Collapse whitespace runs, trim surrounding whitespace and apostrophes.
  std::size_t first = 0;
  std::size_t last = cps.size();
  while (first < last && (is_space_cp(cps[first]) || cps[first] == U'\'')) ++first;
  while (last > first && (is_space_cp(cps[last - 1]) || cps[last - 1] == U'\'')) --last;

  std::string out;
  out.reserve(surface.size());
  bool pending_space = false;
  for (std::size_t i = first; i < last; ++i) {
    if (is_space_cp(cps[i])) {
      pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    utf8_append(cps[i], out);
  }
  return out;
}

std::string strip_apostrophe_suffix(std::string_view normalized) {
  std::string out;
  out.reserve(normalized.size());
  std::size_t word_start = 0;
  auto emit_word = [&](std::string_view word) {
    const std::size_t apo = word.find('\'');
    // An apostrophe at position 0 would leave nothing; keep the word as is.
    if (apo != std::string_view::npos && apo > 0) word = word.substr(0, apo);
    if (!out.empty()) out.push_back(' ');
    out.append(word);
  };
  for (std::size_t i = 0; i <= normalized.size(); ++i) {
    if (i == normalized.size() || normalized[i] == ' ') {
      if (i > word_start) emit_word(normalized.substr(word_start, i - word_start));
      word_start = i + 1;
    }
  }
  return out;
}

std::string prepare_for_analysis(std::string_view surface) {
  return strip_apostrophe_suffix(normalize(surface));
}

DocumentNouns extract_document_nouns(std::string_view text, std::string doc_id,
                                     const MorphAnalyzer& analyzer,
                                     const Lexicon& lexicon) {
  DocumentNouns doc;
  doc.doc_id = std::move(doc_id);

  const std::vector<Token> tokens = tokenize(text);
  std::vector<std::string> prepared(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    prepared[i] = prepare_for_analysis(tokens[i].surface);
  }

  auto emit = [&](const std::string& lemma, std::size_t position) {
    doc.nouns.push_back({lemma, position});
    ++doc.freq[lemma];
  };

  std::size_t i = 0;
  while (i < tokens.size()) {
    // Multi-word headwords are matched as contiguous token sequences,
    // longest first, and consume their tokens.
    bool matched = false;
    if (const auto* compounds = lexicon.compounds_for(prepared[i])) {
      for (const auto& compound : *compounds) {
        const std::size_t n = compound.words.size();
        if (i + n > tokens.size()) continue;
        bool equal = true;
        for (std::size_t j = 0; j < n; ++j) {
          if (prepared[i + j] != compound.words[j]) {
            equal = false;
            break;
          }
        }
        if (!equal || !compound.entry->is_noun) continue;
        if (!lexicon.is_stop_word(compound.entry->headword)) {
          emit(compound.entry->headword, tokens[i].position);
        }
        i += n;
        matched = true;
        break;
      }
    }
    if (matched) continue;

    if (!prepared[i].empty()) {
      const std::vector<Analysis> analyses = analyzer.analyze(prepared[i]);
      if (!analyses.empty()) {
        const Analysis& top = analyses.front();
        if (top.pos == Pos::Noun && !top.lemma.empty() &&
            !lexicon.is_stop_word(top.lemma)) {
          emit(top.lemma, tokens[i].position);
        }
      }
    }
    ++i;
  }
  return doc;
}

}  // namespace kavram
