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
// Binary cache for a fully built lexicon. Layout, all integers little
// endian: the magic "KVLX", one version byte, then the entry table and the
// stop-word set as length-prefixed UTF-8 strings. std::map iteration makes
// the write order deterministic, so equal lexicons serialize to equal bytes.

#include <cstdint>
#include <istream>
#include <ostream>

#include "kavram/dictionary.hpp"
#include "kavram/errors.hpp"

namespace kavram {

namespace {

constexpr char kMagic[4] = {'K', 'V', 'L', 'X'};

void put_u32(std::ostream& out, std::uint32_t value) {
  char bytes[4];
  for (int i = 0; i < 4; ++i) bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  out.write(bytes, 4);
}

void put_str(std::ostream& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint32_t get_u32(std::istream& in) {
  char bytes[4];
  if (!in.read(bytes, 4)) throw IoError("lexicon cache truncated");
  std::uint32_t value = 0;
  for (int i = 0; i < 4; ++i) {
    value |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[i]))
             << (8 * i);
  }
  return value;
}

std::string get_str(std::istream& in) {
  const std::uint32_t size = get_u32(in);
  std::string s(size, '\0');
  if (size > 0 && !in.read(s.data(), size)) {
    throw IoError("lexicon cache truncated");
  }
  return s;
}

}  // namespace

void save_lexicon(const Lexicon& lexicon, std::ostream& out) {
  out.write(kMagic, 4);
  out.put(static_cast<char>(kLexiconCacheVersion));

  put_u32(out, static_cast<std::uint32_t>(lexicon.size()));
  for (const auto& [headword, entry] : lexicon.entries()) {
    put_str(out, entry.headword);
    put_str(out, entry.raw_name);
    put_u32(out, entry.is_noun ? 1u : 0u);
    put_u32(out, static_cast<std::uint32_t>(entry.lexical_class.size()));
    for (const auto& cls : entry.lexical_class) put_str(out, cls);
    put_u32(out, static_cast<std::uint32_t>(entry.meanings.size()));
    for (const auto& meaning : entry.meanings) {
      put_str(out, meaning.text);
      put_u32(out, static_cast<std::uint32_t>(meaning.nouns.size()));
      for (const auto& noun : meaning.nouns) put_str(out, noun);
    }
  }

  put_u32(out, static_cast<std::uint32_t>(lexicon.stop_words().size()));
  for (const auto& word : lexicon.stop_words()) put_str(out, word);

  if (!out) throw IoError("failed to write lexicon cache");
}

Lexicon load_lexicon(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::string_view(magic, 4) != std::string_view(kMagic, 4)) {
    throw IoError("not a lexicon cache file (bad magic)");
  }
  const int version = in.get();
  if (version == std::char_traits<char>::eof()) {
    throw IoError("lexicon cache truncated");
  }
  if (version != kLexiconCacheVersion) {
    throw IoError("unsupported lexicon cache version " + std::to_string(version));
  }

  Lexicon lexicon;
  const std::uint32_t entry_count = get_u32(in);
  for (std::uint32_t i = 0; i < entry_count; ++i) {
    DictionaryEntry entry;
    entry.headword = get_str(in);
    entry.raw_name = get_str(in);
    entry.is_noun = get_u32(in) != 0;
    const std::uint32_t class_count = get_u32(in);
    entry.lexical_class.reserve(class_count);
    for (std::uint32_t c = 0; c < class_count; ++c) {
      entry.lexical_class.push_back(get_str(in));
    }
    const std::uint32_t meaning_count = get_u32(in);
    entry.meanings.reserve(meaning_count);
    for (std::uint32_t m = 0; m < meaning_count; ++m) {
      Meaning meaning;
      meaning.text = get_str(in);
      const std::uint32_t noun_count = get_u32(in);
      meaning.nouns.reserve(noun_count);
      for (std::uint32_t n = 0; n < noun_count; ++n) {
        meaning.nouns.push_back(get_str(in));
      }
      entry.meanings.push_back(std::move(meaning));
    }
    lexicon.add_entry(std::move(entry));
  }

  const std::uint32_t stop_count = get_u32(in);
  std::set<std::string> stop_words;
  for (std::uint32_t i = 0; i < stop_count; ++i) stop_words.insert(get_str(in));
  lexicon.set_stop_words(std::move(stop_words));
  return lexicon;
}

}  // namespace kavram
