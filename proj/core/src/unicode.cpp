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

#include "kavram/unicode.hpp"

namespace kavram {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

}  // namespace

std::size_t utf8_decode(std::string_view s, std::size_t pos, char32_t& cp) {
  if (pos >= s.size()) {
    cp = kReplacement;
    return 0;
  }
  const unsigned char b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    cp = b0;
    return 1;
  }
  std::size_t len = 0;
  char32_t value = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    value = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    value = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    value = b0 & 0x07;
  } else {
    cp = kReplacement;
    return 1;
  }
  if (pos + len > s.size()) {
    cp = kReplacement;
    return 1;
  }
  for (std::size_t i = 1; i < len; ++i) {
    const unsigned char b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) {
      cp = kReplacement;
      return 1;
    }
    value = (value << 6) | (b & 0x3F);
  }
  // Reject overlong encodings and surrogates.
  if ((len == 2 && value < 0x80) || (len == 3 && value < 0x800) ||
      (len == 4 && value < 0x10000) || (value >= 0xD800 && value <= 0xDFFF) ||
      value > 0x10FFFF) {
    cp = kReplacement;
    return 1;
  }
  cp = value;
  return len;
}

void utf8_append(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::vector<char32_t> utf8_decode_all(std::string_view s) {
  std::vector<char32_t> cps;
  cps.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    char32_t cp;
    pos += utf8_decode(s, pos, cp);
    cps.push_back(cp);
  }
  return cps;
}

std::size_t utf8_length(std::string_view s) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    char32_t cp;
    pos += utf8_decode(s, pos, cp);
    ++n;
  }
  return n;
}

char32_t to_lower_turkish(char32_t cp) {
  // The two Turkish-specific mappings come first; the generic Latin rules
  // below would get them wrong.
  if (cp == U'I') return 0x0131;   // I -> i-dotless
  if (cp == 0x0130) return U'i';   // I-dotted -> i
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  // Latin-1 supplement, skipping the multiplication sign.
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  // Latin Extended-A comes in upper/lower pairs.
  if (cp >= 0x0100 && cp <= 0x0137 && (cp % 2) == 0) return cp + 1;
  if (cp >= 0x0139 && cp <= 0x0148 && (cp % 2) == 1) return cp + 1;
  if (cp >= 0x014A && cp <= 0x0177 && (cp % 2) == 0) return cp + 1;
  if (cp == 0x0178) return 0x00FF;  // Y-diaeresis
  if (cp == 0x0179 || cp == 0x017B || cp == 0x017D) return cp + 1;
  return cp;
}

bool is_apostrophe(char32_t cp) {
  return cp == U'\'' || cp == 0x2019;
}

bool is_word_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'0' && cp <= U'9') || (cp >= U'A' && cp <= U'Z') ||
           (cp >= U'a' && cp <= U'z') || cp == U'\'';
  }
  if (cp == 0x2019) return true;  // curly apostrophe
  // C1 controls plus the Latin-1 punctuation/symbol run.
  if (cp >= 0x80 && cp <= 0xBF) return false;
  if (cp == 0xD7 || cp == 0xF7) return false;
  // General punctuation (dashes, quotes, ellipsis).
  if (cp >= 0x2000 && cp <= 0x206F) return false;
  // CJK punctuation, just in case it shows up in scraped text.
  if (cp >= 0x3000 && cp <= 0x303F) return false;
  if (cp == kReplacement) return false;
  return true;
}

}  // namespace kavram
