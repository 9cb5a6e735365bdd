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

#ifndef KAVRAM_UNICODE_HPP
#define KAVRAM_UNICODE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Small UTF-8 / Turkish-aware character utilities. This is deliberately not
// a full Unicode implementation: it covers the Latin repertoire used by
// Turkish dictionary and corpus text, which is all the pipeline needs.

namespace kavram {

// Decodes the code point starting at byte offset `pos`. Returns the number
// of bytes consumed and stores the code point in `cp`. Invalid sequences
// consume one byte and yield U+FFFD.
std::size_t utf8_decode(std::string_view s, std::size_t pos, char32_t& cp);

void utf8_append(char32_t cp, std::string& out);

// Code points of `s` in order (invalid bytes become U+FFFD).
std::vector<char32_t> utf8_decode_all(std::string_view s);

std::size_t utf8_length(std::string_view s);

// Turkish-correct lowercasing: I -> i-dotless, I-dotted -> i, plus the usual
// ASCII, Latin-1 and Latin Extended-A case pairs. Unknown code points pass
// through unchanged.
char32_t to_lower_turkish(char32_t cp);

// True for code points that belong inside a token: letters, digits and
// apostrophes. Non-ASCII code points are treated as letters except for the
// common punctuation and symbol blocks.
bool is_word_char(char32_t cp);

bool is_apostrophe(char32_t cp);

}  // namespace kavram

#endif  // KAVRAM_UNICODE_HPP
