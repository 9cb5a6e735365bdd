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

#ifndef KAVRAM_CORPUS_HPP
#define KAVRAM_CORPUS_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace kavram {

struct RawDocument {
  std::string id;
  std::string text;
};

// Loads a corpus from either a directory (every regular file, sorted by
// filename) or a manifest file listing one document path per line, '#'
// comments and blank lines skipped, relative paths resolved against the
// manifest's directory. Document order follows the manifest (or the sorted
// directory listing); doc_id is the file stem. Throws IoError on unreadable
// paths and Error on duplicate doc ids.
std::vector<RawDocument> load_corpus(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace kavram

#endif  // KAVRAM_CORPUS_HPP
