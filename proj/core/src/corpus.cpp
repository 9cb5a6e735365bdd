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

#include "kavram/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "kavram/errors.hpp"

namespace kavram {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed while reading: " + path.string());
  return std::move(buffer).str();
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return s.substr(b, e - b);
}

std::vector<RawDocument> load_from_paths(const std::vector<fs::path>& paths) {
  std::vector<RawDocument> docs;
  docs.reserve(paths.size());
  std::set<std::string> seen;
  for (const auto& path : paths) {
    RawDocument doc;
    doc.id = path.stem().string();
    if (!seen.insert(doc.id).second) {
      throw Error("duplicate document id '" + doc.id + "' (from " +
                  path.string() + ")");
    }
    doc.text = read_file(path);
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace

std::vector<RawDocument> load_corpus(const fs::path& path) {
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) {
                return a.filename().string() < b.filename().string();
              });
    return load_from_paths(files);
  }

  if (!fs::is_regular_file(path, ec)) {
    throw IoError("corpus path is neither a directory nor a file: " +
                  path.string());
  }

  // Manifest: one document path per line, resolved against the manifest.
  const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus manifest: " + path.string());
  std::vector<fs::path> files;
  std::string line;
  while (std::getline(in, line)) {
    const std::string entry = trim(line);
    if (entry.empty() || entry[0] == '#') continue;
    fs::path doc_path(entry);
    if (doc_path.is_relative()) doc_path = base / doc_path;
    files.push_back(doc_path);
  }
  return load_from_paths(files);
}

}  // namespace kavram
