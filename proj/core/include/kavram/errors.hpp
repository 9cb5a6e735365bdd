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

#ifndef KAVRAM_ERRORS_HPP
#define KAVRAM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kavram {

// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data (dictionary XML, cache files, result files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

// A lookup for a headword or document id that does not exist.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

// Filesystem or subprocess failures.
class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid run configuration (bad flag values, inconsistent options).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace kavram

#endif  // KAVRAM_ERRORS_HPP
