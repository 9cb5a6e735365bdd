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

#ifndef KAVRAM_PROCESS_ANALYZER_HPP
#define KAVRAM_PROCESS_ANALYZER_HPP

#include <memory>
#include <mutex>
#include <string>

#include "kavram/textpipeline.hpp"

namespace kavram {

// Adapter that wraps an external morphological analyzer as a child process
// speaking a line protocol: the parent writes one surface form per line,
// the child answers `surface TAB lemma TAB pos` (pos is "noun" or anything
// else, taken as Other). The child must flush after every line.
//
// The command is run through /bin/sh -c. Calls are serialized with a mutex,
// so one instance can be shared across threads.
class ProcessAnalyzer : public MorphAnalyzer {
 public:
  explicit ProcessAnalyzer(std::string command);
  ~ProcessAnalyzer() override;

  ProcessAnalyzer(const ProcessAnalyzer&) = delete;
  ProcessAnalyzer& operator=(const ProcessAnalyzer&) = delete;

  // Throws IoError when the child is gone or answers garbage.
  std::vector<Analysis> analyze(std::string_view surface) const override;

  const std::string& command() const { return command_; }

 private:
  struct Pipe;

  std::string command_;
  std::unique_ptr<Pipe> pipe_;
  mutable std::mutex mutex_;
};

}  // namespace kavram

#endif  // KAVRAM_PROCESS_ANALYZER_HPP
