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

#include "kavram/process_analyzer.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <vector>

#include "kavram/errors.hpp"

namespace kavram {

struct ProcessAnalyzer::Pipe {
  pid_t pid = -1;
  int to_child = -1;    // parent writes surfaces here
  int from_child = -1;  // parent reads analyses here
  std::string buffer;   // bytes read but not yet consumed as a line

  ~Pipe() {
    if (to_child >= 0) ::close(to_child);
    if (from_child >= 0) ::close(from_child);
    if (pid > 0) {
      int status = 0;
      if (::waitpid(pid, &status, WNOHANG) == 0) {
        ::kill(pid, SIGTERM);
        ::waitpid(pid, &status, 0);
      }
    }
  }
};

ProcessAnalyzer::ProcessAnalyzer(std::string command)
    : command_(std::move(command)), pipe_(std::make_unique<Pipe>()) {
  int in_fds[2];   // parent -> child
  int out_fds[2];  // child -> parent
  if (::pipe(in_fds) != 0) {
    throw IoError("pipe() failed: " + std::string(std::strerror(errno)));
  }
  if (::pipe(out_fds) != 0) {
    ::close(in_fds[0]);
    ::close(in_fds[1]);
    throw IoError("pipe() failed: " + std::string(std::strerror(errno)));
  }

  const pid_t pid = ::fork();
  if (pid < 0) {
    for (int fd : {in_fds[0], in_fds[1], out_fds[0], out_fds[1]}) ::close(fd);
    throw IoError("fork() failed: " + std::string(std::strerror(errno)));
  }
  if (pid == 0) {
    ::dup2(in_fds[0], STDIN_FILENO);
    ::dup2(out_fds[1], STDOUT_FILENO);
    for (int fd : {in_fds[0], in_fds[1], out_fds[0], out_fds[1]}) ::close(fd);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  ::close(in_fds[0]);
  ::close(out_fds[1]);
  pipe_->pid = pid;
  pipe_->to_child = in_fds[1];
  pipe_->from_child = out_fds[0];
  // A dead child must surface as IoError on the next write, not kill the
  // parent with SIGPIPE.
  ::signal(SIGPIPE, SIG_IGN);
}

ProcessAnalyzer::~ProcessAnalyzer() = default;

namespace {

void write_all(int fd, std::string_view data) {
  std::size_t written = 0;
  while (written < data.size()) {
    const ssize_t n = ::write(fd, data.data() + written, data.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw IoError("analyzer process is not accepting input: " +
                    std::string(std::strerror(errno)));
    }
    written += static_cast<std::size_t>(n);
  }
}

}  // namespace

std::vector<Analysis> ProcessAnalyzer::analyze(std::string_view surface) const {
  std::lock_guard<std::mutex> lock(mutex_);

  std::string request(surface);
  request.push_back('\n');
  write_all(pipe_->to_child, request);

  // Read up to the next newline.
  std::string line;
  for (;;) {
    const std::size_t nl = pipe_->buffer.find('\n');
    if (nl != std::string::npos) {
      line = pipe_->buffer.substr(0, nl);
      pipe_->buffer.erase(0, nl + 1);
      break;
    }
    char chunk[4096];
    const ssize_t n = ::read(pipe_->from_child, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR) continue;
      throw IoError("reading from analyzer process failed: " +
                    std::string(std::strerror(errno)));
    }
    if (n == 0) {
      throw IoError("analyzer process closed its output (command: " +
                    command_ + ")");
    }
    pipe_->buffer.append(chunk, static_cast<std::size_t>(n));
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const std::size_t tab1 = line.find('\t');
  const std::size_t tab2 = tab1 == std::string::npos
                               ? std::string::npos
                               : line.find('\t', tab1 + 1);
  if (tab1 == std::string::npos || tab2 == std::string::npos) {
    throw IoError("analyzer answered a line without two tabs: '" + line + "'");
  }

  Analysis a;
  a.lemma = line.substr(tab1 + 1, tab2 - tab1 - 1);
  const std::string pos_label = line.substr(tab2 + 1);
  a.pos = pos_label == "noun" ? Pos::Noun : Pos::Other;
  a.confidence = 1.0;
  if (a.lemma.empty()) a.lemma = std::string(surface);
  return {std::move(a)};
}

}  // namespace kavram
