// Copyright 2026 The lorflats Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LORFLATS_TOOLS_CLI_COMMANDS_HPP_
#define LORFLATS_TOOLS_CLI_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lorflats::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kFailed = 3,
  kSizeGuard = 4,
};

struct RunConfig {
  std::string command;

  // Exactly one input source.
  std::optional<std::string> matroid_file;
  std::optional<std::string> graphic_file;
  std::optional<std::pair<int, int>> uniform;  // (r, n)
  bool fano = false;
  std::optional<std::string> poset_file;

  // Element lists such as "[0,2]", "0,2" or "[]"; the full interval when unset.
  std::optional<std::pair<std::string, std::string>> interval;

  int samples = 20;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::optional<std::string> eval;  // "alpha", "beta" or a file
  std::optional<std::string> directions_file;
  bool all_intervals = false;
  int max_d = 4;
  std::size_t max_flats = 16;
  int max_degree = 4;
  int jobs = 1;
};

// Runs one command; returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses `args` (without the program name) and runs the command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorflats::cli

#endif  // LORFLATS_TOOLS_CLI_COMMANDS_HPP_
