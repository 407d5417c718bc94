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

// Runs the installed binary and checks process exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>

namespace {

const std::string kBinary = LORFLATS_BINARY;
const std::string kData = LORFLATS_TEST_DATA_DIR;

struct Outcome {
  int code;
  std::string output;
};

Outcome run(const std::string& args) {
  const std::string command = kBinary + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string output;
  std::array<char, 4096> buffer{};
  while (fgets(buffer.data(), static_cast<int>(buffer.size()), pipe) != nullptr) {
    output += buffer.data();
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

TEST(CliBinaryTest, Success) {
  const Outcome o = run("charpoly --fano");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.output.find("t^2 - 6*t + 8"), std::string::npos);
}

TEST(CliBinaryTest, Usage) { EXPECT_EQ(run("--no-such-flag").code, 1); }

TEST(CliBinaryTest, InvalidInput) {
  const Outcome o = run("charpoly --matroid " + kData + "/loop_matroid.json");
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.output.find("HasLoops"), std::string::npos);
  EXPECT_EQ(run("certify --uniform 3 3 --directions " + kData + "/u33_not_submodular.json").code,
            2);
}

TEST(CliBinaryTest, CertificationFailure) {
  const Outcome o = run("certify --poset " + kData + "/grid_poset.json --samples 2");
  EXPECT_EQ(o.code, 3);
  EXPECT_NE(o.output.find("verdict: failed"), std::string::npos);
}

TEST(CliBinaryTest, SizeGuard) { EXPECT_EQ(run("chow-verify --uniform 2 17").code, 4); }

}  // namespace
