// Copyright 2026 The rolecheck Authors.
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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "rolecheck_cli/cli.hpp"

namespace rolecheck {
namespace {

struct GoldenCase {
  std::string file;
  int exit_code = 0;
  std::vector<std::string> args;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.file; }

std::vector<GoldenCase> manifest() {
  std::ifstream in(std::string(ROLECHECK_GOLDEN_DIR) + "/manifest.txt");
  std::vector<GoldenCase> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    GoldenCase c;
    words >> c.file >> c.exit_code;
    for (std::string w; words >> w;) {
      if (w.rfind("DATA", 0) == 0) w = ROLECHECK_TEST_DATA_DIR + w.substr(4);
      c.args.push_back(w);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesCheckedInOutput) {
  const auto& c = GetParam();
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(c.args, out, err);
  EXPECT_EQ(code, c.exit_code) << err.str();
  const auto expected = slurp(std::string(ROLECHECK_GOLDEN_DIR) + "/" + c.file);
  ASSERT_FALSE(expected.empty()) << c.file << " missing; run tests/golden/regen.sh";
  EXPECT_EQ(out.str(), expected) << c.file;
}

INSTANTIATE_TEST_SUITE_P(Manifest, Golden, ::testing::ValuesIn(manifest()),
                         [](const ::testing::TestParamInfo<GoldenCase>& info) {
                           std::string name;
                           for (char ch : info.param.file) {
                             name += std::isalnum(static_cast<unsigned char>(ch)) ? ch : '_';
                           }
                           return name;
                         });

TEST(GoldenManifest, IsNotEmpty) { EXPECT_GE(manifest().size(), 10U); }

}  // namespace
}  // namespace rolecheck
