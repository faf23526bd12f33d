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

#include <sstream>

#include "rolecheck_cli/cli.hpp"

namespace rolecheck {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = ROLECHECK_TEST_DATA_DIR;

TEST(Cli, EvalPermit) {
  const auto r = run({"eval", "--builtin", "policy1", "--roles", "SysAdmin", "--action",
                      "RDPAccess", "--resource", "DC2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PERMIT\n");
}

TEST(Cli, EvalDeidData) {
  const auto r = run({"eval", "--builtin", "policy2", "--roles", "Tester", "--action",
                      "DataAccess", "--resource", "DeidData"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PERMIT\n");
}

TEST(Cli, EvalDenyExitsOne) {
  const auto r = run({"eval", "--builtin", "policy2", "--roles", "Developer", "--action",
                      "AppAccess", "--resource", "App", "--env", "prod"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "DENY\n");
}

TEST(Cli, EvalMultipleRoles) {
  const auto r = run({"eval", "--builtin", "policy1", "--roles", "SysAdmin,ExtUsers", "--action",
                      "ShareAccess", "--resource", "FS", "--state", "Troubleshooting"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, VerifyPolicyThree) {
  const auto r = run({"verify", "--builtin", "policy3", "--scope-users", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("COUNTEREXAMPLE"), std::string::npos);
  EXPECT_NE(r.out.find("uniqueNWrole: VALID (scope users=3 states=2, 38 instances)"),
            std::string::npos);
}

TEST(Cli, VerifyCounterexampleExitsOne) {
  const auto r = run({"verify", kData + "/policy1_no_sod.policy", "--assert", "ExtUserAccess",
                      "--scope-users", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("user0: SysAdmin, ExtUsers"), std::string::npos);
}

TEST(Cli, CheckStrict) {
  EXPECT_EQ(run({"check", "--builtin", "policy3"}).code, 0);
  EXPECT_EQ(run({"check", "--builtin", "policy3", "--strict"}).code, 1);
  EXPECT_EQ(run({"check", "--builtin", "policy1", "--strict"}).code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"matrix"}).code, 2);
  EXPECT_EQ(run({"matrix", "--builtin", "policy1", "some.policy"}).code, 2);
  EXPECT_EQ(run({"matrix", "--builtin", "policy1", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"verify", "--builtin", "policy1", "--scope-users", "zero"}).code, 2);
  EXPECT_EQ(run({"eval", "--builtin", "policy1", "--roles", "SysAdmin"}).code, 2);
}

TEST(Cli, InputErrorsAreReportedNotThrown) {
  auto r = run({"matrix", "--builtin", "policy9"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UnknownCorpusId"), std::string::npos);
  r = run({"check", kData + "/does_not_exist.policy"});
  EXPECT_EQ(r.code, 2);
  r = run({"eval", "--builtin", "policy1", "--roles", "Ghost", "--action", "AdminAccess",
           "--resource", "DC1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UnknownIdentifier"), std::string::npos);
  r = run({"eval", "--builtin", "policy1", "--roles", "SysAdmin", "--action", "AdminAccess",
           "--resource", "DC1", "--env", "prod"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("EnvMismatch"), std::string::npos);
  r = run({"verify", "--builtin", "policy1", "--assert", "nope"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UnknownAssertion"), std::string::npos);
  r = run({"trace", "--builtin", "policy1", "--script", kData + "/policy1_grant_in_service.trace"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, MalformedPolicyFile) {
  const auto r = run({"check", kData + "/malformed.policy"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SyntaxError"), std::string::npos);
  EXPECT_NE(r.err.find("line 4"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, CorpusList) {
  const auto r = run({"corpus", "list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> cases = {
      {"matrix", "--builtin", "policy2", "--env", "test", "--format", "csv"},
      {"verify", kData + "/policy1_no_sod.policy", "--scope-users", "2", "--workers", "3"},
      {"trace", "--builtin", "policy2", "--script", kData + "/policy2_emergency.trace"},
      {"eval", "--builtin", "policy1", "--roles", "Ghost", "--action", "X", "--resource", "Y"},
  };
  for (const auto& args : cases) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
  }
}

}  // namespace
}  // namespace rolecheck
