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

#include <string>

#include "oracle.hpp"
#include "rolecheck/corpus.hpp"
#include "rolecheck/decision.hpp"
#include "rolecheck/dsl.hpp"

namespace rolecheck {
namespace {

class CorpusDecision : public ::testing::Test {
 protected:
  static const Policy& get(std::string_view id) {
    static const Policy p1 = *load_builtin("policy1").policy;
    static const Policy p2 = *load_builtin("policy2").policy;
    static const Policy p3 = *load_builtin("policy3").policy;
    return id == "policy1" ? p1 : id == "policy2" ? p2 : p3;
  }

  static AccessRequest request(const Policy& p, std::initializer_list<const char*> roles,
                               const char* action, const char* resource,
                               const char* env = nullptr, const char* state = nullptr) {
    AccessRequest r;
    for (const char* name : roles) r.roles.insert(*p.symbols.find_as<SymbolKind::kRole>(name));
    r.action = *p.symbols.find_as<SymbolKind::kAction>(action);
    r.resource = *p.symbols.find_as<SymbolKind::kResource>(resource);
    if (env) r.env = *p.symbols.find_as<SymbolKind::kEnvironment>(env);
    r.state = state ? *p.symbols.find_as<SymbolKind::kState>(state) : p.default_state;
    return r;
  }
};

TEST_F(CorpusDecision, SysAdminAdminOnDc1MatchesItsPermit) {
  const auto& p = get("policy1");
  const auto rules = applicable_rules(p, request(p, {"SysAdmin"}, "AdminAccess", "DC1"));
  ASSERT_EQ(rules.size(), 1U);
  EXPECT_EQ(rules[0].rule->effect, Effect::kPermit);
  EXPECT_EQ(p.name_of(rules[0].rule->role), "SysAdmin");
}

TEST_F(CorpusDecision, EndUsersAdminInTroubleshootingMatchesNothing) {
  const auto& p = get("policy1");
  const auto req = request(p, {"EndUsers"}, "AdminAccess", "DC1", nullptr, "Troubleshooting");
  EXPECT_TRUE(applicable_rules(p, req).empty());
  const auto d = evaluate(p, req);
  EXPECT_EQ(d.outcome_before_enforcement, CombinedOutcome::kNotApplicable);
  EXPECT_EQ(d.effect, Effect::kDeny);
}

TEST_F(CorpusDecision, ExternalUsersAreDeniedShares) {
  const auto& p = get("policy1");
  const auto d = evaluate(p, request(p, {"ExtUsers"}, "ShareAccess", "FS"));
  EXPECT_EQ(d.effect, Effect::kDeny);
  EXPECT_EQ(d.outcome_before_enforcement, CombinedOutcome::kDeny);
}

TEST_F(CorpusDecision, DeveloperAppAccessDependsOnEnv) {
  const auto& p = get("policy2");
  EXPECT_EQ(evaluate(p, request(p, {"Developer"}, "AppAccess", "App", "test")).effect,
            Effect::kPermit);
  EXPECT_EQ(evaluate(p, request(p, {"Developer"}, "AppAccess", "App", "prod")).effect,
            Effect::kDeny);
  // No env: only env-free rules can match, and none permits.
  EXPECT_EQ(evaluate(p, request(p, {"Developer"}, "AppAccess", "App")).effect, Effect::kDeny);
}

TEST_F(CorpusDecision, NetworkEngineerLogsAndAggregator) {
  const auto& p = get("policy3");
  EXPECT_EQ(evaluate(p, request(p, {"NetworkEngineer"}, "LogReview", "FireWall")).effect,
            Effect::kPermit);
  EXPECT_EQ(evaluate(p, request(p, {"NetworkEngineer"}, "AdminAccess", "LogAggregator")).effect,
            Effect::kDeny);
}

TEST_F(CorpusDecision, MultipleRolesUnionThenDenyOverrides) {
  const auto& p = get("policy1");
  const auto d = evaluate(p, request(p, {"SysAdmin", "ExtUsers"}, "ShareAccess", "DC1"));
  EXPECT_EQ(d.effect, Effect::kDeny);
  EXPECT_EQ(d.matched_rules.size(), 2U);
  EXPECT_LT(d.matched_rules[0].index, d.matched_rules[1].index);
}

TEST(Combine, DenyOverrides) {
  const std::vector<MatchedRule> mixed = {{0, Effect::kPermit}, {1, Effect::kDeny}};
  const std::vector<MatchedRule> permits = {{0, Effect::kPermit}, {1, Effect::kPermit}};
  EXPECT_EQ(combine_deny_overrides(mixed), CombinedOutcome::kDeny);
  EXPECT_EQ(combine_deny_overrides(permits), CombinedOutcome::kPermit);
  EXPECT_EQ(combine_deny_overrides({}), CombinedOutcome::kNotApplicable);
}

TEST(Enforce, DenyBiased) {
  EXPECT_EQ(enforce_deny_biased(CombinedOutcome::kNotApplicable), Effect::kDeny);
  EXPECT_EQ(enforce_deny_biased(CombinedOutcome::kPermit), Effect::kPermit);
  EXPECT_EQ(enforce_deny_biased(CombinedOutcome::kDeny), Effect::kDeny);
}

TEST_F(CorpusDecision, RequestValidation) {
  const auto& p1 = get("policy1");
  auto code = [&](const Policy& p, AccessRequest r) {
    try {
      evaluate(p, r);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kSyntaxError;
  };
  auto r = request(p1, {"SysAdmin"}, "AdminAccess", "DC1");
  auto bad = r;
  bad.env = EnvId{0};
  EXPECT_EQ(code(p1, bad), ErrorCode::kEnvMismatch);
  bad = r;
  bad.resource = ResourceId{7};
  EXPECT_EQ(code(p1, bad), ErrorCode::kUnknownIdentifier);
  bad = r;
  bad.roles.insert(RoleId{40});
  EXPECT_EQ(code(p1, bad), ErrorCode::kUnknownIdentifier);
  bad = r;
  bad.roles = RoleSet{};
  EXPECT_EQ(code(p1, bad), ErrorCode::kInvalidRequest);
  bad = r;
  bad.state = StateId{2};
  EXPECT_EQ(code(p1, bad), ErrorCode::kUnknownIdentifier);
}

TEST_F(CorpusDecision, PolicyOneMatrix) {
  const auto& p = get("policy1");
  const auto m = permission_matrix(p, p.default_state, std::nullopt);
  EXPECT_EQ(m.size(), 54U);
  EXPECT_EQ(m.permit_count(), 21U);
  const std::vector<std::size_t> per_role = {9, 3, 3, 3, 3, 0};
  for (RoleId r : p.roles()) EXPECT_EQ(m.permit_count(r), per_role[r.ordinal]) << p.name_of(r);
  // Each cell against the naive scan.
  for (RoleId r : p.roles())
    for (ResourceId res : p.resources())
      for (ActionId a : p.actions())
        EXPECT_EQ(m.at(r, res, a),
                  testing::naive_decide(p, {RoleSet::single(r), a, res, std::nullopt, p.default_state}));
}

TEST(Matrix, EmptyRulesPolicyDeniesEverything) {
  const auto p = parse_policy(
      "policy e { states { Up } roles { A, B } resources { X, Y } actions { R } }");
  const auto m = permission_matrix(p, StateId{0}, std::nullopt);
  EXPECT_EQ(m.size(), 4U);
  EXPECT_EQ(m.permit_count(), 0U);
  EXPECT_TRUE(applicable_rules(p, {RoleSet{RoleId{0}}, ActionId{0}, ResourceId{0}, {}, StateId{0}})
                  .empty());
}

TEST_F(CorpusDecision, PolicyThreeMatrix) {
  const auto& p = get("policy3");
  const auto m = permission_matrix(p, p.default_state, std::nullopt);
  EXPECT_EQ(m.size(), 30U);
  EXPECT_EQ(m.permit_count(), 14U);
  const auto agg = *p.symbols.find_as<SymbolKind::kResource>("LogAggregator");
  for (RoleId r : p.roles()) {
    const bool security = p.name_of(r) == "SecurityEngineer";
    for (ActionId a : p.actions()) {
      EXPECT_EQ(m.at(r, agg, a) == Effect::kPermit, security) << p.name_of(r);
    }
  }
}

}  // namespace
}  // namespace rolecheck
