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

#include "oracle.hpp"
#include "rolecheck/constraints.hpp"
#include "rolecheck/corpus.hpp"

namespace rolecheck {
namespace {

struct Fixture {
  std::shared_ptr<const Policy> policy;
  UserRoster users;

  explicit Fixture(std::string_view id) : policy(load_builtin(id).policy), users(policy->symbols) {}

  RoleId role(const char* name) const { return *policy->symbols.find_as<SymbolKind::kRole>(name); }
  StateId state(const char* name) const {
    return *policy->symbols.find_as<SymbolKind::kState>(name);
  }

  UserAssignment user(const char* name, std::initializer_list<const char*> roles) {
    UserAssignment a{users.add(name), {}, {}};
    for (const char* r : roles) a.base_roles.insert(role(r));
    return a;
  }
};

TEST(Coverage, PolicyOneBindingsAreCovered) {
  Fixture f("policy1");
  std::vector<UserAssignment> all;
  for (const auto& b : corpus_users("policy1")) {
    UserAssignment a{f.users.add(b.user), {}, {}};
    for (const auto& r : b.roles) a.base_roles.insert(f.role(r.c_str()));
    all.push_back(a);
  }
  EXPECT_TRUE(check_role_coverage(all, Tick{0}).empty());
  EXPECT_TRUE(check_sod(*f.policy, all, f.state("InService"), Tick{0}).empty());
}

TEST(Coverage, EmptyUserIsMissingRole) {
  Fixture f("policy1");
  const std::vector<UserAssignment> all = {f.user("nobody", {})};
  const auto v = check_role_coverage(all, Tick{0});
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].kind, ViolationKind::kMissingRole);
}

TEST(Coverage, ActiveGrantCounts) {
  Fixture f("policy1");
  auto u = f.user("temp", {});
  u.grants.push_back(ActiveGrant{f.role("SysAdmin"), Tick{0}, Tick{2}, f.state("Troubleshooting")});
  const std::vector<UserAssignment> all = {u};
  EXPECT_TRUE(check_role_coverage(all, Tick{1}).empty());
  EXPECT_EQ(check_role_coverage(all, Tick{2}).size(), 1U);
}

TEST(Sod, ExternalWithSysAdminConflicts) {
  Fixture f("policy1");
  const std::vector<UserAssignment> all = {f.user("u", {"ExtUsers", "SysAdmin"})};
  const auto v = check_sod(*f.policy, all, f.state("InService"), Tick{0});
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].kind, ViolationKind::kSodConflict);
  EXPECT_EQ(v[0].pivot, f.role("ExtUsers"));
  EXPECT_EQ(v[0].role, f.role("SysAdmin"));
  EXPECT_EQ(render_violation(*f.policy, f.users, v[0]),
            "SOD policy1 u holds ExtUsers+SysAdmin (constraint #1, state InService)");
}

TEST(Sod, PolicyThreePairwise) {
  Fixture f("policy3");
  const std::vector<UserAssignment> all = {f.user("u", {"NetworkEngineer", "SecurityEngineer"})};
  const auto v = check_sod(*f.policy, all, f.state("InService"), Tick{0});
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].constraint_index, 2U);
}

TEST(Sod, SingleRoleIsClean) {
  Fixture f("policy1");
  const std::vector<UserAssignment> all = {f.user("u", {"SysAdmin"})};
  EXPECT_TRUE(check_sod(*f.policy, all, f.state("InService"), Tick{0}).empty());
}

TEST(Sod, OrderedByUserConstraintRole) {
  Fixture f("policy1");
  const std::vector<UserAssignment> all = {f.user("a", {"ExtUsers", "EndUsers", "DBA"}),
                                           f.user("b", {"ExtUsers", "SysAdmin"})};
  const auto v = check_sod(*f.policy, all, f.state("InService"), Tick{0});
  ASSERT_EQ(v.size(), 3U);
  EXPECT_EQ(v[0].role, f.role("DBA"));
  EXPECT_EQ(v[1].role, f.role("EndUsers"));
  EXPECT_EQ(v[2].user, all[1].user);
  EXPECT_EQ(v, check_sod(*f.policy, all, f.state("InService"), Tick{0}));
}

TEST(Sod, RemovingRolesNeverAddsViolations) {
  Fixture f("policy2");
  const auto n = f.policy->role_count();
  for (std::uint64_t mask = 1; mask < (1U << n); ++mask) {
    for (RoleId r : RoleSet(mask).members()) {
      RoleSet smaller(mask);
      smaller.erase(r);
      const std::vector<UserAssignment> big = {{UserId{0}, RoleSet(mask), {}}};
      const std::vector<UserAssignment> small = {{UserId{0}, smaller, {}}};
      EXPECT_LE(check_sod(*f.policy, small, StateId{0}, Tick{0}).size(),
                check_sod(*f.policy, big, StateId{0}, Tick{0}).size());
    }
  }
}

TEST(Assign, Examples) {
  Fixture f("policy1");
  const auto in_service = f.state("InService");
  EXPECT_TRUE(can_assign(*f.policy, f.user("userEU", {"EndUsers"}), f.role("DBA"), in_service,
                         Tick{0})
                  .allowed());
  const auto blocked = can_assign(*f.policy, f.user("userSA", {"SysAdmin"}), f.role("ExtUsers"),
                                  in_service, Tick{0});
  ASSERT_FALSE(blocked.allowed());
  EXPECT_EQ(blocked.blocked_by->pivot, f.role("ExtUsers"));
  EXPECT_TRUE(can_assign(*f.policy, f.user("userDBA", {"DBA"}), f.role("DBA"), in_service, Tick{0})
                  .allowed());
}

TEST(Assign, ApprovedAdditionsStayClean) {
  // Every sequence of approved additions keeps check_sod empty; exhaustive
  // over role orderings for policy 3 and a sample for policy 2.
  for (const char* id : {"policy2", "policy3"}) {
    Fixture f(id);
    const auto n = static_cast<std::uint32_t>(f.policy->role_count());
    for (std::uint32_t first = 0; first < n; ++first) {
      UserAssignment a{f.users.add(std::string("u") + std::to_string(first)), {}, {}};
      for (std::uint32_t k = 0; k < n; ++k) {
        const RoleId r{(first + k) % n};
        if (can_assign(*f.policy, a, r, StateId{0}, Tick{0}).allowed()) a.base_roles.insert(r);
        const std::vector<UserAssignment> all = {a};
        EXPECT_TRUE(check_sod(*f.policy, all, StateId{0}, Tick{0}).empty());
        EXPECT_FALSE(testing::naive_sod_conflict(*f.policy, a.base_roles, StateId{0}));
      }
    }
  }
}

}  // namespace
}  // namespace rolecheck
