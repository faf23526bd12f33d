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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rolecheck/decision.hpp"
#include "rolecheck/policy.hpp"

namespace rolecheck {

// Instance counts above this are refused rather than truncated.
inline constexpr std::uint64_t kScopeGuard = 100'000'000;

// The verifier enumerates every subset of roles, so it is limited to
// policies this small.
inline constexpr std::size_t kMaxVerifierRoles = 20;

struct Scope {
  std::uint32_t max_users = 4;
  std::uint32_t max_ticks = 6;
  std::vector<StateId> check_states;            // empty: every declared state
  std::optional<std::vector<EnvId>> check_envs;  // nullopt: every declared env
};

// Emergency grant explored on top of a base instance.
struct GrantProbe {
  std::size_t user = 0;
  RoleId role;
  std::uint32_t duration = 0;

  friend bool operator==(const GrantProbe&, const GrantProbe&) = default;
};

// Users are anonymous; user i prints as `user<i>`. In grant-exploration mode
// the role sets are the effective roles at `tick`.
struct Instance {
  std::vector<RoleSet> users;
  StateId state;
  Tick tick;
  std::optional<EnvId> env;
  std::optional<GrantProbe> grant;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct Witness {
  std::size_t user = 0;
  std::optional<std::pair<RoleId, RoleId>> conflict;  // (pivot, role)
  std::optional<AccessRequest> request;
  std::optional<Effect> actual;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AssertionCheck {
  bool holds = true;
  std::optional<Witness> witness;  // first failing (user, request)
};

// Role subsets ordered by size, then lexicographically by ascending role
// ordinals.
bool canonical_subset_less(RoleSet a, RoleSet b);

// Evaluates one assertion against one instance. A DecisionAssert evaluates
// its request with only the asserted role active, for every user holding
// that role and every resource the target expands to.
AssertionCheck check_assertion_on_instance(const Policy& policy, const Assertion& assertion,
                                           const Instance& instance);

// Upper bound on the instance count for `scope`; throws kScopeTooLarge past
// kScopeGuard.
std::uint64_t estimate_instance_count(const Policy& policy, const Scope& scope,
                                      bool symmetry_reduction = true);

// Streams every fact-satisfying instance in canonical order: user count,
// then the users' role subsets (non-decreasing when symmetry_reduction is
// set), then state, then environment. Return false from `visit` to stop.
void for_each_instance(const Policy& policy, const Scope& scope, bool symmetry_reduction,
                       const std::function<bool(const Instance&)>& visit);

std::vector<Instance> enumerate_instances(const Policy& policy, const Scope& scope,
                                          bool symmetry_reduction = true);

enum class Verdict { kValidWithinScope, kCounterexampleFound };

struct Counterexample {
  Instance instance;
  std::string assertion;
  Witness witness;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerifyResult {
  Verdict verdict = Verdict::kValidWithinScope;
  std::optional<Counterexample> counterexample;
  // All instances when valid, otherwise instances up to and including the
  // counterexample in canonical order.
  std::uint64_t instances_checked = 0;

  bool valid() const { return verdict == Verdict::kValidWithinScope; }
};

struct VerifyOptions {
  unsigned workers = 1;
  bool symmetry_reduction = true;
  // Also explore one emergency grant per spec, for every user, duration
  // 1..max_duration and query tick 0..max_ticks, on each base instance.
  bool explore_grants = false;
};

// Canonical-first counterexample; the result does not depend on `workers`.
VerifyResult verify(const Policy& policy, const Assertion& assertion, const Scope& scope,
                    const VerifyOptions& options = {});

// Every assertion in declaration order; throws kNoAssertions.
std::vector<std::pair<std::string, VerifyResult>> verify_all(
    const Policy& policy, const Scope& scope, const VerifyOptions& options = {});

const Assertion& find_assertion(const Policy& policy, std::string_view name);

}  // namespace rolecheck
