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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rolecheck/policy.hpp"

namespace rolecheck {

struct AccessRequest {
  RoleSet roles;  // the subject's effective roles, non-empty
  ActionId action;
  ResourceId resource;
  std::optional<EnvId> env;
  StateId state;

  friend bool operator==(const AccessRequest&, const AccessRequest&) = default;
};

enum class CombinedOutcome { kPermit, kDeny, kNotApplicable };

std::string_view outcome_name(CombinedOutcome c);

struct MatchedRule {
  std::size_t index = 0;  // into Policy::rules
  Effect effect = Effect::kDeny;

  friend bool operator==(const MatchedRule&, const MatchedRule&) = default;
};

struct Decision {
  Effect effect = Effect::kDeny;
  CombinedOutcome outcome_before_enforcement = CombinedOutcome::kNotApplicable;
  std::vector<MatchedRule> matched_rules;  // declaration order

  bool permitted() const { return effect == Effect::kPermit; }
  friend bool operator==(const Decision&, const Decision&) = default;
};

struct ApplicableRule {
  std::size_t index = 0;
  const Rule* rule = nullptr;
};

// Throws kUnknownIdentifier, kEnvMismatch or kInvalidRequest.
void validate_request(const Policy& policy, const AccessRequest& request);

bool rule_applies(const Policy& policy, const Rule& rule,
                  const AccessRequest& request);

// Rules whose role is held and whose action/target/env/state selectors all
// match, in declaration order. Group targets expand at match time.
std::vector<ApplicableRule> applicable_rules(const Policy& policy,
                                             const AccessRequest& request);

// Any Deny wins, then any Permit, otherwise NotApplicable.
CombinedOutcome combine_deny_overrides(std::span<const MatchedRule> matches);

// NotApplicable collapses to Deny.
Effect enforce_deny_biased(CombinedOutcome outcome);

Decision evaluate(const Policy& policy, const AccessRequest& request);

// Single-role decisions for every (role, resource, action) cell.
class PermissionMatrix {
 public:
  PermissionMatrix(StateId state, std::optional<EnvId> env, std::size_t roles,
                   std::size_t resources, std::size_t actions);

  StateId state() const { return state_; }
  const std::optional<EnvId>& env() const { return env_; }
  std::size_t role_count() const { return roles_; }
  std::size_t resource_count() const { return resources_; }
  std::size_t action_count() const { return actions_; }
  std::size_t size() const { return cells_.size(); }

  Effect at(RoleId role, ResourceId resource, ActionId action) const {
    return cells_[offset(role, resource, action)];
  }
  void set(RoleId role, ResourceId resource, ActionId action, Effect e) {
    cells_[offset(role, resource, action)] = e;
  }

  std::size_t permit_count() const;
  std::size_t permit_count(RoleId role) const;

  friend bool operator==(const PermissionMatrix&, const PermissionMatrix&) = default;

 private:
  std::size_t offset(RoleId role, ResourceId resource, ActionId action) const {
    return (role.ordinal * resources_ + resource.ordinal) * actions_ + action.ordinal;
  }

  StateId state_;
  std::optional<EnvId> env_;
  std::size_t roles_;
  std::size_t resources_;
  std::size_t actions_;
  std::vector<Effect> cells_;
};

PermissionMatrix permission_matrix(const Policy& policy, StateId state,
                                   std::optional<EnvId> env);

}  // namespace rolecheck
