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

#include "rolecheck/decision.hpp"

#include <algorithm>

namespace rolecheck {

std::string_view outcome_name(CombinedOutcome c) {
  switch (c) {
    case CombinedOutcome::kPermit: return "PERMIT";
    case CombinedOutcome::kDeny: return "DENY";
    case CombinedOutcome::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "UNKNOWN";
}

void validate_request(const Policy& p, const AccessRequest& r) {
  if (r.roles.empty()) {
    throw Error(ErrorCode::kInvalidRequest, "request must carry at least one role");
  }
  if (!(p.all_roles().includes(r.roles))) {
    throw Error(ErrorCode::kUnknownIdentifier, "request names an undeclared role");
  }
  if (r.action.ordinal >= p.action_count()) {
    throw Error(ErrorCode::kUnknownIdentifier, "request names an undeclared action");
  }
  if (r.resource.ordinal >= p.resource_count()) {
    throw Error(ErrorCode::kUnknownIdentifier, "request names an undeclared resource");
  }
  if (r.state.ordinal >= p.state_count()) {
    throw Error(ErrorCode::kUnknownIdentifier, "request names an undeclared state");
  }
  if (r.env) {
    if (!p.has_environments()) {
      throw Error(ErrorCode::kEnvMismatch,
                  "policy '" + p.name + "' declares no environments");
    }
    if (r.env->ordinal >= p.env_count()) {
      throw Error(ErrorCode::kUnknownIdentifier,
                  "request names an undeclared environment");
    }
  }
}

bool rule_applies(const Policy& p, const Rule& rule, const AccessRequest& r) {
  if (!r.roles.contains(rule.role)) return false;
  if (!rule.actions.matches(r.action)) return false;
  if (!rule.states.matches(r.state)) return false;
  if (!rule.envs.wildcard && !(r.env && rule.envs.matches(*r.env))) return false;
  if (rule.targets.wildcard) return true;
  return std::any_of(rule.targets.items.begin(), rule.targets.items.end(),
                     [&](const Target& t) { return p.covers(t, r.resource); });
}

std::vector<ApplicableRule> applicable_rules(const Policy& p,
                                             const AccessRequest& r) {
  std::vector<ApplicableRule> out;
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    if (rule_applies(p, p.rules[i], r)) out.push_back({i, &p.rules[i]});
  }
  return out;
}

CombinedOutcome combine_deny_overrides(std::span<const MatchedRule> matches) {
  bool any_permit = false;
  for (const auto& m : matches) {
    if (m.effect == Effect::kDeny) return CombinedOutcome::kDeny;
    any_permit = true;
  }
  return any_permit ? CombinedOutcome::kPermit : CombinedOutcome::kNotApplicable;
}

Effect enforce_deny_biased(CombinedOutcome outcome) {
  return outcome == CombinedOutcome::kPermit ? Effect::kPermit : Effect::kDeny;
}

Decision evaluate(const Policy& p, const AccessRequest& r) {
  validate_request(p, r);
  Decision d;
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    if (rule_applies(p, p.rules[i], r)) {
      d.matched_rules.push_back({i, p.rules[i].effect});
    }
  }
  d.outcome_before_enforcement = combine_deny_overrides(d.matched_rules);
  d.effect = enforce_deny_biased(d.outcome_before_enforcement);
  return d;
}

PermissionMatrix::PermissionMatrix(StateId state, std::optional<EnvId> env,
                                   std::size_t roles, std::size_t resources,
                                   std::size_t actions)
    : state_(state),
      env_(env),
      roles_(roles),
      resources_(resources),
      actions_(actions),
      cells_(roles * resources * actions, Effect::kDeny) {}

std::size_t PermissionMatrix::permit_count() const {
  return static_cast<std::size_t>(
      std::count(cells_.begin(), cells_.end(), Effect::kPermit));
}

std::size_t PermissionMatrix::permit_count(RoleId role) const {
  const auto begin = cells_.begin() + static_cast<std::ptrdiff_t>(
                                          role.ordinal * resources_ * actions_);
  return static_cast<std::size_t>(std::count(
      begin, begin + static_cast<std::ptrdiff_t>(resources_ * actions_),
      Effect::kPermit));
}

PermissionMatrix permission_matrix(const Policy& p, StateId state,
                                   std::optional<EnvId> env) {
  PermissionMatrix m(state, env, p.role_count(), p.resource_count(),
                     p.action_count());
  for (RoleId role : p.roles()) {
    for (ResourceId res : p.resources()) {
      for (ActionId act : p.actions()) {
        AccessRequest req{RoleSet::single(role), act, res, env, state};
        m.set(role, res, act, evaluate(p, req).effect);
      }
    }
  }
  return m;
}

}  // namespace rolecheck
