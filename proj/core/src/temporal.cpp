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

#include "rolecheck/temporal.hpp"

#include <algorithm>

namespace rolecheck {

std::string_view event_kind_name(EventKind kind) {
  switch (kind) {
    case EventKind::kInit: return "init";
    case EventKind::kStateChange: return "state";
    case EventKind::kGrant: return "grant";
    case EventKind::kExpire: return "expire";
    case EventKind::kEval: return "eval";
    case EventKind::kTick: return "tick";
  }
  return "event";
}

namespace {

std::string role_list(const Policy& p, RoleSet roles) {
  std::string out;
  for (RoleId r : roles.members()) {
    if (!out.empty()) out += "+";
    out += p.name_of(r);
  }
  return out.empty() ? "-" : out;
}

}  // namespace

const UserAssignment& TemporalWorld::assignment(UserId user) const {
  auto it = assignments_.find(user);
  if (it == assignments_.end()) {
    throw Error(ErrorCode::kUnknownUser,
                "unknown user #" + std::to_string(user.ordinal));
  }
  return it->second;
}

UserId TemporalWorld::user(std::string_view name) const {
  auto id = users_.find(name);
  if (!id) throw Error(ErrorCode::kUnknownUser, "unknown user '" + std::string(name) + "'");
  return *id;
}

std::vector<UserAssignment> TemporalWorld::snapshot() const {
  std::vector<UserAssignment> out;
  out.reserve(assignments_.size());
  for (const auto& [id, a] : assignments_) out.push_back(a);
  return out;
}

TemporalWorld init_world(std::shared_ptr<const Policy> policy,
                         std::span<const UserBinding> users) {
  TemporalWorld w;
  w.policy_ = std::move(policy);
  const Policy& p = *w.policy_;
  w.users_ = UserRoster(p.symbols);
  w.state_ = p.default_state;
  w.now_ = Tick{0};

  for (const auto& binding : users) {
    if (w.users_.find(binding.user)) {
      throw Error(ErrorCode::kInvalidRequest,
                  "user '" + binding.user + "' is bound twice");
    }
    const UserId id = w.users_.add(binding.user);
    UserAssignment a;
    a.user = id;
    for (const auto& role_name : binding.roles) {
      auto role = p.symbols.find_as<SymbolKind::kRole>(role_name);
      if (!role) {
        throw Error(ErrorCode::kUnknownIdentifier,
                    "unknown role '" + role_name + "' for user '" + binding.user + "'");
      }
      a.base_roles.insert(*role);
    }
    w.assignments_.emplace(id, std::move(a));
  }

  const auto current = w.snapshot();
  auto violations = check_role_coverage(current, w.now_);
  auto sod = check_sod(p, current, w.state_, w.now_);
  violations.insert(violations.end(), sod.begin(), sod.end());
  if (!violations.empty()) {
    std::string msg = "initial user bindings violate policy constraints:";
    for (const auto& v : violations) msg += "\n  " + render_violation(p, w.users_, v);
    throw ConstraintError(ErrorCode::kInitialConstraintViolation, msg,
                          std::move(violations));
  }
  w.record(EventKind::kInit, "policy=" + p.name + " state=" + p.name_of(w.state_) +
                                 " users=" + std::to_string(w.assignments_.size()));
  return w;
}

TemporalWorld transition_state(TemporalWorld w, StateId to) {
  const Policy& p = w.policy();
  if (to.ordinal >= p.state_count()) {
    throw Error(ErrorCode::kUnknownState,
                "unknown state #" + std::to_string(to.ordinal));
  }
  const StateId from = w.state_;
  w.state_ = to;
  w.record(EventKind::kStateChange, p.name_of(from) + " -> " + p.name_of(to));
  return w;
}

TemporalWorld transition_state(TemporalWorld w, std::string_view to) {
  auto id = w.policy().symbols.find_as<SymbolKind::kState>(to);
  if (!id) {
    throw Error(ErrorCode::kUnknownState, "policy '" + w.policy().name +
                                              "' has no state '" + std::string(to) + "'");
  }
  return transition_state(std::move(w), *id);
}

TemporalWorld grant_emergency(TemporalWorld w, UserId user, RoleId role,
                              std::uint32_t duration) {
  const Policy& p = w.policy();
  auto it = w.assignments_.find(user);
  if (it == w.assignments_.end()) {
    throw Error(ErrorCode::kUnknownUser, "unknown user #" + std::to_string(user.ordinal));
  }
  if (role.ordinal >= p.role_count()) {
    throw Error(ErrorCode::kUnknownIdentifier, "unknown role #" + std::to_string(role.ordinal));
  }
  const std::string& user_name = w.users_.name(user);
  auto spec = std::find_if(p.emergency_specs.begin(), p.emergency_specs.end(),
                           [&](const EmergencySpec& s) { return s.role == role; });
  if (spec == p.emergency_specs.end()) {
    throw Error(ErrorCode::kNoEmergencySpec,
                "role '" + p.name_of(role) + "' has no emergency spec");
  }
  if (!spec->grantable(w.state_)) {
    throw Error(ErrorCode::kGrantNotAllowedInState,
                "role '" + p.name_of(role) + "' cannot be granted in state '" +
                    p.name_of(w.state_) + "'");
  }
  if (duration < 1) {
    throw Error(ErrorCode::kInvalidRequest, "grant duration must be at least one tick");
  }
  if (duration > spec->max_duration) {
    throw Error(ErrorCode::kDurationExceedsSpec,
                "duration " + std::to_string(duration) + " exceeds max_duration " +
                    std::to_string(spec->max_duration) + " for role '" +
                    p.name_of(role) + "'");
  }
  const AssignCheck check = can_assign(p, it->second, role, w.state_, w.now_);
  if (!check.allowed()) {
    throw ConstraintError(ErrorCode::kSodBlocked,
                          "grant of '" + p.name_of(role) + "' to '" + user_name +
                              "' blocked: " +
                              render_violation(p, w.users_, *check.blocked_by),
                          {*check.blocked_by});
  }
  const Tick expires{w.now_.value + duration};
  it->second.grants.push_back(ActiveGrant{role, w.now_, expires, w.state_});
  w.record(EventKind::kGrant, user_name + " " + p.name_of(role) +
                                  " duration=" + std::to_string(duration) +
                                  " expires=" + std::to_string(expires.value));
  return w;
}

TemporalWorld tick(TemporalWorld w, std::uint64_t steps) {
  if (steps < 1) throw Error(ErrorCode::kInvalidRequest, "tick needs a positive step count");
  const Policy& p = w.policy();
  w.now_ = Tick{w.now_.value + steps};
  w.record(EventKind::kTick, "+" + std::to_string(steps));
  for (auto& [id, a] : w.assignments_) {
    auto keep = a.grants.begin();
    for (auto& g : a.grants) {
      if (g.expires_at <= w.now_) {
        w.record(EventKind::kExpire, w.users_.name(id) + " " + p.name_of(g.role));
      } else {
        *keep++ = g;
      }
    }
    a.grants.erase(keep, a.grants.end());
  }
  return w;
}

RoleSet effective_roles(const TemporalWorld& w, UserId user) {
  return w.assignment(user).effective_roles(w.now());
}

std::pair<TemporalWorld, Decision> evaluate_in_world(TemporalWorld w, UserId user,
                                                     ActionId action,
                                                     ResourceId resource,
                                                     std::optional<EnvId> env) {
  const Policy& p = w.policy();
  const RoleSet roles = effective_roles(w, user);
  AccessRequest req{roles, action, resource, env, w.state_};
  Decision d = evaluate(p, req);
  std::string detail = w.users_.name(user) + " " + p.name_of(action) + " " +
                       p.name_of(resource);
  if (env) detail += " env=" + p.name_of(*env);
  detail += " roles=" + role_list(p, roles) + " " + std::string(effect_name(d.effect));
  w.record(EventKind::kEval, std::move(detail));
  return {std::move(w), std::move(d)};
}

}  // namespace rolecheck
