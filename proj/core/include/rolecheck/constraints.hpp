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
#include <string>
#include <vector>

#include "rolecheck/policy.hpp"

namespace rolecheck {

// Emergency grant, active during [granted_at, expires_at).
struct ActiveGrant {
  RoleId role;
  Tick granted_at;
  Tick expires_at;
  StateId granted_in_state;

  bool active_at(Tick now) const {
    return granted_at <= now && now < expires_at;
  }
  friend bool operator==(const ActiveGrant&, const ActiveGrant&) = default;
};

struct UserAssignment {
  UserId user;
  RoleSet base_roles;
  std::vector<ActiveGrant> grants;

  // base roles plus every grant still active at `now`
  RoleSet effective_roles(Tick now) const;

  friend bool operator==(const UserAssignment&, const UserAssignment&) = default;
};

enum class ViolationKind { kMissingRole, kSodConflict };

struct Violation {
  ViolationKind kind = ViolationKind::kMissingRole;
  UserId user;
  // SodConflict only: the pivot and the excluded role the user also holds.
  std::optional<RoleId> pivot;
  std::optional<RoleId> role;
  std::size_t constraint_index = 0;
  std::optional<StateId> state;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// One MissingRole per user whose effective role set is empty at `now`.
std::vector<Violation> check_role_coverage(std::span<const UserAssignment> assignments,
                                           Tick now);

// First SOD conflict for a single role set, in (constraint, role ordinal)
// order. The returned violation has no user.
std::optional<Violation> first_sod_conflict(const Policy& policy, RoleSet roles,
                                            StateId state);

// One SodConflict per (user, constraint, excluded role) for every constraint
// applicable in `state`, ordered by user ordinal, constraint index, then role
// ordinal.
std::vector<Violation> check_sod(const Policy& policy,
                                 std::span<const UserAssignment> assignments,
                                 StateId state, Tick now);

struct AssignCheck {
  std::optional<Violation> blocked_by;

  bool allowed() const { return !blocked_by.has_value(); }
};

// Whether `role` can be added to the user's effective set without creating
// an SOD conflict in `state`. Holding the role already is always allowed.
AssignCheck can_assign(const Policy& policy, const UserAssignment& assignment,
                       RoleId role, StateId state, Tick now);

// `SOD <policy> <user> holds <pivot>+<role> (constraint #k, state S)`
std::string render_violation(const Policy& policy, const UserRoster& users,
                             const Violation& v);

// Thrown by the temporal engine when user bindings or a grant would break a
// constraint.
class ConstraintError : public Error {
 public:
  ConstraintError(ErrorCode code, const std::string& message,
                  std::vector<Violation> violations)
      : Error(code, message), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace rolecheck
