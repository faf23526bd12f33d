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

#include "rolecheck/constraints.hpp"

#include <algorithm>

namespace rolecheck {

RoleSet UserAssignment::effective_roles(Tick now) const {
  RoleSet out = base_roles;
  for (const auto& g : grants) {
    if (g.active_at(now)) out.insert(g.role);
  }
  return out;
}

std::vector<Violation> check_role_coverage(std::span<const UserAssignment> assignments,
                                           Tick now) {
  std::vector<const UserAssignment*> sorted;
  for (const auto& a : assignments) sorted.push_back(&a);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](auto* a, auto* b) { return a->user < b->user; });
  std::vector<Violation> out;
  for (const auto* a : sorted) {
    if (a->effective_roles(now).empty()) {
      Violation v;
      v.kind = ViolationKind::kMissingRole;
      v.user = a->user;
      out.push_back(v);
    }
  }
  return out;
}

namespace {

std::vector<RoleId> sorted_roles(std::vector<RoleId> roles) {
  std::sort(roles.begin(), roles.end());
  roles.erase(std::unique(roles.begin(), roles.end()), roles.end());
  return roles;
}

template <typename Sink>
void for_each_conflict(const Policy& p, RoleSet roles, StateId state, Sink&& sink) {
  for (std::size_t k = 0; k < p.sod_constraints.size(); ++k) {
    const auto& c = p.sod_constraints[k];
    if (!c.applies_in(state) || !roles.contains(c.pivot)) continue;
    for (RoleId r : sorted_roles(c.excluded)) {
      if (!roles.contains(r)) continue;
      Violation v;
      v.kind = ViolationKind::kSodConflict;
      v.pivot = c.pivot;
      v.role = r;
      v.constraint_index = k;
      v.state = state;
      if (!sink(v)) return;
    }
  }
}

}  // namespace

std::optional<Violation> first_sod_conflict(const Policy& p, RoleSet roles,
                                            StateId state) {
  std::optional<Violation> found;
  for_each_conflict(p, roles, state, [&](const Violation& v) {
    found = v;
    return false;
  });
  return found;
}

std::vector<Violation> check_sod(const Policy& p,
                                 std::span<const UserAssignment> assignments,
                                 StateId state, Tick now) {
  std::vector<const UserAssignment*> sorted;
  for (const auto& a : assignments) sorted.push_back(&a);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](auto* a, auto* b) { return a->user < b->user; });
  std::vector<Violation> out;
  for (const auto* a : sorted) {
    for_each_conflict(p, a->effective_roles(now), state, [&](Violation v) {
      v.user = a->user;
      out.push_back(v);
      return true;
    });
  }
  return out;
}

AssignCheck can_assign(const Policy& p, const UserAssignment& a, RoleId role,
                       StateId state, Tick now) {
  const RoleSet current = a.effective_roles(now);
  if (current.contains(role)) return {};
  RoleSet proposed = current;
  proposed.insert(role);
  // Only conflicts that involve the new role can block it.
  std::optional<Violation> found;
  for_each_conflict(p, proposed, state, [&](Violation v) {
    if (*v.pivot != role && *v.role != role) return true;
    v.user = a.user;
    found = v;
    return false;
  });
  return AssignCheck{found};
}

std::string render_violation(const Policy& p, const UserRoster& users,
                             const Violation& v) {
  const std::string user =
      v.user.ordinal < users.size() ? users.name(v.user)
                                    : "user" + std::to_string(v.user.ordinal);
  if (v.kind == ViolationKind::kMissingRole) {
    return "COVERAGE " + p.name + " " + user + " holds no role";
  }
  std::string out = "SOD " + p.name + " " + user + " holds " + p.name_of(*v.pivot) +
                    "+" + p.name_of(*v.role) + " (constraint #" +
                    std::to_string(v.constraint_index + 1);
  if (v.state) out += ", state " + p.name_of(*v.state);
  return out + ")";
}

}  // namespace rolecheck
