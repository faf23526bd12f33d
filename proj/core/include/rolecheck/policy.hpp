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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rolecheck/error.hpp"
#include "rolecheck/symbols.hpp"

namespace rolecheck {

enum class Effect : std::uint8_t { kPermit, kDeny };

std::string_view effect_name(Effect e);  // "PERMIT" / "DENY"

// Either every value (`*`) or an explicit, non-empty list.
template <typename T>
struct Selector {
  bool wildcard = true;
  std::vector<T> items;

  static Selector any() { return {}; }
  static Selector of(std::vector<T> values) {
    return Selector{false, std::move(values)};
  }

  bool matches(const T& value) const {
    return wildcard ||
           std::find(items.begin(), items.end(), value) != items.end();
  }

  friend bool operator==(const Selector&, const Selector&) = default;
};

// A rule or assertion may target a single resource or a whole group.
using Target = std::variant<ResourceId, GroupId>;

struct Rule {
  Effect effect = Effect::kDeny;
  RoleId role;
  Selector<ActionId> actions;
  Selector<Target> targets;
  Selector<EnvId> envs;  // wildcard also matches requests without an env
  Selector<StateId> states;
  SourceLoc loc;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// A user holding `pivot` must not also hold any role in `excluded`.
struct SodConstraint {
  RoleId pivot;
  std::vector<RoleId> excluded;
  Selector<StateId> states;
  SourceLoc loc;

  bool applies_in(StateId s) const { return states.matches(s); }
  friend bool operator==(const SodConstraint&, const SodConstraint&) = default;
};

struct EmergencySpec {
  RoleId role;
  std::vector<StateId> grantable_in;
  std::uint32_t max_duration = 1;
  SourceLoc loc;

  bool grantable(StateId s) const {
    return std::find(grantable_in.begin(), grantable_in.end(), s) !=
           grantable_in.end();
  }
  friend bool operator==(const EmergencySpec&, const EmergencySpec&) = default;
};

struct RoleCoverage {
  friend bool operator==(const RoleCoverage&, const RoleCoverage&) = default;
};

struct MutualExclusion {
  RoleId pivot;
  std::vector<RoleId> excluded;

  friend bool operator==(const MutualExclusion&,
                         const MutualExclusion&) = default;
};

struct DecisionAssert {
  RoleId role;
  ActionId action;
  Target target;
  std::optional<EnvId> env;
  std::optional<StateId> state;
  Effect expected = Effect::kDeny;

  friend bool operator==(const DecisionAssert&,
                         const DecisionAssert&) = default;
};

struct Assertion {
  std::string name;
  std::variant<RoleCoverage, MutualExclusion, DecisionAssert> body;
  SourceLoc loc;

  friend bool operator==(const Assertion&, const Assertion&) = default;
};

// A parsed, validated policy. Immutable once built; share it freely.
struct Policy {
  std::string name;
  SymbolTable symbols;
  std::vector<std::vector<ResourceId>> groups;  // indexed by GroupId
  std::vector<std::optional<GroupId>> resource_group;  // indexed by ResourceId
  StateId default_state;
  std::vector<Rule> rules;
  std::vector<SodConstraint> sod_constraints;
  std::vector<EmergencySpec> emergency_specs;
  std::vector<Assertion> assertions;
  SourceLoc loc;

  std::size_t role_count() const { return symbols.count(SymbolKind::kRole); }
  std::size_t resource_count() const {
    return symbols.count(SymbolKind::kResource);
  }
  std::size_t action_count() const {
    return symbols.count(SymbolKind::kAction);
  }
  std::size_t env_count() const {
    return symbols.count(SymbolKind::kEnvironment);
  }
  std::size_t state_count() const { return symbols.count(SymbolKind::kState); }
  bool has_environments() const { return env_count() > 0; }

  std::vector<RoleId> roles() const;
  std::vector<ResourceId> resources() const;
  std::vector<ActionId> actions() const;
  std::vector<EnvId> environments() const;
  std::vector<StateId> states() const;
  RoleSet all_roles() const;

  bool covers(const Target& target, ResourceId resource) const;
  std::vector<ResourceId> expand(const Target& target) const;
  std::string target_name(const Target& target) const;

  template <SymbolKind K>
  const std::string& name_of(Id<K> id) const {
    return symbols.name(id);
  }

  friend bool operator==(const Policy&, const Policy&) = default;
};

}  // namespace rolecheck
