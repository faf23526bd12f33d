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

#include <set>

#include "rolecheck/dsl.hpp"

namespace rolecheck {

std::string_view diagnostic_kind_name(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::kShadowedRule: return "ShadowedRule";
    case DiagnosticKind::kDuplicateRule: return "DuplicateRule";
    case DiagnosticKind::kUnusedRole: return "UnusedRole";
    case DiagnosticKind::kSodRoleWithoutRules: return "SodRoleWithoutRules";
    case DiagnosticKind::kEmergencyNeverGrantable: return "EmergencyNeverGrantable";
  }
  return "Unknown";
}

std::string render_diagnostic(const Diagnostic& d) {
  std::string out = d.severity == Severity::kError ? "error" : "warning";
  out += ": ";
  if (d.loc.line > 0) out += "line " + std::to_string(d.loc.line) + ": ";
  out += std::string(diagnostic_kind_name(d.kind)) + ": " + d.message;
  return out;
}

namespace {

template <typename T>
bool selector_covers(const Selector<T>& outer, const Selector<T>& inner) {
  if (outer.wildcard) return true;
  if (inner.wildcard) return false;
  for (const auto& v : inner.items) {
    if (!outer.matches(v)) return false;
  }
  return true;
}

std::set<std::uint32_t> resource_set(const Policy& p, const Selector<Target>& s) {
  std::set<std::uint32_t> out;
  if (s.wildcard) {
    for (ResourceId r : p.resources()) out.insert(r.ordinal);
    return out;
  }
  for (const auto& t : s.items) {
    for (ResourceId r : p.expand(t)) out.insert(r.ordinal);
  }
  return out;
}

// True when every request matched by `inner` is also matched by `outer`.
bool rule_covers(const Policy& p, const Rule& outer, const Rule& inner) {
  if (outer.role != inner.role) return false;
  if (!selector_covers(outer.actions, inner.actions)) return false;
  if (!selector_covers(outer.envs, inner.envs)) return false;
  if (!selector_covers(outer.states, inner.states)) return false;
  if (outer.targets.wildcard) return true;
  const auto outer_res = resource_set(p, outer.targets);
  for (auto r : resource_set(p, inner.targets)) {
    if (!outer_res.contains(r)) return false;
  }
  return true;
}

}  // namespace

std::vector<Diagnostic> validate_policy(const Policy& p) {
  std::vector<Diagnostic> out;
  auto warn = [&](DiagnosticKind kind, std::string msg, SourceLoc loc) {
    out.push_back(Diagnostic{Severity::kWarning, kind, std::move(msg), loc});
  };

  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    const Rule& r = p.rules[i];
    bool duplicate = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (p.rules[j] == r) {
        warn(DiagnosticKind::kDuplicateRule,
             "rule #" + std::to_string(i) + " repeats rule #" + std::to_string(j),
             r.loc);
        duplicate = true;
        break;
      }
    }
    if (duplicate || r.effect != Effect::kPermit) continue;
    for (std::size_t j = 0; j < p.rules.size(); ++j) {
      const Rule& d = p.rules[j];
      if (j == i || d.effect != Effect::kDeny) continue;
      if (rule_covers(p, d, r)) {
        warn(DiagnosticKind::kShadowedRule,
             "permit rule #" + std::to_string(i) + " for role '" + p.name_of(r.role) +
                 "' can never take effect: deny rule #" + std::to_string(j) +
                 " covers its whole scope",
             r.loc);
        break;
      }
    }
  }

  RoleSet with_rules;
  for (const auto& r : p.rules) with_rules.insert(r.role);
  for (RoleId role : p.roles()) {
    if (!with_rules.contains(role)) {
      warn(DiagnosticKind::kUnusedRole,
           "role '" + p.name_of(role) + "' has no rules", p.loc);
    }
  }

  for (std::size_t k = 0; k < p.sod_constraints.size(); ++k) {
    const auto& c = p.sod_constraints[k];
    std::vector<RoleId> involved{c.pivot};
    involved.insert(involved.end(), c.excluded.begin(), c.excluded.end());
    for (RoleId role : involved) {
      if (!with_rules.contains(role)) {
        warn(DiagnosticKind::kSodRoleWithoutRules,
             "SOD constraint #" + std::to_string(k + 1) + " references role '" +
                 p.name_of(role) + "' which has no rules",
             c.loc);
      }
    }
  }

  // An emergency role is useless when, in every state it can be granted
  // in, it conflicts with every other role: nobody could receive it.
  for (const auto& spec : p.emergency_specs) {
    bool grantable_somewhere = false;
    for (StateId s : spec.grantable_in) {
      RoleSet conflicts;
      for (const auto& c : p.sod_constraints) {
        if (!c.applies_in(s)) continue;
        if (c.pivot == spec.role) {
          for (RoleId x : c.excluded) conflicts.insert(x);
        }
        for (RoleId x : c.excluded) {
          if (x == spec.role) conflicts.insert(c.pivot);
        }
      }
      RoleSet others = p.all_roles();
      others.erase(spec.role);
      if (others.empty() || !conflicts.includes(others)) {
        grantable_somewhere = true;
        break;
      }
    }
    if (!grantable_somewhere) {
      warn(DiagnosticKind::kEmergencyNeverGrantable,
           "emergency role '" + p.name_of(spec.role) +
               "' conflicts under SOD with every other role in all of its "
               "grantable states",
           spec.loc);
    }
  }
  return out;
}

}  // namespace rolecheck
