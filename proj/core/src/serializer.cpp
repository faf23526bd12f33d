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

#include <sstream>

#include "rolecheck/dsl.hpp"

namespace rolecheck {

namespace {

template <SymbolKind K>
std::string join(const Policy& p, const std::vector<Id<K>>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += p.name_of(ids[i]);
  }
  return out;
}

template <SymbolKind K>
std::string selector_text(const Policy& p, const Selector<Id<K>>& s) {
  return s.wildcard ? std::string("*") : join(p, s.items);
}

std::string targets_text(const Policy& p, const Selector<Target>& s) {
  if (s.wildcard) return "*";
  std::string out;
  for (std::size_t i = 0; i < s.items.size(); ++i) {
    if (i) out += ", ";
    out += p.target_name(s.items[i]);
  }
  return out;
}

void braced_line(std::ostream& os, std::string_view section,
                 const std::vector<std::string>& names) {
  os << "  " << section << " {";
  for (std::size_t i = 0; i < names.size(); ++i) {
    os << (i ? ", " : " ") << names[i];
  }
  os << " }\n";
}

}  // namespace

std::string rule_text(const Policy& p, const Rule& r) {
  std::string out = r.effect == Effect::kPermit ? "permit " : "deny ";
  out += p.name_of(r.role) + " " + selector_text(p, r.actions) + " on " +
         targets_text(p, r.targets);
  if (!r.envs.wildcard) out += " env " + selector_text(p, r.envs);
  if (!r.states.wildcard) out += " state " + selector_text(p, r.states);
  return out;
}

std::string serialize_policy(const Policy& p) {
  std::ostringstream os;
  os << "policy " << p.name << " {\n";
  braced_line(os, "states", p.symbols.names(SymbolKind::kState));
  os << "  default_state " << p.name_of(p.default_state) << "\n";
  if (p.has_environments()) {
    braced_line(os, "environments", p.symbols.names(SymbolKind::kEnvironment));
  }
  braced_line(os, "roles", p.symbols.names(SymbolKind::kRole));

  os << "  resources {\n";
  for (ResourceId r : p.resources()) {
    os << "    " << p.name_of(r);
    if (const auto& g = p.resource_group[r.ordinal]) os << " group " << p.name_of(*g);
    os << "\n";
  }
  os << "  }\n";
  braced_line(os, "actions", p.symbols.names(SymbolKind::kAction));

  auto open = [&](std::string_view section, bool empty) {
    os << "  " << section << " {" << (empty ? " }\n" : "\n");
    return !empty;
  };

  if (open("rules", p.rules.empty())) {
    for (const auto& r : p.rules) {
      os << "    " << rule_text(p, r) << "\n";
    }
    os << "  }\n";
  }
  if (open("sod", p.sod_constraints.empty())) {
    for (const auto& c : p.sod_constraints) {
      os << "    exclusive " << p.name_of(c.pivot) << " with " << join(p, c.excluded);
      if (!c.states.wildcard) os << " state " << selector_text(p, c.states);
      os << "\n";
    }
    os << "  }\n";
  }
  if (open("emergency", p.emergency_specs.empty())) {
    for (const auto& e : p.emergency_specs) {
      os << "    role " << p.name_of(e.role) << " grantable_in "
         << join(p, e.grantable_in) << " max_duration " << e.max_duration << "\n";
    }
    os << "  }\n";
  }
  if (open("assertions", p.assertions.empty())) {
    for (const auto& a : p.assertions) {
      os << "    assert " << a.name << " ";
      if (std::holds_alternative<RoleCoverage>(a.body)) {
        os << "role_coverage";
      } else if (const auto* m = std::get_if<MutualExclusion>(&a.body)) {
        os << "no_combination " << p.name_of(m->pivot) << " with "
           << join(p, m->excluded);
      } else {
        const auto& d = std::get<DecisionAssert>(a.body);
        os << "decision " << p.name_of(d.role) << " " << p.name_of(d.action) << " on "
           << p.target_name(d.target);
        if (d.env) os << " env " << p.name_of(*d.env);
        if (d.state) os << " state " << p.name_of(*d.state);
        os << " is " << (d.expected == Effect::kPermit ? "permit" : "deny");
      }
      os << "\n";
    }
    os << "  }\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace rolecheck
