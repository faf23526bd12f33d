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

#include "rolecheck/render.hpp"

#include <algorithm>
#include <sstream>

#include "rolecheck/dsl.hpp"

namespace rolecheck {

namespace {

std::string env_text(const Policy& p, const std::optional<EnvId>& env) {
  return env ? p.name_of(*env) : std::string("-");
}

std::string roles_text(const Policy& p, RoleSet roles, std::string_view sep) {
  std::string out;
  for (RoleId r : roles.members()) {
    if (!out.empty()) out += sep;
    out += p.name_of(r);
  }
  return out.empty() ? std::string("-") : out;
}

void pad(std::ostream& os, const std::string& text, std::size_t width) {
  os << text << std::string(width - text.size(), ' ');
}

}  // namespace

std::optional<MatrixFormat> parse_matrix_format(std::string_view text) {
  if (text == "table") return MatrixFormat::kTable;
  if (text == "csv") return MatrixFormat::kCsv;
  if (text == "structured") return MatrixFormat::kStructured;
  return std::nullopt;
}

std::string render_matrix(const Policy& p, const PermissionMatrix& m, MatrixFormat format) {
  std::ostringstream os;
  const std::string state = p.name_of(m.state());
  const std::string env = env_text(p, m.env());

  if (format == MatrixFormat::kCsv) {
    os << "role,resource,action,effect\n";
    for (RoleId r : p.roles())
      for (ResourceId res : p.resources())
        for (ActionId a : p.actions())
          os << p.name_of(r) << ',' << p.name_of(res) << ',' << p.name_of(a) << ','
             << effect_name(m.at(r, res, a)) << '\n';
    return os.str();
  }

  if (format == MatrixFormat::kStructured) {
    for (RoleId r : p.roles())
      for (ResourceId res : p.resources())
        for (ActionId a : p.actions())
          os << "role=" << p.name_of(r) << " resource=" << p.name_of(res)
             << " action=" << p.name_of(a) << " state=" << state << " env=" << env
             << " effect=" << effect_name(m.at(r, res, a)) << '\n';
    return os.str();
  }

  std::size_t role_w = 4;
  std::size_t res_w = 8;
  for (RoleId r : p.roles()) role_w = std::max(role_w, p.name_of(r).size());
  for (ResourceId res : p.resources()) res_w = std::max(res_w, p.name_of(res).size());
  std::vector<std::size_t> action_w;
  for (ActionId a : p.actions()) {
    action_w.push_back(std::max<std::size_t>(p.name_of(a).size(), 6));
  }

  os << "policy " << p.name << " state=" << state << " env=" << env << '\n';
  pad(os, "role", role_w + 2);
  pad(os, "resource", res_w);
  for (ActionId a : p.actions()) {
    os << "  ";
    pad(os, p.name_of(a), action_w[a.ordinal]);
  }
  os << '\n';
  for (RoleId r : p.roles()) {
    for (ResourceId res : p.resources()) {
      pad(os, p.name_of(r), role_w + 2);
      pad(os, p.name_of(res), res_w);
      for (ActionId a : p.actions()) {
        os << "  ";
        pad(os, std::string(effect_name(m.at(r, res, a))), action_w[a.ordinal]);
      }
      os << '\n';
    }
  }
  os << "permits " << m.permit_count() << " of " << m.size() << '\n';
  std::string out = os.str();
  // Trailing padding on the last column is noise in diffs.
  std::string trimmed;
  std::istringstream lines(out);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + '\n';
  }
  return trimmed;
}

std::string render_request(const Policy& p, const AccessRequest& req) {
  return "roles=" + roles_text(p, req.roles, "+") + " action=" + p.name_of(req.action) +
         " resource=" + p.name_of(req.resource) + " state=" + p.name_of(req.state) +
         " env=" + env_text(p, req.env);
}

std::string render_explanation(const Policy& p, const AccessRequest& req, const Decision& d) {
  std::ostringstream os;
  os << "request " << render_request(p, req) << '\n';
  if (d.matched_rules.empty()) {
    os << "matched rules: none\n";
  } else {
    os << "matched rules:\n";
    for (const auto& m : d.matched_rules) {
      const Rule& rule = p.rules[m.index];
      os << "  rule #" << m.index + 1 << " (line " << rule.loc.line << "): "
         << rule_text(p, rule) << '\n';
    }
  }
  os << "combined: " << outcome_name(d.outcome_before_enforcement) << '\n';
  switch (d.outcome_before_enforcement) {
    case CombinedOutcome::kDeny: {
      const auto it = std::find_if(d.matched_rules.begin(), d.matched_rules.end(),
                                   [](const MatchedRule& m) { return m.effect == Effect::kDeny; });
      os << "controlling rule #" << it->index + 1 << " (line " << p.rules[it->index].loc.line
         << "): deny overrides\n";
      break;
    }
    case CombinedOutcome::kPermit:
      os << "controlling rule #" << d.matched_rules.front().index + 1 << " (line "
         << p.rules[d.matched_rules.front().index].loc.line << "): no deny matched\n";
      break;
    case CombinedOutcome::kNotApplicable:
      os << "no applicable rule; deny-biased default\n";
      break;
  }
  os << effect_name(d.effect) << '\n';
  return os.str();
}

std::string render_instance(const Policy& p, const Instance& inst, std::string_view indent) {
  std::ostringstream os;
  for (std::size_t i = 0; i < inst.users.size(); ++i) {
    os << indent << "user" << i << ": " << roles_text(p, inst.users[i], ", ") << '\n';
  }
  os << indent << "state: " << p.name_of(inst.state) << '\n';
  os << indent << "env: " << env_text(p, inst.env) << '\n';
  os << indent << "tick: " << inst.tick.value << '\n';
  if (inst.grant) {
    os << indent << "grant: user" << inst.grant->user << ' ' << p.name_of(inst.grant->role)
       << " duration=" << inst.grant->duration << '\n';
  }
  return os.str();
}

std::string render_verify_result(const Policy& p, std::string_view name, const VerifyResult& r,
                                 const Scope& scope) {
  std::ostringstream os;
  os << name << ": ";
  if (r.valid()) {
    const std::size_t states =
        scope.check_states.empty() ? p.state_count() : scope.check_states.size();
    os << "VALID (scope users=" << scope.max_users << " states=" << states << ", "
       << r.instances_checked << " instances)\n";
    return os.str();
  }
  const auto& ce = *r.counterexample;
  os << "COUNTEREXAMPLE\n" << render_instance(p, ce.instance);
  const auto& w = ce.witness;
  os << "  witness: user" << w.user;
  if (w.conflict) {
    os << " holds " << p.name_of(w.conflict->first) << '+' << p.name_of(w.conflict->second);
  } else if (w.request && w.actual) {
    const Effect expected = *w.actual == Effect::kPermit ? Effect::kDeny : Effect::kPermit;
    os << ' ' << render_request(p, *w.request) << " expected " << effect_name(expected)
       << " got " << effect_name(*w.actual);
  } else {
    os << " holds no role";
  }
  os << "\n  instances: " << r.instances_checked << '\n';
  return os.str();
}

}  // namespace rolecheck
