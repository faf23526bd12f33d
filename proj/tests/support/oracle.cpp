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

#include "oracle.hpp"

#include <algorithm>
#include <functional>

namespace rolecheck::testing {

namespace {

bool target_hits(const Policy& p, const Target& t, ResourceId res) {
  if (const auto* r = std::get_if<ResourceId>(&t)) return r->ordinal == res.ordinal;
  const auto& members = p.groups.at(std::get<GroupId>(t).ordinal);
  for (ResourceId m : members) {
    if (m.ordinal == res.ordinal) return true;
  }
  return false;
}

template <typename T, typename Pred>
bool selector_hits(const Selector<T>& s, Pred pred) {
  if (s.wildcard) return true;
  for (const auto& item : s.items) {
    if (pred(item)) return true;
  }
  return false;
}

}  // namespace

std::vector<std::size_t> naive_matches(const Policy& p, const AccessRequest& r) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.rules.size(); ++i) {
    const Rule& rule = p.rules[i];
    if (((r.roles.bits() >> rule.role.ordinal) & 1U) == 0) continue;
    if (!selector_hits(rule.actions, [&](ActionId a) { return a.ordinal == r.action.ordinal; }))
      continue;
    if (!selector_hits(rule.targets, [&](const Target& t) { return target_hits(p, t, r.resource); }))
      continue;
    if (!rule.envs.wildcard) {
      if (!r.env) continue;
      if (!selector_hits(rule.envs, [&](EnvId e) { return e.ordinal == r.env->ordinal; })) continue;
    }
    if (!selector_hits(rule.states, [&](StateId s) { return s.ordinal == r.state.ordinal; }))
      continue;
    out.push_back(i);
  }
  return out;
}

Effect naive_decide(const Policy& p, const AccessRequest& r) {
  bool permit = false;
  for (std::size_t i : naive_matches(p, r)) {
    if (p.rules[i].effect == Effect::kDeny) return Effect::kDeny;
    permit = true;
  }
  return permit ? Effect::kPermit : Effect::kDeny;
}

bool naive_sod_conflict(const Policy& p, RoleSet roles, StateId state) {
  for (const auto& c : p.sod_constraints) {
    if (!c.states.wildcard &&
        std::find(c.states.items.begin(), c.states.items.end(), state) == c.states.items.end())
      continue;
    if (!roles.contains(c.pivot)) continue;
    for (RoleId r : c.excluded) {
      if (roles.contains(r)) return true;
    }
  }
  return false;
}

std::vector<RoleSet> naive_subsets(const Policy& p, StateId state) {
  std::vector<RoleSet> out;
  const std::uint64_t n = p.role_count();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!naive_sod_conflict(p, RoleSet(mask), state)) out.push_back(RoleSet(mask));
  }
  // size, then ascending member ordinals
  std::sort(out.begin(), out.end(), [](RoleSet a, RoleSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

std::uint64_t multichoose(std::uint64_t n, std::uint64_t k) {
  // C(n + k - 1, k), built up so every intermediate is an exact binomial.
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - 1 + i) / i;
  return c;
}

std::uint64_t closed_form_instances(const Policy& p, std::uint32_t max_users) {
  std::uint64_t total = 0;
  for (StateId s : p.states()) {
    const auto n = naive_subsets(p, s).size();
    for (std::uint32_t k = 1; k <= max_users; ++k) total += multichoose(n, k);
  }
  return total * std::max<std::uint64_t>(1, p.env_count());
}

bool naive_assertion_holds(const Policy& p, const Assertion& a,
                           const std::vector<RoleSet>& users, StateId state,
                           std::optional<EnvId> env) {
  if (std::holds_alternative<RoleCoverage>(a.body)) {
    return std::none_of(users.begin(), users.end(), [](RoleSet r) { return r.empty(); });
  }
  if (const auto* m = std::get_if<MutualExclusion>(&a.body)) {
    for (RoleSet u : users) {
      if (!u.contains(m->pivot)) continue;
      for (RoleId r : m->excluded) {
        if (u.contains(r)) return false;
      }
    }
    return true;
  }
  const auto& d = std::get<DecisionAssert>(a.body);
  for (RoleSet u : users) {
    if (!u.contains(d.role)) continue;
    for (ResourceId res : p.resources()) {
      if (!target_hits(p, d.target, res)) continue;
      AccessRequest req{RoleSet::single(d.role), d.action, res, d.env ? d.env : env,
                        d.state.value_or(state)};
      if (naive_decide(p, req) != d.expected) return false;
    }
  }
  return true;
}

NaiveVerdict naive_verify(const Policy& p, const Assertion& a, std::uint32_t max_users) {
  NaiveVerdict v;
  std::vector<std::optional<EnvId>> envs;
  if (p.has_environments()) {
    for (EnvId e : p.environments()) envs.emplace_back(e);
  } else {
    envs.emplace_back(std::nullopt);
  }
  // Union over states, same ordering as the per-state lists.
  std::vector<RoleSet> all;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << p.role_count()); ++mask) {
    RoleSet r(mask);
    for (StateId s : p.states()) {
      if (!naive_sod_conflict(p, r, s)) {
        all.push_back(r);
        break;
      }
    }
  }
  std::sort(all.begin(), all.end(), [](RoleSet x, RoleSet y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.members() < y.members();
  });

  std::vector<RoleSet> users;
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t from) {
    if (users.size() == k) {
      for (StateId s : p.states()) {
        bool ok = std::none_of(users.begin(), users.end(),
                               [&](RoleSet u) { return naive_sod_conflict(p, u, s); });
        if (!ok) continue;
        for (const auto& e : envs) {
          ++v.checked;
          if (!naive_assertion_holds(p, a, users, s, e)) {
            v.valid = false;
            v.counterexample = Instance{users, s, Tick{0}, e, std::nullopt};
            return true;
          }
        }
      }
      return false;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
      users.push_back(all[i]);
      if (rec(k, i)) return true;
      users.pop_back();
    }
    return false;
  };
  for (std::uint32_t k = 1; k <= max_users; ++k) {
    if (rec(k, 0)) return v;
  }
  return v;
}

}  // namespace rolecheck::testing
