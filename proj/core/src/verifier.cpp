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

#include "rolecheck/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "rolecheck/constraints.hpp"

namespace rolecheck {

bool canonical_subset_less(RoleSet a, RoleSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto am = a.members();
  const auto bm = b.members();
  return std::lexicographical_compare(am.begin(), am.end(), bm.begin(), bm.end());
}

AssertionCheck check_assertion_on_instance(const Policy& p, const Assertion& a,
                                           const Instance& inst) {
  AssertionCheck result;
  auto fail = [&](Witness w) {
    result.holds = false;
    result.witness = std::move(w);
    return result;
  };

  if (std::holds_alternative<RoleCoverage>(a.body)) {
    for (std::size_t i = 0; i < inst.users.size(); ++i) {
      if (inst.users[i].empty()) return fail(Witness{i, {}, {}, {}});
    }
    return result;
  }

  if (const auto* m = std::get_if<MutualExclusion>(&a.body)) {
    auto excluded = m->excluded;
    std::sort(excluded.begin(), excluded.end());
    for (std::size_t i = 0; i < inst.users.size(); ++i) {
      const RoleSet roles = inst.users[i];
      if (!roles.contains(m->pivot)) continue;
      for (RoleId r : excluded) {
        if (roles.contains(r)) return fail(Witness{i, std::pair{m->pivot, r}, {}, {}});
      }
    }
    return result;
  }

  const auto& d = std::get<DecisionAssert>(a.body);
  for (std::size_t i = 0; i < inst.users.size(); ++i) {
    if (!inst.users[i].contains(d.role)) continue;
    for (ResourceId res : p.expand(d.target)) {
      AccessRequest req{RoleSet::single(d.role), d.action, res,
                        d.env ? d.env : inst.env, d.state.value_or(inst.state)};
      const Effect actual = evaluate(p, req).effect;
      if (actual != d.expected) return fail(Witness{i, {}, req, actual});
    }
    // The request does not depend on anything else about the user, so one
    // holder decides the instance.
    break;
  }
  return result;
}

namespace {

struct Space {
  std::vector<RoleSet> subsets;  // canonical order
  std::vector<StateId> states;
  std::vector<std::optional<EnvId>> envs;
  std::vector<std::vector<char>> allowed;  // [state position][subset]
  std::uint32_t max_users = 1;
  std::uint32_t max_ticks = 0;
};

Space build_space(const Policy& p, const Scope& scope) {
  if (scope.max_users < 1) {
    throw Error(ErrorCode::kInvalidRequest, "scope needs at least one user");
  }
  if (p.role_count() > kMaxVerifierRoles) {
    throw Error(ErrorCode::kScopeTooLarge,
                "policy declares " + std::to_string(p.role_count()) +
                    " roles; the verifier supports at most " +
                    std::to_string(kMaxVerifierRoles));
  }
  Space s;
  s.max_users = scope.max_users;
  s.max_ticks = scope.max_ticks;

  s.states = scope.check_states.empty() ? p.states() : scope.check_states;
  for (StateId st : s.states) {
    if (st.ordinal >= p.state_count()) {
      throw Error(ErrorCode::kUnknownIdentifier, "scope names an undeclared state");
    }
  }
  std::sort(s.states.begin(), s.states.end());
  s.states.erase(std::unique(s.states.begin(), s.states.end()), s.states.end());

  if (!p.has_environments()) {
    if (scope.check_envs && !scope.check_envs->empty()) {
      throw Error(ErrorCode::kEnvMismatch,
                  "policy '" + p.name + "' declares no environments");
    }
    s.envs = {std::nullopt};
  } else {
    auto envs = scope.check_envs ? *scope.check_envs : p.environments();
    for (EnvId e : envs) {
      if (e.ordinal >= p.env_count()) {
        throw Error(ErrorCode::kUnknownIdentifier, "scope names an undeclared environment");
      }
    }
    std::sort(envs.begin(), envs.end());
    envs.erase(std::unique(envs.begin(), envs.end()), envs.end());
    for (EnvId e : envs) s.envs.emplace_back(e);
    if (s.envs.empty()) s.envs = {std::nullopt};
  }

  const std::uint64_t limit = std::uint64_t{1} << p.role_count();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    const RoleSet roles(mask);
    const bool somewhere = std::any_of(s.states.begin(), s.states.end(), [&](StateId st) {
      return !first_sod_conflict(p, roles, st).has_value();
    });
    if (somewhere) s.subsets.push_back(roles);
  }
  std::sort(s.subsets.begin(), s.subsets.end(), canonical_subset_less);

  s.allowed.resize(s.states.size());
  for (std::size_t i = 0; i < s.states.size(); ++i) {
    s.allowed[i].reserve(s.subsets.size());
    for (RoleSet roles : s.subsets) {
      s.allowed[i].push_back(!first_sod_conflict(p, roles, s.states[i]).has_value());
    }
  }
  return s;
}

long double sequence_count(std::size_t n, std::uint32_t k, bool reduced) {
  long double c = 1;
  for (std::uint32_t i = 1; i <= k; ++i) {
    c = reduced ? c * static_cast<long double>(n - 1 + i) / i
                : c * static_cast<long double>(n);
  }
  return c;
}

std::uint64_t estimate(const Policy& p, const Space& s, bool reduced, bool grants) {
  long double total = 0;
  for (std::uint32_t k = 1; k <= s.max_users; ++k) {
    long double per_base = 1;
    if (grants) {
      for (const auto& spec : p.emergency_specs) {
        per_base += static_cast<long double>(k) * spec.max_duration * (s.max_ticks + 1.0L);
      }
    }
    total += sequence_count(s.subsets.size(), k, reduced) *
             static_cast<long double>(s.states.size() * s.envs.size()) * per_base;
    if (total > static_cast<long double>(kScopeGuard)) {
      throw Error(ErrorCode::kScopeTooLarge,
                  "scope exceeds " + std::to_string(kScopeGuard) +
                      " instances; reduce max_users or max_ticks");
    }
  }
  return static_cast<std::uint64_t>(total);
}

// Lexicographic successor; non-decreasing sequences only when `reduced`.
bool advance(std::vector<std::uint32_t>& idx, std::size_t n, bool reduced) {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (idx[i] + 1 < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < idx.size(); ++j) idx[j] = reduced ? idx[i] : 0;
      return true;
    }
  }
  return false;
}

struct Position {
  std::vector<std::uint32_t> seq;
  std::size_t state_pos = 0;
  std::size_t env_pos = 0;

  friend auto operator<=>(const Position&, const Position&) = default;
};

struct BaseOutcome {
  std::uint64_t checked = 0;  // up to and including the counterexample
  std::optional<Counterexample> counterexample;
};

class Checker {
 public:
  Checker(const Policy& p, const Assertion& a, const Space& s, bool grants)
      : p_(p), a_(a), s_(s), grants_(grants) {}

  std::uint64_t count(const std::vector<RoleSet>& users, StateId state) const {
    std::uint64_t n = 1;
    if (!grants_) return n;
    for (const auto& spec : p_.emergency_specs) {
      if (!spec.grantable(state)) continue;
      for (RoleSet roles : users) {
        if (grant_possible(roles, spec.role, state)) {
          n += std::uint64_t{spec.max_duration} * (s_.max_ticks + 1);
        }
      }
    }
    return n;
  }

  BaseOutcome check(const std::vector<RoleSet>& users, StateId state,
                    std::optional<EnvId> env) const {
    BaseOutcome out;
    Instance inst{users, state, Tick{0}, env, std::nullopt};
    if (probe(inst, out)) return out;
    if (!grants_) return out;
    for (const auto& spec : p_.emergency_specs) {
      if (!spec.grantable(state)) continue;
      for (std::size_t j = 0; j < users.size(); ++j) {
        if (!grant_possible(users[j], spec.role, state)) continue;
        for (std::uint32_t d = 1; d <= spec.max_duration; ++d) {
          for (std::uint32_t t = 0; t <= s_.max_ticks; ++t) {
            inst.users = users;
            if (t < d) inst.users[j].insert(spec.role);
            inst.tick = Tick{t};
            inst.grant = GrantProbe{j, spec.role, d};
            if (probe(inst, out)) return out;
          }
        }
      }
    }
    return out;
  }

 private:
  bool grant_possible(RoleSet roles, RoleId role, StateId state) const {
    if (roles.contains(role)) return false;
    roles.insert(role);
    return !first_sod_conflict(p_, roles, state).has_value();
  }

  bool probe(const Instance& inst, BaseOutcome& out) const {
    ++out.checked;
    auto r = check_assertion_on_instance(p_, a_, inst);
    if (r.holds) return false;
    out.counterexample = Counterexample{inst, a_.name, *r.witness};
    return true;
  }

  const Policy& p_;
  const Assertion& a_;
  const Space& s_;
  bool grants_;
};

std::vector<RoleSet> users_of(const Space& s, const std::vector<std::uint32_t>& idx) {
  std::vector<RoleSet> users;
  users.reserve(idx.size());
  for (auto i : idx) users.push_back(s.subsets[i]);
  return users;
}

bool admissible(const Space& s, const std::vector<std::uint32_t>& idx, std::size_t state_pos) {
  const auto& allowed = s.allowed[state_pos];
  return std::all_of(idx.begin(), idx.end(), [&](auto i) { return allowed[i] != 0; });
}

struct LevelSearch {
  std::mutex mu;
  std::atomic<bool> found{false};
  std::optional<Position> best;
  std::optional<BaseOutcome> best_outcome;
  std::atomic<std::uint64_t> checked{0};

  bool beaten(const std::vector<std::uint32_t>& seq) {
    if (!found.load(std::memory_order_acquire)) return false;
    std::lock_guard lock(mu);
    return best && seq > best->seq;
  }

  void offer(Position pos, BaseOutcome outcome) {
    std::lock_guard lock(mu);
    if (!best || pos < *best) {
      best = std::move(pos);
      best_outcome = std::move(outcome);
      found.store(true, std::memory_order_release);
    }
  }
};

void search_partition(const Space& s, const Checker& checker, std::uint32_t k, bool reduced,
                      unsigned worker, unsigned workers, LevelSearch& search) {
  const auto n = static_cast<std::uint32_t>(s.subsets.size());
  std::uint64_t checked = 0;
  for (std::uint32_t first = worker; first < n; first += workers) {
    std::vector<std::uint32_t> idx(k, reduced ? first : 0);
    idx[0] = first;
    do {
      if (search.beaten(idx)) {
        search.checked += checked;
        return;
      }
      const auto users = users_of(s, idx);
      for (std::size_t sp = 0; sp < s.states.size(); ++sp) {
        if (!admissible(s, idx, sp)) continue;
        for (std::size_t ep = 0; ep < s.envs.size(); ++ep) {
          auto outcome = checker.check(users, s.states[sp], s.envs[ep]);
          checked += outcome.checked;
          if (outcome.counterexample) {
            search.offer(Position{idx, sp, ep}, std::move(outcome));
            search.checked += checked;
            return;
          }
        }
      }
    } while (advance(idx, n, reduced) && idx[0] == first);
  }
  search.checked += checked;
}

// Checks performed in level k strictly before `pos`.
std::uint64_t count_before(const Space& s, const Checker& checker, std::uint32_t k,
                           bool reduced, const Position& pos) {
  const auto n = s.subsets.size();
  std::uint64_t total = 0;
  std::vector<std::uint32_t> idx(k, 0);
  do {
    if (idx > pos.seq) break;
    const auto users = users_of(s, idx);
    for (std::size_t sp = 0; sp < s.states.size(); ++sp) {
      if (!admissible(s, idx, sp)) continue;
      for (std::size_t ep = 0; ep < s.envs.size(); ++ep) {
        if (Position{idx, sp, ep} >= pos) return total;
        total += checker.count(users, s.states[sp]);
      }
    }
  } while (advance(idx, n, reduced));
  return total;
}

}  // namespace

std::uint64_t estimate_instance_count(const Policy& p, const Scope& scope,
                                      bool symmetry_reduction) {
  const Space s = build_space(p, scope);
  return estimate(p, s, symmetry_reduction, false);
}

void for_each_instance(const Policy& p, const Scope& scope, bool symmetry_reduction,
                       const std::function<bool(const Instance&)>& visit) {
  const Space s = build_space(p, scope);
  estimate(p, s, symmetry_reduction, false);
  const auto n = s.subsets.size();
  if (n == 0) return;
  for (std::uint32_t k = 1; k <= s.max_users; ++k) {
    std::vector<std::uint32_t> idx(k, 0);
    do {
      Instance inst{users_of(s, idx), StateId{}, Tick{0}, std::nullopt, std::nullopt};
      for (std::size_t sp = 0; sp < s.states.size(); ++sp) {
        if (!admissible(s, idx, sp)) continue;
        inst.state = s.states[sp];
        for (const auto& env : s.envs) {
          inst.env = env;
          if (!visit(inst)) return;
        }
      }
    } while (advance(idx, n, symmetry_reduction));
  }
}

std::vector<Instance> enumerate_instances(const Policy& p, const Scope& scope,
                                          bool symmetry_reduction) {
  std::vector<Instance> out;
  for_each_instance(p, scope, symmetry_reduction, [&](const Instance& i) {
    out.push_back(i);
    return true;
  });
  return out;
}

VerifyResult verify(const Policy& p, const Assertion& a, const Scope& scope,
                    const VerifyOptions& options) {
  const Space s = build_space(p, scope);
  estimate(p, s, options.symmetry_reduction, options.explore_grants);
  const Checker checker(p, a, s, options.explore_grants);
  const unsigned workers = std::max(1U, options.workers);
  const auto n = static_cast<std::uint32_t>(s.subsets.size());

  VerifyResult result;
  if (n == 0) return result;
  for (std::uint32_t k = 1; k <= s.max_users; ++k) {
    LevelSearch search;
    if (workers == 1) {
      search_partition(s, checker, k, options.symmetry_reduction, 0, 1, search);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          search_partition(s, checker, k, options.symmetry_reduction, w, workers, search);
        });
      }
    }
    if (search.best) {
      result.verdict = Verdict::kCounterexampleFound;
      result.instances_checked +=
          count_before(s, checker, k, options.symmetry_reduction, *search.best) +
          search.best_outcome->checked;
      result.counterexample = std::move(search.best_outcome->counterexample);
      return result;
    }
    result.instances_checked += search.checked.load();
  }
  return result;
}

std::vector<std::pair<std::string, VerifyResult>> verify_all(const Policy& p,
                                                             const Scope& scope,
                                                             const VerifyOptions& options) {
  if (p.assertions.empty()) {
    throw Error(ErrorCode::kNoAssertions, "policy '" + p.name + "' has no assertions");
  }
  std::vector<std::pair<std::string, VerifyResult>> out;
  for (const auto& a : p.assertions) out.emplace_back(a.name, verify(p, a, scope, options));
  return out;
}

const Assertion& find_assertion(const Policy& p, std::string_view name) {
  for (const auto& a : p.assertions) {
    if (a.name == name) return a;
  }
  throw Error(ErrorCode::kUnknownAssertion,
              "policy '" + p.name + "' has no assertion '" + std::string(name) + "'");
}

}  // namespace rolecheck
