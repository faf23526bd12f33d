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

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rolecheck/constraints.hpp"
#include "rolecheck/decision.hpp"
#include "rolecheck/policy.hpp"

namespace rolecheck {

enum class EventKind { kInit, kStateChange, kGrant, kExpire, kEval, kTick };

std::string_view event_kind_name(EventKind kind);

struct Event {
  Tick tick;
  EventKind kind = EventKind::kInit;
  std::string detail;

  friend bool operator==(const Event&, const Event&) = default;
};

// A user name bound to base role names, as in the corpus user tables.
struct UserBinding {
  std::string user;
  std::vector<std::string> roles;

  friend bool operator==(const UserBinding&, const UserBinding&) = default;
};

// The mutable simulation context. Every operation below takes a world by
// value and returns the successor, so histories can be forked and replayed.
class TemporalWorld {
 public:
  const Policy& policy() const { return *policy_; }
  const std::shared_ptr<const Policy>& policy_ptr() const { return policy_; }
  StateId state() const { return state_; }
  Tick now() const { return now_; }
  const UserRoster& users() const { return users_; }
  const std::map<UserId, UserAssignment>& assignments() const { return assignments_; }
  const std::vector<Event>& log() const { return log_; }

  const UserAssignment& assignment(UserId user) const;
  UserId user(std::string_view name) const;  // throws kUnknownUser
  std::vector<UserAssignment> snapshot() const;

 private:
  friend TemporalWorld init_world(std::shared_ptr<const Policy>,
                                  std::span<const UserBinding>);
  friend TemporalWorld transition_state(TemporalWorld, StateId);
  friend TemporalWorld grant_emergency(TemporalWorld, UserId, RoleId, std::uint32_t);
  friend TemporalWorld tick(TemporalWorld, std::uint64_t);
  friend std::pair<TemporalWorld, Decision> evaluate_in_world(
      TemporalWorld, UserId, ActionId, ResourceId, std::optional<EnvId>);

  void record(EventKind kind, std::string detail) {
    log_.push_back(Event{now_, kind, std::move(detail)});
  }

  std::shared_ptr<const Policy> policy_;
  UserRoster users_;
  StateId state_;
  Tick now_;
  std::map<UserId, UserAssignment> assignments_;
  std::vector<Event> log_;
};

// Tick 0, default state, no grants. Throws ConstraintError
// (kInitialConstraintViolation) when the bindings break coverage or SOD in
// the default state; Error for unknown roles or duplicate users.
TemporalWorld init_world(std::shared_ptr<const Policy> policy,
                         std::span<const UserBinding> users);

// Grants persist across transitions; only expiry removes them.
TemporalWorld transition_state(TemporalWorld world, StateId to);
TemporalWorld transition_state(TemporalWorld world, std::string_view to);

// Throws kNoEmergencySpec, kGrantNotAllowedInState, kDurationExceedsSpec or
// ConstraintError(kSodBlocked).
TemporalWorld grant_emergency(TemporalWorld world, UserId user, RoleId role,
                              std::uint32_t duration);

// Advances the clock; grants with expires_at <= new now are dropped in
// (user ordinal, grant order) order, each logging an Expire event.
TemporalWorld tick(TemporalWorld world, std::uint64_t steps = 1);

RoleSet effective_roles(const TemporalWorld& world, UserId user);

// Evaluates with the user's effective roles at this instant and logs the
// outcome.
std::pair<TemporalWorld, Decision> evaluate_in_world(TemporalWorld world, UserId user,
                                                     ActionId action,
                                                     ResourceId resource,
                                                     std::optional<EnvId> env);

struct TraceAbort {
  std::size_t line = 0;
  ErrorCode code = ErrorCode::kTraceSyntax;
  std::string message;

  friend bool operator==(const TraceAbort&, const TraceAbort&) = default;
};

struct TraceReport {
  std::vector<Event> events;
  std::vector<Decision> decisions;  // one per eval command, in order
  std::optional<TraceAbort> abort;

  bool completed() const { return !abort.has_value(); }
  // One `t=<tick> <kind> <detail>` line per event, then an abort line if
  // the script stopped early.
  std::string render() const;
};

// Script commands, one per line, `#` comments:
//   init [user=Role[,Role...] ...]
//   state <State>
//   grant <user> <Role> <duration>
//   tick [n]
//   eval <user> <Action> <Resource> [env <Env>]
// A bare `init` uses `default_users`. The first error stops the trace and is
// reported with its line number.
TraceReport run_trace(std::shared_ptr<const Policy> policy, std::string_view script,
                      std::span<const UserBinding> default_users = {});

}  // namespace rolecheck
