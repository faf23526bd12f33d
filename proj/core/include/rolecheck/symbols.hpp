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

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rolecheck {

// Kinds are listed in canonical rank order.
enum class SymbolKind : std::uint8_t {
  kRole,
  kResource,
  kGroup,
  kAction,
  kEnvironment,
  kState,
  kUser,
};

inline constexpr std::size_t kSymbolKindCount = 7;

std::string_view kind_name(SymbolKind kind);

// Typed ordinal into a SymbolTable. Ordinals are per kind and contiguous
// from 0 in declaration order.
template <SymbolKind K>
struct Id {
  static constexpr SymbolKind kind = K;
  std::uint32_t ordinal = 0;

  friend constexpr auto operator<=>(Id, Id) = default;
};

using RoleId = Id<SymbolKind::kRole>;
using ResourceId = Id<SymbolKind::kResource>;
using GroupId = Id<SymbolKind::kGroup>;
using ActionId = Id<SymbolKind::kAction>;
using EnvId = Id<SymbolKind::kEnvironment>;
using StateId = Id<SymbolKind::kState>;
using UserId = Id<SymbolKind::kUser>;

// Kind-erased identifier.
struct SymbolRef {
  SymbolKind kind = SymbolKind::kRole;
  std::uint32_t ordinal = 0;

  constexpr SymbolRef() = default;
  constexpr SymbolRef(SymbolKind k, std::uint32_t o) : kind(k), ordinal(o) {}
  template <SymbolKind K>
  constexpr SymbolRef(Id<K> id) : kind(K), ordinal(id.ordinal) {}  // NOLINT

  friend constexpr bool operator==(SymbolRef, SymbolRef) = default;
};

// Total order: kind rank first, then ordinal.
constexpr std::strong_ordering canonical_order(SymbolRef a, SymbolRef b) {
  if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) {
    return c;
  }
  return a.ordinal <=> b.ordinal;
}

struct Tick {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(Tick, Tick) = default;
};

// [A-Za-z][A-Za-z0-9_]*
bool is_identifier(std::string_view text);

// Flat namespace of identifiers shared by every kind. Mutable while a
// policy is being parsed, read-only afterwards.
class SymbolTable {
 public:
  // Returns the existing id when (text, kind) is already present.
  // Throws kMalformedIdentifier or kDuplicateSymbolAcrossKinds.
  SymbolRef intern(std::string_view text, SymbolKind kind);

  template <SymbolKind K>
  Id<K> intern(std::string_view text) {
    return Id<K>{intern(text, K).ordinal};
  }

  std::optional<SymbolRef> find(std::string_view text) const;

  template <SymbolKind K>
  std::optional<Id<K>> find_as(std::string_view text) const {
    auto ref = find(text);
    if (!ref || ref->kind != K) return std::nullopt;
    return Id<K>{ref->ordinal};
  }

  bool contains(SymbolRef ref) const {
    return ref.ordinal < count(ref.kind);
  }

  const std::string& name(SymbolRef ref) const;

  std::size_t count(SymbolKind kind) const {
    return names_[static_cast<std::size_t>(kind)].size();
  }

  const std::vector<std::string>& names(SymbolKind kind) const {
    return names_[static_cast<std::size_t>(kind)];
  }

  // Every entry in interning order.
  const std::vector<SymbolRef>& entries() const { return entries_; }

  // Equal when every kind lists the same names in the same order.
  friend bool operator==(const SymbolTable& a, const SymbolTable& b) {
    return a.names_ == b.names_;
  }

 private:
  std::array<std::vector<std::string>, kSymbolKindCount> names_;
  std::vector<SymbolRef> entries_;
  std::map<std::string, SymbolRef, std::less<>> index_;
};

// Fixed-capacity set of roles backed by a 64-bit mask.
class RoleSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr RoleSet() = default;
  constexpr explicit RoleSet(std::uint64_t bits) : bits_(bits) {}
  RoleSet(std::initializer_list<RoleId> roles) {
    for (RoleId r : roles) insert(r);
  }

  static constexpr RoleSet single(RoleId r) {
    return RoleSet(std::uint64_t{1} << r.ordinal);
  }

  constexpr bool contains(RoleId r) const {
    return (bits_ >> r.ordinal) & 1U;
  }
  constexpr void insert(RoleId r) { bits_ |= std::uint64_t{1} << r.ordinal; }
  constexpr void erase(RoleId r) { bits_ &= ~(std::uint64_t{1} << r.ordinal); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool intersects(RoleSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool includes(RoleSet o) const {
    return (bits_ & o.bits_) == o.bits_;
  }

  // Members in ascending ordinal order.
  std::vector<RoleId> members() const;

  friend constexpr RoleSet operator|(RoleSet a, RoleSet b) {
    return RoleSet(a.bits_ | b.bits_);
  }
  friend constexpr RoleSet operator&(RoleSet a, RoleSet b) {
    return RoleSet(a.bits_ & b.bits_);
  }
  friend constexpr bool operator==(RoleSet, RoleSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Subjects live outside the policy but share its namespace: a roster is
// seeded with the policy's symbols so a user can't shadow a role.
class UserRoster {
 public:
  UserRoster() = default;
  explicit UserRoster(SymbolTable policy_symbols)
      : symbols_(std::move(policy_symbols)) {}

  UserId add(std::string_view name) {
    return symbols_.intern<SymbolKind::kUser>(name);
  }
  std::optional<UserId> find(std::string_view name) const {
    return symbols_.find_as<SymbolKind::kUser>(name);
  }
  const std::string& name(UserId id) const { return symbols_.name(id); }
  std::size_t size() const { return symbols_.count(SymbolKind::kUser); }

 private:
  SymbolTable symbols_;
};

}  // namespace rolecheck
