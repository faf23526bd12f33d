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

#include "rolecheck/policy.hpp"

namespace rolecheck {

std::string_view effect_name(Effect e) {
  return e == Effect::kPermit ? "PERMIT" : "DENY";
}

namespace {

template <SymbolKind K>
std::vector<Id<K>> all_ids(const SymbolTable& symbols) {
  std::vector<Id<K>> out(symbols.count(K));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = Id<K>{static_cast<std::uint32_t>(i)};
  }
  return out;
}

}  // namespace

std::vector<RoleId> Policy::roles() const {
  return all_ids<SymbolKind::kRole>(symbols);
}
std::vector<ResourceId> Policy::resources() const {
  return all_ids<SymbolKind::kResource>(symbols);
}
std::vector<ActionId> Policy::actions() const {
  return all_ids<SymbolKind::kAction>(symbols);
}
std::vector<EnvId> Policy::environments() const {
  return all_ids<SymbolKind::kEnvironment>(symbols);
}
std::vector<StateId> Policy::states() const {
  return all_ids<SymbolKind::kState>(symbols);
}

RoleSet Policy::all_roles() const {
  const auto n = role_count();
  return RoleSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

bool Policy::covers(const Target& target, ResourceId resource) const {
  if (const auto* r = std::get_if<ResourceId>(&target)) return *r == resource;
  const auto g = std::get<GroupId>(target);
  const auto& owner = resource_group.at(resource.ordinal);
  return owner && *owner == g;
}

std::vector<ResourceId> Policy::expand(const Target& target) const {
  if (const auto* r = std::get_if<ResourceId>(&target)) return {*r};
  return groups.at(std::get<GroupId>(target).ordinal);
}

std::string Policy::target_name(const Target& target) const {
  return std::visit([&](auto id) { return symbols.name(id); }, target);
}

}  // namespace rolecheck
