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

#include "rolecheck/symbols.hpp"

#include "rolecheck/error.hpp"

namespace rolecheck {

std::string_view kind_name(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::kRole: return "role";
    case SymbolKind::kResource: return "resource";
    case SymbolKind::kGroup: return "group";
    case SymbolKind::kAction: return "action";
    case SymbolKind::kEnvironment: return "environment";
    case SymbolKind::kState: return "state";
    case SymbolKind::kUser: return "user";
  }
  return "unknown";
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text.front())) return false;
  for (char c : text) {
    if (!alpha(c) && !digit(c) && c != '_') return false;
  }
  return true;
}

SymbolRef SymbolTable::intern(std::string_view text, SymbolKind kind) {
  if (!is_identifier(text)) {
    throw Error(ErrorCode::kMalformedIdentifier,
                "malformed identifier '" + std::string(text) + "'");
  }
  if (auto it = index_.find(text); it != index_.end()) {
    if (it->second.kind != kind) {
      throw Error(ErrorCode::kDuplicateSymbolAcrossKinds,
                  "'" + std::string(text) + "' is already declared as a " +
                      std::string(kind_name(it->second.kind)) +
                      ", cannot redeclare it as a " +
                      std::string(kind_name(kind)));
    }
    return it->second;
  }
  auto& bucket = names_[static_cast<std::size_t>(kind)];
  SymbolRef ref(kind, static_cast<std::uint32_t>(bucket.size()));
  bucket.emplace_back(text);
  entries_.push_back(ref);
  index_.emplace(std::string(text), ref);
  return ref;
}

std::optional<SymbolRef> SymbolTable::find(std::string_view text) const {
  if (auto it = index_.find(text); it != index_.end()) return it->second;
  return std::nullopt;
}

const std::string& SymbolTable::name(SymbolRef ref) const {
  return names_[static_cast<std::size_t>(ref.kind)].at(ref.ordinal);
}

std::vector<RoleId> RoleSet::members() const {
  std::vector<RoleId> out;
  out.reserve(size());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(RoleId{static_cast<std::uint32_t>(std::countr_zero(rest))});
  }
  return out;
}

}  // namespace rolecheck
