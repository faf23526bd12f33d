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

#include <string>
#include <string_view>
#include <vector>

#include "rolecheck/policy.hpp"

namespace rolecheck {

// Parses the policy definition language. Throws Error with one of
// kSyntaxError, kUnresolvedReference, kDuplicateSymbolAcrossKinds,
// kMissingSection, kMalformedIdentifier or kInvalidPolicy; every error
// carries the offending source location.
Policy parse_policy(std::string_view source);

// Canonical text form: fixed section order, declaration order preserved.
// parse_policy(serialize_policy(p)) == p, and serializing is idempotent.
std::string serialize_policy(const Policy& policy);

// One rule in source syntax, e.g. `deny ExtUsers * on *`.
std::string rule_text(const Policy& policy, const Rule& rule);

enum class Severity { kWarning, kError };

enum class DiagnosticKind {
  kShadowedRule,
  kDuplicateRule,
  kUnusedRole,
  kSodRoleWithoutRules,
  kEmergencyNeverGrantable,
};

std::string_view diagnostic_kind_name(DiagnosticKind kind);

struct Diagnostic {
  Severity severity = Severity::kWarning;
  DiagnosticKind kind = DiagnosticKind::kUnusedRole;
  std::string message;
  SourceLoc loc;
};

// Lint pass over a parsed policy. Diagnostics are data, never thrown.
std::vector<Diagnostic> validate_policy(const Policy& policy);

std::string render_diagnostic(const Diagnostic& d);

}  // namespace rolecheck
