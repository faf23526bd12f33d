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

#include <optional>
#include <string>
#include <string_view>

#include "rolecheck/decision.hpp"
#include "rolecheck/policy.hpp"
#include "rolecheck/verifier.hpp"

namespace rolecheck {

enum class MatrixFormat { kTable, kCsv, kStructured };

// "table", "csv" or "structured"; nullopt otherwise.
std::optional<MatrixFormat> parse_matrix_format(std::string_view text);

// Cells in declaration order (role, resource, action).
//   table:      aligned columns, one row per (role, resource), one column per action
//   csv:        `role,resource,action,effect` header, one row per cell
//   structured: `role=R resource=X action=A state=S env=E effect=PERMIT`, env `-` if absent
std::string render_matrix(const Policy& policy, const PermissionMatrix& matrix,
                          MatrixFormat format);

std::string render_request(const Policy& policy, const AccessRequest& request);

// Matched rules with their source lines, the combined outcome, whether the
// deny-biased default fired, and the final effect on the last line.
std::string render_explanation(const Policy& policy, const AccessRequest& request,
                               const Decision& decision);

std::string render_instance(const Policy& policy, const Instance& instance,
                            std::string_view indent = "  ");

// `<name>: VALID (scope users=N states=S, K instances)` or a
// `<name>: COUNTEREXAMPLE` block.
std::string render_verify_result(const Policy& policy, std::string_view name,
                                 const VerifyResult& result, const Scope& scope);

}  // namespace rolecheck
