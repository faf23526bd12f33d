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

#include "rolecheck/error.hpp"

namespace rolecheck {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedIdentifier: return "MalformedIdentifier";
    case ErrorCode::kDuplicateSymbolAcrossKinds: return "DuplicateSymbolAcrossKinds";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnresolvedReference: return "UnresolvedReference";
    case ErrorCode::kMissingSection: return "MissingSection";
    case ErrorCode::kInvalidPolicy: return "InvalidPolicy";
    case ErrorCode::kUnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::kEnvMismatch: return "EnvMismatch";
    case ErrorCode::kInvalidRequest: return "InvalidRequest";
    case ErrorCode::kInitialConstraintViolation: return "InitialConstraintViolation";
    case ErrorCode::kUnknownState: return "UnknownState";
    case ErrorCode::kUnknownUser: return "UnknownUser";
    case ErrorCode::kGrantNotAllowedInState: return "GrantNotAllowedInState";
    case ErrorCode::kDurationExceedsSpec: return "DurationExceedsSpec";
    case ErrorCode::kSodBlocked: return "SodBlocked";
    case ErrorCode::kNoEmergencySpec: return "NoEmergencySpec";
    case ErrorCode::kTraceSyntax: return "TraceSyntax";
    case ErrorCode::kScopeTooLarge: return "ScopeTooLarge";
    case ErrorCode::kNoAssertions: return "NoAssertions";
    case ErrorCode::kUnknownAssertion: return "UnknownAssertion";
    case ErrorCode::kUnknownCorpusId: return "UnknownCorpusId";
  }
  return "Unknown";
}

namespace {

std::string with_location(const std::string& message,
                          const std::optional<SourceLoc>& loc) {
  if (!loc) return message;
  return "line " + std::to_string(loc->line) + ", column " +
         std::to_string(loc->column) + ": " + message;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<SourceLoc> loc)
    : std::runtime_error(with_location(message, loc)),
      code_(code),
      loc_(loc) {}

}  // namespace rolecheck
