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
#include <stdexcept>
#include <string>
#include <string_view>

namespace rolecheck {

// 1-based position in a policy file or trace script. Locations are
// diagnostic metadata only and never take part in structural equality.
struct SourceLoc {
  int line = 0;
  int column = 0;

  friend constexpr bool operator==(const SourceLoc&, const SourceLoc&) {
    return true;
  }
};

enum class ErrorCode {
  // core-model / policy-dsl
  kMalformedIdentifier,
  kDuplicateSymbolAcrossKinds,
  kSyntaxError,
  kUnresolvedReference,
  kMissingSection,
  kInvalidPolicy,
  // decision-engine
  kUnknownIdentifier,
  kEnvMismatch,
  kInvalidRequest,
  // temporal-engine
  kInitialConstraintViolation,
  kUnknownState,
  kUnknownUser,
  kGrantNotAllowedInState,
  kDurationExceedsSpec,
  kSodBlocked,
  kNoEmergencySpec,
  kTraceSyntax,
  // bounded-verifier
  kScopeTooLarge,
  kNoAssertions,
  kUnknownAssertion,
  // corpus
  kUnknownCorpusId,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<SourceLoc> loc = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourceLoc>& location() const noexcept { return loc_; }

 private:
  ErrorCode code_;
  std::optional<SourceLoc> loc_;
};

}  // namespace rolecheck
