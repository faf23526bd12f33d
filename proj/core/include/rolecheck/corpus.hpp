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

#include <memory>
#include <string_view>
#include <vector>

#include "rolecheck/policy.hpp"
#include "rolecheck/temporal.hpp"

namespace rolecheck {

// Built-in example policies: policy1 (data-center servers), policy2
// (application hosting with prod/test environments) and policy3
// (infrastructure engineers).
struct CorpusEntry {
  std::shared_ptr<const Policy> policy;
  std::vector<UserBinding> users;
};

std::vector<std::string_view> corpus_ids();

// The policy file text, byte for byte. Throws kUnknownCorpusId.
std::string_view corpus_source(std::string_view id);

std::vector<UserBinding> corpus_users(std::string_view id);

// Parses on every call. Throws kUnknownCorpusId.
CorpusEntry load_builtin(std::string_view id);

}  // namespace rolecheck
