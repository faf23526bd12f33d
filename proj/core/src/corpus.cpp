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

#include "rolecheck/corpus.hpp"

#include <array>
#include <string>

#include "rolecheck/dsl.hpp"

namespace rolecheck {
namespace corpus_detail {
extern const std::string_view k_policy1_source;
extern const std::string_view k_policy2_source;
extern const std::string_view k_policy3_source;
}  // namespace corpus_detail

namespace {

struct Builtin {
  std::string_view id;
  const std::string_view* source;
  std::vector<std::pair<std::string_view, std::string_view>> users;
};

const std::vector<Builtin>& builtins() {
  static const std::vector<Builtin> table = {
      {"policy1",
       &corpus_detail::k_policy1_source,
       {{"userEx", "ExtUsers"},
        {"userSA", "SysAdmin"},
        {"userNE", "NetworkEngineer"},
        {"userDBA", "DBA"},
        {"userITM", "ITManager"},
        {"userEU", "EndUsers"}}},
      {"policy2",
       &corpus_detail::k_policy2_source,
       {{"userDev", "Developer"},
        {"userTest", "Tester"},
        {"userSA", "ServerAdmin"},
        {"userDBA", "DBA"},
        {"userAAU", "AppAdminUsers"},
        {"userAU", "AppUsers"},
        {"useOU", "OtherUsers"}}},  // sic, as the user table spells it
      {"policy3",
       &corpus_detail::k_policy3_source,
       {{"userSA", "ServerEngineer"},
        {"userSE", "SecurityEngineer"},
        {"userNE", "NetworkEngineer"}}},
  };
  return table;
}

const Builtin& lookup(std::string_view id) {
  for (const auto& b : builtins()) {
    if (b.id == id) return b;
  }
  throw Error(ErrorCode::kUnknownCorpusId,
              "unknown corpus id '" + std::string(id) + "' (expected policy1, policy2 or policy3)");
}

}  // namespace

std::vector<std::string_view> corpus_ids() {
  std::vector<std::string_view> ids;
  for (const auto& b : builtins()) ids.push_back(b.id);
  return ids;
}

std::string_view corpus_source(std::string_view id) { return *lookup(id).source; }

std::vector<UserBinding> corpus_users(std::string_view id) {
  std::vector<UserBinding> out;
  for (const auto& [user, role] : lookup(id).users) {
    out.push_back(UserBinding{std::string(user), {std::string(role)}});
  }
  return out;
}

CorpusEntry load_builtin(std::string_view id) {
  const auto& b = lookup(id);
  return CorpusEntry{std::make_shared<const Policy>(parse_policy(*b.source)), corpus_users(id)};
}

}  // namespace rolecheck
