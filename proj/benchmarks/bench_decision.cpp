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

#include <benchmark/benchmark.h>

#include "rolecheck/corpus.hpp"
#include "rolecheck/decision.hpp"

namespace {

using namespace rolecheck;

void BM_EvaluateCorpus(benchmark::State& state) {
  const auto p = load_builtin("policy2").policy;
  const auto roles = p->roles();
  const auto actions = p->actions();
  const auto resources = p->resources();
  const auto env = p->symbols.find_as<SymbolKind::kEnvironment>("prod");
  std::size_t i = 0;
  for (auto _ : state) {
    AccessRequest r;
    r.roles = RoleSet::single(roles[i % roles.size()]);
    r.action = actions[(i / roles.size()) % actions.size()];
    r.resource = resources[(i / 7) % resources.size()];
    r.env = env;
    r.state = p->default_state;
    benchmark::DoNotOptimize(evaluate(*p, r));
    ++i;
  }
}
BENCHMARK(BM_EvaluateCorpus);

void BM_PermissionMatrix(benchmark::State& state) {
  const auto id = state.range(0) == 1 ? "policy1" : state.range(0) == 2 ? "policy2" : "policy3";
  const auto p = load_builtin(id).policy;
  std::optional<EnvId> env;
  if (!p->environments().empty()) env = p->environments().front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(permission_matrix(*p, p->default_state, env));
  }
}
BENCHMARK(BM_PermissionMatrix)->DenseRange(1, 3);

}  // namespace
