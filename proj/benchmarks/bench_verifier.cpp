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
#include "rolecheck/verifier.hpp"

namespace {

using namespace rolecheck;

void BM_VerifyExtUserAccess(benchmark::State& state) {
  const auto p = load_builtin("policy1").policy;
  const auto& a = find_assertion(*p, "ExtUserAccess");
  Scope scope;
  scope.max_users = static_cast<std::uint32_t>(state.range(0));
  VerifyOptions opt;
  opt.symmetry_reduction = state.range(1) != 0;
  std::uint64_t checked = 0;
  for (auto _ : state) {
    checked = verify(*p, a, scope, opt).instances_checked;
  }
  state.counters["instances"] = static_cast<double>(checked);
}
BENCHMARK(BM_VerifyExtUserAccess)
    ->Args({2, 1})
    ->Args({3, 1})
    ->Args({2, 0})
    ->Unit(benchmark::kMillisecond);

void BM_VerifyAllPolicy2(benchmark::State& state) {
  const auto p = load_builtin("policy2").policy;
  Scope scope;
  scope.max_users = 2;
  VerifyOptions opt;
  opt.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_all(*p, scope, opt));
  }
}
BENCHMARK(BM_VerifyAllPolicy2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CountInstances(benchmark::State& state) {
  const auto p = load_builtin("policy2").policy;
  Scope scope;
  scope.max_users = 3;
  for (auto _ : state) {
    std::uint64_t n = 0;
    for_each_instance(*p, scope, true, [&](const Instance&) {
      ++n;
      return true;
    });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_CountInstances)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
