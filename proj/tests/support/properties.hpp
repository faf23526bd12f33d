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

#include <cstdint>
#include <string>
#include <vector>

namespace rolecheck::testing {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;  // empty when all passed
};

// Each runs `cases` seeded cases over freshly generated policies.
PropertyResult prop_default_deny(std::uint64_t seed, int cases);
PropertyResult prop_permutation_invariance(std::uint64_t seed, int cases);
PropertyResult prop_deny_monotonicity(std::uint64_t seed, int cases);
PropertyResult prop_role_set_monotonicity(std::uint64_t seed, int cases);
PropertyResult prop_oracle_equivalence(std::uint64_t seed, int cases);
PropertyResult prop_round_trip(std::uint64_t seed, int cases);

std::vector<PropertyResult> run_all_properties(std::uint64_t seed, int cases);

}  // namespace rolecheck::testing
