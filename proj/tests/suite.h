// Copyright 2026 The Authors.
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

// The fixed corpus of small matroids every property test sweeps:
//   uniform(n, k) for 0 <= k <= n <= 7;
//   every multigraph with at most 5 edges on vertices {0,1,2,3}, self-loops
//   and parallel edges included, one per edge multiset;
//   50 seeded random GF(2) vector configurations with at most 6 vectors.
// Each entry carries a rank table computed by the test oracles.

#ifndef MATROID_TESTS_SUITE_H_
#define MATROID_TESTS_SUITE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "matroid/matroid.h"
#include "oracles.h"

namespace suite {

inline constexpr std::uint64_t kLinearSeed = 20260101;
inline constexpr int kLinearCount = 50;

struct Entry {
  std::string name;
  matroid::Matroid matroid;
  oracle::Table table;
};

std::vector<Entry> uniform_entries();
std::vector<Entry> graphic_entries();
std::vector<Entry> linear_entries();
// All three, in that order. Built once and cached.
const std::vector<Entry>& all();

}  // namespace suite

#endif  // MATROID_TESTS_SUITE_H_
