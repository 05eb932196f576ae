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

// A battery of exhaustive structural checks, one per named property, run
// against a single matroid. Each check either passes, fails with a witness,
// or is skipped because the ground set is above its bound.

#ifndef MATROID_LEMMAS_H_
#define MATROID_LEMMAS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "matroid/matroid.h"

namespace matroid {

inline constexpr std::size_t kLemmaMaxN = 8;
// Ordered bases times circuits grows factorially.
inline constexpr std::size_t kOrderedBaseLemmaMaxN = 7;

enum class LemmaStatus { kPass, kFail, kSkipped };

struct LemmaResult {
  // "L1", "L2a", ..., "L19-analog".
  std::string id;
  LemmaStatus status = LemmaStatus::kPass;
  // Witness on failure; a short note on vacuous passes.
  std::string detail;
};

struct LemmaOptions {
  std::size_t max_n = kLemmaMaxN;
  std::size_t ordered_base_max_n = kOrderedBaseLemmaMaxN;
  // Seeds the random closed-set families, fitting families and listings.
  std::uint64_t seed = 0;
};

// The ids in report order.
const std::vector<std::string>& lemma_ids();

// Runs every check in lemma_ids() order.
std::vector<LemmaResult> check_lemmas(const Matroid& m,
                                      const LemmaOptions& options = {});

// "L3: pass", "L4: fail <detail>", "L17: skipped (size)".
std::string to_string(const LemmaResult& r);

}  // namespace matroid

#endif  // MATROID_LEMMAS_H_
