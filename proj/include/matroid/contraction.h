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

#ifndef MATROID_CONTRACTION_H_
#define MATROID_CONTRACTION_H_

#include <cstddef>

#include "matroid/constructions.h"
#include "matroid/element_set.h"
#include "matroid/matroid.h"

namespace matroid {

// M/Z on S - Z, re-indexed ascending. The contracted rank of A is
// rank(A | Z) - rank(Z): for a finite Z the whole of Z attains the minimum
// over its subsets, so no search is needed.
Minor contract(const Matroid& m, const ElementSet& z);

// The contracted rank of `a` (parent ids, disjoint from z).
std::size_t contracted_rank(const Matroid& m, const ElementSet& z,
                            const ElementSet& a);

// min over Z0 subset of Z of rank(A | Z0) - rank(Z0), by enumerating every
// Z0. The definitional form of contracted_rank; exponential in |Z|.
std::size_t contracted_rank_by_minimum(const Matroid& m, const ElementSet& z,
                                       const ElementSet& a);

// Whether z0 attains the contracted rank of a. Throws InputError unless
// z0 is a subset of z and a is disjoint from z.
bool fits(const Matroid& m, const ElementSet& z, const ElementSet& a,
          const ElementSet& z0);

}  // namespace matroid

#endif  // MATROID_CONTRACTION_H_
