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

#ifndef MATROID_CLOSURE_H_
#define MATROID_CLOSURE_H_

#include <cstddef>

#include "matroid/element_set.h"
#include "matroid/matroid.h"

namespace matroid {

// Z is closed iff adding any outside element raises its rank.
bool is_closed(const Matroid& m, const ElementSet& z);

// sigma(X) = X together with every y whose addition leaves rank(X)
// unchanged. Uses n rank queries.
ElementSet closure(const Matroid& m, const ElementSet& x);

// sigma(X) as the intersection of all closed supersets of X. Enumerates all
// 2^n subsets; kept as an independent route to closure().
ElementSet closure_by_intersection(const Matroid& m, const ElementSet& x,
                                   std::size_t max_n = kEnumerateMaxN);

}  // namespace matroid

#endif  // MATROID_CLOSURE_H_
