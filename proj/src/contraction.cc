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

#include "matroid/contraction.h"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "matroid/errors.h"

namespace matroid {

namespace {

void check_contraction_args(const Matroid& m, const ElementSet& z,
                            const ElementSet& a) {
  if (!z.empty() && z.back() >= m.size()) {
    throw InputError("contract: element " + std::to_string(z.back()) +
                     " is outside the ground set");
  }
  if (!(a & z).empty()) {
    throw InputError("contract: " + a.to_string() + " meets the contracted set " +
                     z.to_string());
  }
}

}  // namespace

Minor contract(const Matroid& m, const ElementSet& z) {
  check_contraction_args(m, z, {});
  const ElementSet rest = m.ground_set() - z;
  std::vector<Element> ids(rest.begin(), rest.end());
  const std::size_t rz = m.rank(z);
  auto oracle = [m, z, ids, rz](const ElementSet& child) {
    std::vector<Element> lifted;
    lifted.reserve(child.size());
    for (Element e : child) lifted.push_back(ids[e]);
    return m.rank(ElementSet(std::move(lifted)) | z) - rz;
  };
  Matroid contracted(ids.size(), std::move(oracle),
                     m.description() + "/" + z.to_string());
  return Minor{std::move(contracted), std::move(ids)};
}

std::size_t contracted_rank(const Matroid& m, const ElementSet& z,
                            const ElementSet& a) {
  check_contraction_args(m, z, a);
  return m.rank(a | z) - m.rank(z);
}

std::size_t contracted_rank_by_minimum(const Matroid& m, const ElementSet& z,
                                       const ElementSet& a) {
  check_contraction_args(m, z, a);
  require_within_bound("contracted_rank_by_minimum", z.size(), 24);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const std::uint64_t subsets = std::uint64_t{1} << z.size();
  for (std::uint64_t pick = 0; pick < subsets; ++pick) {
    std::vector<Element> z0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (pick >> i & 1) z0.push_back(z[i]);
    }
    const ElementSet z0_set(std::move(z0));
    best = std::min(best, m.rank(a | z0_set) - m.rank(z0_set));
  }
  return best;
}

bool fits(const Matroid& m, const ElementSet& z, const ElementSet& a,
          const ElementSet& z0) {
  if (!z0.is_subset_of(z)) {
    throw InputError("fits: " + z0.to_string() + " is not a subset of " +
                     z.to_string());
  }
  return m.rank(a | z0) - m.rank(z0) == contracted_rank(m, z, a);
}

}  // namespace matroid
