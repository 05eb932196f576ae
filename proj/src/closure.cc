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

#include "matroid/closure.h"

#include <vector>

#include "matroid/errors.h"

namespace matroid {

bool is_closed(const Matroid& m, const ElementSet& z) {
  const std::size_t rz = m.rank(z);
  for (Element x = 0; x < m.size(); ++x) {
    if (z.contains(x)) continue;
    if (m.rank(z.with(x)) == rz) return false;
  }
  return true;
}

ElementSet closure(const Matroid& m, const ElementSet& x) {
  const std::size_t rx = m.rank(x);
  std::vector<Element> out;
  for (Element y = 0; y < m.size(); ++y) {
    if (x.contains(y) || m.rank(x.with(y)) == rx) out.push_back(y);
  }
  return ElementSet(std::move(out));
}

ElementSet closure_by_intersection(const Matroid& m, const ElementSet& x,
                                   std::size_t max_n) {
  require_within_bound("closure_by_intersection", m.size(), max_n);
  const std::size_t n = m.size();
  SubsetRanks ranks(m);
  const std::uint64_t need = x.mask();
  const std::uint64_t full = ranks.full_mask();
  std::uint64_t meet = full;
  for (std::uint64_t z = 0; z <= full; ++z) {
    if ((z & need) != need) continue;
    const std::size_t rz = ranks.rank(z);
    bool closed = true;
    for (std::size_t e = 0; e < n && closed; ++e) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      if (!(z & bit) && ranks.rank(z | bit) == rz) closed = false;
    }
    if (closed) meet &= z;
  }
  return ElementSet::from_mask(meet);
}

}  // namespace matroid
