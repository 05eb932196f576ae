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

#ifndef MATROID_SRC_LIST_SEARCH_H_
#define MATROID_SRC_LIST_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "matroid/element_set.h"

namespace matroid::internal {

// Depth-first search over list colorings with integer colors. Elements are
// assigned in `order`, each trying lists[e] in the given order; a choice is
// kept only if the color class stays independent. `visit` sees every
// complete assignment (indexed by element id) and returns false to stop.
// Class masks and assignment may arrive pre-filled for elements outside
// `order`. Returns false iff the visitor stopped the search.
class ListSearch {
 public:
  ListSearch(const std::vector<std::vector<int>>& lists,
             std::size_t num_colors)
      : lists_(lists), classes_(num_colors, 0), assignment_(lists.size(), -1) {}

  std::vector<std::uint64_t>& classes() { return classes_; }
  std::vector<int>& assignment() { return assignment_; }

  template <class Independent, class Visit>
  bool run(const std::vector<Element>& order, Independent&& independent,
           Visit&& visit) {
    return step(order, 0, independent, visit);
  }

 private:
  template <class Independent, class Visit>
  bool step(const std::vector<Element>& order, std::size_t depth,
            Independent& independent, Visit& visit) {
    if (depth == order.size()) return visit(assignment_);
    const Element x = order[depth];
    const std::uint64_t bit = std::uint64_t{1} << x;
    for (int c : lists_[x]) {
      const std::uint64_t grown = classes_[c] | bit;
      if (!independent(grown)) continue;
      const std::uint64_t saved = classes_[c];
      classes_[c] = grown;
      assignment_[x] = c;
      const bool go_on = step(order, depth + 1, independent, visit);
      classes_[c] = saved;
      assignment_[x] = -1;
      if (!go_on) return false;
    }
    return true;
  }

  const std::vector<std::vector<int>>& lists_;
  std::vector<std::uint64_t> classes_;
  std::vector<int> assignment_;
};

}  // namespace matroid::internal

#endif  // MATROID_SRC_LIST_SEARCH_H_
