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

// Extending list colorings along a growing chain of finite restrictions of
// one (conceptually infinite) matroid. Level i has ground set
// S_i = {0..|S_i|-1}, and each level restricted to an earlier level's
// ground set must reproduce that level's ranks.
//
// The search is a finitely branching tree: nodes at level i are proper
// list colorings of level i, children are their extensions to level i+1.
// A path of length d colors levels 0..d simultaneously (König's lemma in
// its finite form); no limit object is ever built.

#ifndef MATROID_COMPACTNESS_H_
#define MATROID_COMPACTNESS_H_

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matroid/coloring.h"
#include "matroid/matroid.h"

namespace matroid {

class ChainedMatroid {
 public:
  using Generator = std::function<Matroid(std::size_t level)>;

  // An unbounded chain produced on demand.
  ChainedMatroid(std::string name, Generator generator);
  // A chain with exactly these levels.
  ChainedMatroid(std::string name, std::vector<Matroid> levels);

  const std::string& name() const { return name_; }
  // nullopt for generator chains.
  std::optional<std::size_t> level_count() const;

  // Builds levels up to i on first use, checking each against its
  // predecessor. Throws ChainError on disagreement (with the witness
  // subset) and InputError past the end of a finite chain.
  const Matroid& level(std::size_t i) const;

 private:
  void check_consistent(std::size_t i) const;

  std::string name_;
  Generator generator_;
  std::optional<std::size_t> count_;
  // A deque keeps references from level() valid as the chain grows.
  mutable std::deque<Matroid> levels_;
};

// Level i is i+1 vertex-disjoint triangles (3(i+1) edges).
ChainedMatroid disjoint_triangles_chain();
// Level i adds a vertex-disjoint cycle of length i+3 to level i-1.
ChainedMatroid growing_cycle_chain();
// Level i is the uniform matroid of rank `rank` on i+3 elements.
ChainedMatroid growing_uniform_chain(std::size_t rank = 2);
// "disjoint-triangles", "growing-cycle" or "growing-uniform".
ChainedMatroid chain_family(const std::string& name);

// Every proper L-coloring of level i, in lexicographic order (elements by
// id, colors by token). Empty when level i cannot be L-colored. The listing
// must cover S_i; entries beyond it are ignored.
std::vector<Coloring> restriction_colorings(const ChainedMatroid& chain,
                                            const Listing& l, std::size_t i,
                                            std::size_t max_n = kEnumerateMaxN);

struct ExtensionResult {
  std::optional<Coloring> coloring;
  // Set when some level up to depth admits no proper L-coloring.
  std::optional<std::size_t> failed_level;
  std::string diagnostic;
  std::size_t nodes_visited = 0;
};

// A proper L-coloring of level `depth` built level by level, each step
// extending a proper coloring of the previous level.
ExtensionResult extend_coloring(const ChainedMatroid& chain, const Listing& l,
                                std::size_t depth,
                                std::size_t max_n = kValidateMaxN);

// One-line description of the search, printed ahead of results.
inline constexpr char kCompactnessSearchNote[] =
    "finite-depth Konig search: nodes are proper list colorings of each "
    "restriction level, edges are extensions; a path to depth d colors "
    "levels 0..d at once (stands in for a limit over all finite subsets)";

}  // namespace matroid

#endif  // MATROID_COMPACTNESS_H_
