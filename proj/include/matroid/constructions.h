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

#ifndef MATROID_CONSTRUCTIONS_H_
#define MATROID_CONSTRUCTIONS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "matroid/element_set.h"
#include "matroid/matroid.h"
#include "matroid/specs.h"

namespace matroid {

// A matroid derived from a parent on a re-indexed ground set, together with
// the map back to the parent's ids. Child element i is parent_ids[i].
struct Minor {
  Matroid matroid;
  std::vector<Element> parent_ids;

  Element to_parent(Element child) const { return parent_ids.at(child); }
  std::optional<Element> from_parent(Element parent) const;
  ElementSet to_parent(const ElementSet& child) const;
  // Throws InputError if some member has no child counterpart.
  ElementSet from_parent(const ElementSet& parent) const;
};

// rank(A) = min(|A|, k). Throws InputError if k > n.
Matroid uniform(std::size_t n, std::size_t k);

// Cycle matroid of a multigraph on its edges: the rank of an edge set is the
// number of vertices it covers minus the number of connected components
// those vertices form under it. Self-loops and parallel edges are allowed.
// Edge ids must be exactly 0..n-1 in some order.
Matroid graphic(const GraphSpec& g);

// Column matroid of vectors over GF(p), ranked by exact elimination mod p.
// Throws InputError for non-prime p, wrong arity or out-of-range
// coordinates.
Matroid linear(const VectorSpec& v);

// Reads ranks from a complete table, then rejects non-matroids with an
// AxiomError naming the violated axiom and its witness.
Matroid from_table(const TableSpec& t);

// Tabulates any matroid with n <= kValidateMaxN.
TableSpec tabulate(const Matroid& m, std::size_t max_n = kValidateMaxN);

// M restricted to `a`, re-indexed densely in ascending order of `a`.
Minor restriction(const Matroid& m, const ElementSet& a);

bool is_prime(std::uint64_t p);

// Exact rank of a list of vectors over GF(p) by Gaussian elimination.
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows,
                       std::uint32_t p);

}  // namespace matroid

#endif  // MATROID_CONSTRUCTIONS_H_
