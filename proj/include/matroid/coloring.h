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

// Proper colorings (every color class independent), chromatic and list
// chromatic numbers, and the coloring built from a well-ordered base.

#ifndef MATROID_COLORING_H_
#define MATROID_COLORING_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matroid/bases.h"
#include "matroid/element_set.h"
#include "matroid/matroid.h"

namespace matroid {

using Color = std::string;
using Coloring = std::map<Element, Color>;
// Lists are treated as sets; order and repeats in the vectors are ignored.
using Listing = std::map<Element, std::vector<Color>>;

inline constexpr std::size_t kListChromaticMaxN = 5;
inline constexpr std::size_t kListChromaticMaxK = 4;

std::string to_string(const Coloring& phi);
std::string to_string(const Listing& l);

// Every color class is independent. Throws InputError unless phi is defined
// on exactly the ground set. When the circuits are enumerable the answer is
// cross-checked against is_proper_by_circuits.
bool is_proper(const Matroid& m, const Coloring& phi);
bool is_proper_by_classes(const Matroid& m, const Coloring& phi);
// No circuit is monochromatic.
bool is_proper_by_circuits(const Matroid& m, const Coloring& phi,
                           std::size_t max_n = kEnumerateMaxN);

struct ChromaticResult {
  std::size_t k = 0;
  // Colors "0".."k-1".
  Coloring witness;
};

// Least number of independent sets partitioning the ground set, by
// iterative deepening over partitions with the classes opened in order.
// Throws InputError if m has a loop (no proper coloring exists).
ChromaticResult chromatic_number(const Matroid& m,
                                 std::size_t max_n = kValidateMaxN);

// Whether any proper coloring of m with exactly k colors exists, and one if
// so. Requires m loop-free.
std::optional<Coloring> k_coloring(const Matroid& m, std::size_t k,
                                   std::size_t max_n = kValidateMaxN);

struct ListColoringResult {
  std::optional<Coloring> coloring;
  std::string diagnostic;
};

// A proper coloring with phi(x) in L(x), found by backtracking with
// elements taken in ascending list size (ties by id) and list colors tried
// in ascending order; the first hit is returned. Throws InputError unless
// the listing covers exactly the ground set.
ListColoringResult is_list_colorable(const Matroid& m, const Listing& l,
                                     std::size_t max_n = kValidateMaxN);

struct ListChromaticLimits {
  std::size_t max_n = kListChromaticMaxN;
  std::size_t max_k = kListChromaticMaxK;
};

struct ListChromaticResult {
  // Empty when no k <= kmax works; the answer is then >= kmax + 1.
  std::optional<std::size_t> k;
  // failures[i] is an uncolorable (i+1)-listing of the whole ground set.
  std::vector<Listing> failures;
  std::size_t listings_checked = 0;
};

// Least k such that every listing with lists of size k admits a proper
// list coloring, decided exhaustively.
//
// Listings are enumerated canonically up to renaming colors (colors are
// numbered by first appearance, lists are sets). A color on only one
// element can always be given to it, so a listing is colorable iff the
// listing left after repeatedly removing such elements is. Hence it
// suffices to check, for every subset T of the ground set, the canonical
// k-listings of T in which every color occurs at least twice. An
// uncolorable one is reported over the whole ground set by giving the
// elements outside T fresh colors.
ListChromaticResult list_chromatic_number(const Matroid& m, std::size_t kmax,
                                          const ListChromaticLimits& limits =
                                              {});

// Colors each mb class injectively from its members' lists, taking for
// each member (ascending) the first list color unused in its class. Since
// every circuit has two members in one class, the result is proper; it is
// verified before returning. Throws InputError if some member's list is
// smaller than its class.
Coloring color_from_base(const Matroid& m, const WellOrderedBase& b,
                         const Listing& l);

struct DegreeBoundReport {
  bool ok = true;
  // closure(A) - A
  ElementSet spanned;
  std::size_t chromatic = 0;
  std::size_t subsets_checked = 0;
  // An independent (|A|+1)-subset of `spanned`, if one exists.
  std::optional<ElementSet> independent_witness;
  bool count_ok = true;
  std::string detail;
};

// For loop-free m: (i) every |A|+1 elements that do not raise rank(A) are
// dependent, checked over all such subsets; (ii) |closure(A) - A| is at
// most chromatic_number(m) * |A|.
DegreeBoundReport degree_bound_check(const Matroid& m, const ElementSet& a);

}  // namespace matroid

#endif  // MATROID_COLORING_H_
