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

// Bases with a total order on their elements, fundamental circuits, and the
// "largest base element of the fundamental circuit" map that groups the
// ground set into one class per base element.

#ifndef MATROID_BASES_H_
#define MATROID_BASES_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "matroid/element_set.h"
#include "matroid/matroid.h"

namespace matroid {

inline constexpr std::size_t kBaseSearchExhaustiveMaxN = 8;

// A base together with an order on it: elements[0] < elements[1] < ...
struct WellOrderedBase {
  std::vector<Element> elements;

  ElementSet set() const { return ElementSet(elements); }
  // Position of e in the order; throws InputError if e is not in the base.
  std::size_t position(Element e) const;
  std::string to_string() const;  // "(0,1)"
};

// Scans `order` (a permutation of the ground set) and keeps each element
// that stays independent with what was kept so far. The base order is the
// insertion order. Loops are never kept.
WellOrderedBase greedy_base(const Matroid& m,
                            const std::vector<Element>& order);
WellOrderedBase greedy_base(const Matroid& m);

// Independent and spanning (closure equals the ground set).
bool is_base(const Matroid& m, const ElementSet& b);

// Every base, in (size, lex) order.
std::vector<ElementSet> all_bases(const Matroid& m,
                                  std::size_t max_n = kEnumerateMaxN);

// The unique circuit inside B + x; it always contains x. Throws InputError
// if x is in B or B is not a base.
Circuit fundamental_circuit(const Matroid& m, const WellOrderedBase& b,
                            Element x);

// x itself for base elements, otherwise the largest base element (in the
// base order) of x's fundamental circuit.
Element mb(const Matroid& m, const WellOrderedBase& b, Element x);

struct MbDecomposition {
  // image[x] = mb(x)
  std::vector<Element> image;
  // One class per base element, keyed by that element.
  std::map<Element, ElementSet> classes;
  std::size_t max_class_size = 0;
};

// Throws InputError if m has a loop or b is not a base.
MbDecomposition mb_classes(const Matroid& m, const WellOrderedBase& b);

struct BaseSearchOptions {
  // Exhaustive over all bases and orders up to this size; random restarts
  // of greedy_base above it.
  std::size_t exhaustive_max_n = kBaseSearchExhaustiveMaxN;
  std::size_t restarts = 64;
  std::uint64_t seed = 0;
};

struct BaseBound {
  WellOrderedBase base;
  std::size_t max_class_size = 0;
  // True only for the exhaustive mode, where the optimum is proven.
  bool optimal = false;
  std::size_t candidates = 0;
};

// A well-ordered base minimizing the largest mb class. Ties go to the
// (size, lex)-first base, then the lexicographically first order.
BaseBound best_base_bound(const Matroid& m,
                          const BaseSearchOptions& options = {});

}  // namespace matroid

#endif  // MATROID_BASES_H_
