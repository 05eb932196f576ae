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

// Core matroid abstraction: a finite ground set {0..n-1} with a rank oracle
// over its subsets, plus the exhaustive axiom, independence and circuit
// machinery built directly on that oracle.

#ifndef MATROID_MATROID_H_
#define MATROID_MATROID_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matroid/element_set.h"
#include "matroid/specs.h"

namespace matroid {

// Default exhaustive bounds. Every operation that enumerates subsets takes a
// `max_n` argument defaulting to one of these and refuses above it.
inline constexpr std::size_t kValidateMaxN = 16;
inline constexpr std::size_t kEnumerateMaxN = 12;

// The oracle must be pure: the same set always yields the same rank. It is
// only ever called with subsets of the ground set.
using RankFunction = std::function<std::size_t(const ElementSet&)>;

using Circuit = ElementSet;

// An immutable matroid value. Copies share the rank memo, which behaves as a
// pure cache and is safe to use from several threads.
class Matroid {
 public:
  Matroid(std::size_t n, RankFunction oracle, std::string description,
          MatroidSource source = {});

  std::size_t size() const;
  ElementSet ground_set() const { return ElementSet::range(size()); }
  const std::string& description() const;
  const MatroidSource& source() const;

  // Throws InputError if `a` has an element >= size().
  std::size_t rank(const ElementSet& a) const;
  // Rank of the whole ground set.
  std::size_t rank() const { return rank(ground_set()); }

  // Circuits are memoized here after the first successful enumeration.
  const std::vector<Circuit>* cached_circuits() const;
  void cache_circuits(std::vector<Circuit> circuits) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// Dense, lazily-filled rank cache over all 2^n subsets, addressed by bit
// mask. Used by every exhaustive routine. Not thread-safe; keep it local.
class SubsetRanks {
 public:
  // Requires m.size() <= 24.
  explicit SubsetRanks(const Matroid& m);

  std::size_t size() const { return n_; }
  std::uint64_t full_mask() const { return (std::uint64_t{1} << n_) - 1; }
  std::size_t rank(std::uint64_t mask);
  bool independent(std::uint64_t mask);

 private:
  const Matroid* matroid_;
  std::size_t n_;
  std::vector<std::int16_t> table_;
};

// All masks over n bits ordered by (popcount, lex of the member lists).
std::vector<std::uint64_t> canonical_masks(std::size_t n);

struct AxiomReport {
  bool ok = true;
  // One of "normalization", "subcardinality", "monotonicity",
  // "submodularity". Empty when ok.
  std::string axiom;
  std::vector<ElementSet> witness;
  std::string detail;
};

// Exhaustive check of the four rank axioms over all subsets. Monotonicity
// and submodularity are checked in their local forms (A vs A+x, and
// A+x, A+y vs A, A+x+y), which are equivalent on a finite Boolean lattice
// and yield witnesses that also violate the global forms. The first
// violation in (size, lex) order of A is reported.
AxiomReport validate_axioms(const Matroid& m,
                            std::size_t max_n = kValidateMaxN);

bool is_independent(const Matroid& m, const ElementSet& x);
bool is_loop_free(const Matroid& m);

// All inclusion-minimal dependent sets in (size, lex) order.
std::vector<Circuit> circuits(const Matroid& m,
                              std::size_t max_n = kEnumerateMaxN);

// The (size, lex)-first circuit inside (c1 | c2) - e, additionally
// containing `keep` when given. nullopt if none exists.
std::optional<Circuit> eliminate_circuit(const Matroid& m, const Circuit& c1,
                                         const Circuit& c2, Element e,
                                         std::optional<Element> keep = {},
                                         std::size_t max_n = kEnumerateMaxN);

struct EliminationReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  // Counterexample when !ok: the pair, the shared element, and for the
  // strong form the element that had to survive.
  std::optional<Circuit> c1, c2;
  std::optional<Element> e, kept;
  std::string detail;
};

// Circuit elimination over every ordered pair of distinct circuits and
// every shared e; with `strong`, also for every e1 in c1 - c2 that must
// survive into the eliminated circuit.
EliminationReport check_circuit_elimination(const Matroid& m,
                                            bool strong = true,
                                            std::size_t max_n =
                                                kEnumerateMaxN);

}  // namespace matroid

#endif  // MATROID_MATROID_H_
