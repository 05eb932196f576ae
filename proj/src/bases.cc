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

#include "matroid/bases.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

#include "matroid/closure.h"
#include "matroid/errors.h"

namespace matroid {

std::size_t WellOrderedBase::position(Element e) const {
  auto it = std::find(elements.begin(), elements.end(), e);
  if (it == elements.end()) {
    throw InputError("element " + std::to_string(e) + " is not in base " +
                     to_string());
  }
  return static_cast<std::size_t>(it - elements.begin());
}

std::string WellOrderedBase::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elements[i]);
  }
  return out + ")";
}

WellOrderedBase greedy_base(const Matroid& m,
                            const std::vector<Element>& order) {
  std::vector<bool> seen(m.size(), false);
  for (Element e : order) {
    if (e >= m.size() || seen[e]) {
      throw InputError("order must be a permutation of 0.." +
                       std::to_string(m.size() == 0 ? 0 : m.size() - 1));
    }
    seen[e] = true;
  }
  if (order.size() != m.size()) {
    throw InputError("order lists " + std::to_string(order.size()) +
                     " elements, ground set has " + std::to_string(m.size()));
  }
  WellOrderedBase b;
  ElementSet kept;
  for (Element e : order) {
    ElementSet next = kept.with(e);
    if (is_independent(m, next)) {
      kept = std::move(next);
      b.elements.push_back(e);
    }
  }
  return b;
}

WellOrderedBase greedy_base(const Matroid& m) {
  std::vector<Element> order(m.size());
  std::iota(order.begin(), order.end(), Element{0});
  return greedy_base(m, order);
}

bool is_base(const Matroid& m, const ElementSet& b) {
  return is_independent(m, b) && closure(m, b) == m.ground_set();
}

std::vector<ElementSet> all_bases(const Matroid& m, std::size_t max_n) {
  require_within_bound("bases", m.size(), max_n);
  SubsetRanks ranks(m);
  const std::size_t r = ranks.rank(ranks.full_mask());
  std::vector<ElementSet> out;
  for (std::uint64_t mask : canonical_masks(m.size())) {
    if (static_cast<std::size_t>(std::popcount(mask)) != r) continue;
    if (ranks.independent(mask)) out.push_back(ElementSet::from_mask(mask));
  }
  return out;
}

namespace {

void require_base(const Matroid& m, const WellOrderedBase& b) {
  const ElementSet set = b.set();
  if (set.size() != b.elements.size()) {
    throw InputError("well-ordered base " + b.to_string() +
                     " repeats an element");
  }
  if (!is_base(m, set)) {
    throw InputError(set.to_string() + " is not a base");
  }
}

Circuit fundamental_circuit_unchecked(const Matroid& m, const ElementSet& b,
                                      Element x) {
  // b joins the circuit exactly when swapping it out for x keeps B
  // independent.
  std::vector<Element> members{x};
  const ElementSet with_x = b.with(x);
  for (Element e : b) {
    if (m.rank(with_x.without(e)) == b.size()) members.push_back(e);
  }
  return ElementSet(std::move(members));
}

Element mb_unchecked(const Matroid& m, const WellOrderedBase& b,
                     const ElementSet& set, Element x) {
  if (set.contains(x)) return x;
  const Circuit c = fundamental_circuit_unchecked(m, set, x);
  Element best = x;
  std::size_t best_pos = 0;
  bool found = false;
  for (std::size_t pos = 0; pos < b.elements.size(); ++pos) {
    if (c.contains(b.elements[pos]) && (!found || pos > best_pos)) {
      best = b.elements[pos];
      best_pos = pos;
      found = true;
    }
  }
  if (!found) {
    throw InputError("element " + std::to_string(x) +
                     " is a loop; it has no base element in its circuit");
  }
  return best;
}

}  // namespace

Circuit fundamental_circuit(const Matroid& m, const WellOrderedBase& b,
                            Element x) {
  if (x >= m.size()) {
    throw InputError("element " + std::to_string(x) +
                     " is outside the ground set");
  }
  const ElementSet set = b.set();
  if (set.contains(x)) {
    throw InputError("element " + std::to_string(x) + " lies in the base");
  }
  require_base(m, b);
  return fundamental_circuit_unchecked(m, set, x);
}

Element mb(const Matroid& m, const WellOrderedBase& b, Element x) {
  if (x >= m.size()) {
    throw InputError("element " + std::to_string(x) +
                     " is outside the ground set");
  }
  require_base(m, b);
  return mb_unchecked(m, b, b.set(), x);
}

MbDecomposition mb_classes(const Matroid& m, const WellOrderedBase& b) {
  if (!is_loop_free(m)) {
    throw InputError("mb classes are undefined on a matroid with loops");
  }
  require_base(m, b);
  const ElementSet set = b.set();
  MbDecomposition d;
  d.image.resize(m.size());
  std::map<Element, std::vector<Element>> groups;
  for (Element e : b.elements) groups[e];
  for (Element x = 0; x < m.size(); ++x) {
    d.image[x] = mb_unchecked(m, b, set, x);
    groups[d.image[x]].push_back(x);
  }
  for (auto& [key, members] : groups) {
    d.max_class_size = std::max(d.max_class_size, members.size());
    d.classes.emplace(key, ElementSet(std::move(members)));
  }
  return d;
}

namespace {

// Largest mb class for a base given as positions: circuit_pos[x] lists the
// base positions in x's fundamental circuit, rank_of[pos] is the order
// rank of that position.
std::size_t max_class_for_order(
    const std::vector<std::vector<std::size_t>>& circuit_pos,
    const std::vector<std::size_t>& rank_of, std::size_t base_size) {
  std::vector<std::size_t> counts(base_size, 1);
  for (const auto& positions : circuit_pos) {
    if (positions.empty()) continue;
    std::size_t best = positions.front();
    for (std::size_t p : positions) {
      if (rank_of[p] > rank_of[best]) best = p;
    }
    ++counts[best];
  }
  return base_size == 0 ? 0 : *std::max_element(counts.begin(), counts.end());
}

bool better(std::size_t size, const WellOrderedBase& cand,
            const BaseBound& incumbent, bool have) {
  if (!have) return true;
  if (size != incumbent.max_class_size) return size < incumbent.max_class_size;
  const ElementSet a = cand.set(), b = incumbent.base.set();
  if (a != b) return a < b;
  return cand.elements < incumbent.base.elements;
}

}  // namespace

BaseBound best_base_bound(const Matroid& m, const BaseSearchOptions& options) {
  if (!is_loop_free(m)) {
    throw InputError("best_base_bound requires a loop-free matroid");
  }
  BaseBound best;
  bool have = false;
  const std::size_t n = m.size();

  if (n <= options.exhaustive_max_n) {
    best.optimal = true;
    for (const ElementSet& base : all_bases(m, options.exhaustive_max_n)) {
      const std::size_t r = base.size();
      // The r classes cover n elements.
      const std::size_t floor = r == 0 ? 0 : (n + r - 1) / r;
      std::vector<std::vector<std::size_t>> circuit_pos;
      for (Element x = 0; x < n; ++x) {
        if (base.contains(x)) continue;
        const Circuit c = fundamental_circuit_unchecked(m, base, x);
        std::vector<std::size_t> positions;
        for (std::size_t p = 0; p < r; ++p) {
          if (c.contains(base[p])) positions.push_back(p);
        }
        circuit_pos.push_back(std::move(positions));
      }
      std::vector<std::size_t> perm(r);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::vector<std::size_t> rank_of(r);
      do {
        ++best.candidates;
        for (std::size_t i = 0; i < r; ++i) rank_of[perm[i]] = i;
        const std::size_t size = max_class_for_order(circuit_pos, rank_of, r);
        WellOrderedBase cand;
        for (std::size_t p : perm) cand.elements.push_back(base[p]);
        if (better(size, cand, best, have)) {
          best.base = std::move(cand);
          best.max_class_size = size;
          have = true;
        }
        if (size == floor) break;
      } while (std::next_permutation(perm.begin(), perm.end()));
      // Every base has the same size, so nothing later can beat the floor.
      if (have && best.max_class_size == floor) break;
    }
    if (!have) best.max_class_size = 0;
    return best;
  }

  std::mt19937_64 rng(options.seed);
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  for (std::size_t i = 0; i < std::max<std::size_t>(options.restarts, 1);
       ++i) {
    if (i > 0) std::shuffle(order.begin(), order.end(), rng);
    WellOrderedBase cand = greedy_base(m, order);
    ++best.candidates;
    const std::size_t size = mb_classes(m, cand).max_class_size;
    if (better(size, cand, best, have)) {
      best.base = std::move(cand);
      best.max_class_size = size;
      have = true;
    }
  }
  return best;
}

}  // namespace matroid
