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

#include "matroid/matroid.h"

#include <algorithm>
#include <bit>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "matroid/errors.h"

namespace matroid {

struct Matroid::State {
  std::size_t n = 0;
  RankFunction oracle;
  std::string description;
  MatroidSource source;

  std::mutex mu;
  std::unordered_map<ElementSet, std::size_t> memo;
  std::optional<std::vector<Circuit>> circuits;
};

Matroid::Matroid(std::size_t n, RankFunction oracle, std::string description,
                 MatroidSource source)
    : state_(std::make_shared<State>()) {
  state_->n = n;
  state_->oracle = std::move(oracle);
  state_->description = std::move(description);
  state_->source = std::move(source);
}

std::size_t Matroid::size() const { return state_->n; }

const std::string& Matroid::description() const {
  return state_->description;
}

const MatroidSource& Matroid::source() const { return state_->source; }

std::size_t Matroid::rank(const ElementSet& a) const {
  if (!a.empty() && a.back() >= state_->n) {
    throw InputError("element " + std::to_string(a.back()) +
                     " is outside the ground set of size " +
                     std::to_string(state_->n));
  }
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(a);
    if (it != state_->memo.end()) return it->second;
  }
  std::size_t value = state_->oracle(a);
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->memo.emplace(a, value);
  return value;
}

const std::vector<Circuit>* Matroid::cached_circuits() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->circuits ? &*state_->circuits : nullptr;
}

void Matroid::cache_circuits(std::vector<Circuit> circuits) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  if (!state_->circuits) state_->circuits = std::move(circuits);
}

SubsetRanks::SubsetRanks(const Matroid& m) : matroid_(&m), n_(m.size()) {
  require_within_bound("subset rank table", n_, 24);
  table_.assign(std::size_t{1} << n_, -1);
}

std::size_t SubsetRanks::rank(std::uint64_t mask) {
  std::int16_t& slot = table_[mask];
  if (slot < 0) {
    slot = static_cast<std::int16_t>(
        matroid_->rank(ElementSet::from_mask(mask)));
  }
  return static_cast<std::size_t>(slot);
}

bool SubsetRanks::independent(std::uint64_t mask) {
  return rank(mask) == static_cast<std::size_t>(std::popcount(mask));
}

std::vector<std::uint64_t> canonical_masks(std::size_t n) {
  std::vector<std::uint64_t> masks(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    std::uint64_t d = a ^ b;
    if (d == 0) return false;
    // The set holding the lowest differing element is lexicographically
    // smaller.
    return (a & (d & (~d + 1))) != 0;
  });
  return masks;
}

namespace {

AxiomReport violation(std::string axiom, std::vector<ElementSet> witness,
                      std::string detail) {
  AxiomReport r;
  r.ok = false;
  r.axiom = std::move(axiom);
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  return r;
}

std::string rank_of(std::uint64_t mask, std::size_t value) {
  return "r(" + ElementSet::from_mask(mask).to_string() +
         ")=" + std::to_string(value);
}

}  // namespace

AxiomReport validate_axioms(const Matroid& m, std::size_t max_n) {
  require_within_bound("validate", m.size(), max_n);
  const std::size_t n = m.size();
  SubsetRanks ranks(m);
  const std::vector<std::uint64_t> order = canonical_masks(n);

  const std::size_t empty_rank = ranks.rank(0);
  if (empty_rank != 0) {
    return violation("normalization", {ElementSet{}},
                     "r({})=" + std::to_string(empty_rank));
  }

  for (std::uint64_t a : order) {
    std::size_t ra = ranks.rank(a);
    for (std::size_t x = 0; x < n; ++x) {
      std::uint64_t bit = std::uint64_t{1} << x;
      if (a & bit) continue;
      std::size_t rax = ranks.rank(a | bit);
      if (rax < ra) {
        return violation(
            "monotonicity",
            {ElementSet::from_mask(a), ElementSet::from_mask(a | bit)},
            rank_of(a, ra) + " > " + rank_of(a | bit, rax));
      }
    }
  }

  for (std::uint64_t a : order) {
    std::size_t ra = ranks.rank(a);
    if (ra > static_cast<std::size_t>(std::popcount(a))) {
      return violation("subcardinality", {ElementSet::from_mask(a)},
                       rank_of(a, ra) + " exceeds the set size");
    }
  }

  for (std::uint64_t a : order) {
    std::size_t ra = ranks.rank(a);
    for (std::size_t x = 0; x < n; ++x) {
      std::uint64_t bx = std::uint64_t{1} << x;
      if (a & bx) continue;
      for (std::size_t y = x + 1; y < n; ++y) {
        std::uint64_t by = std::uint64_t{1} << y;
        if (a & by) continue;
        std::size_t lhs = ranks.rank(a | bx) + ranks.rank(a | by);
        std::size_t rhs = ra + ranks.rank(a | bx | by);
        if (lhs < rhs) {
          return violation(
              "submodularity",
              {ElementSet::from_mask(a | bx), ElementSet::from_mask(a | by)},
              rank_of(a | bx, ranks.rank(a | bx)) + " + " +
                  rank_of(a | by, ranks.rank(a | by)) + " < " +
                  rank_of(a, ra) + " + " +
                  rank_of(a | bx | by, ranks.rank(a | bx | by)));
        }
      }
    }
  }
  return {};
}

bool is_independent(const Matroid& m, const ElementSet& x) {
  return m.rank(x) == x.size();
}

bool is_loop_free(const Matroid& m) {
  for (Element e = 0; e < m.size(); ++e) {
    if (m.rank(ElementSet{e}) != 1) return false;
  }
  return true;
}

std::vector<Circuit> circuits(const Matroid& m, std::size_t max_n) {
  require_within_bound("circuits", m.size(), max_n);
  if (const auto* cached = m.cached_circuits()) return *cached;

  SubsetRanks ranks(m);
  std::vector<Circuit> out;
  for (std::uint64_t mask : canonical_masks(m.size())) {
    if (mask == 0 || ranks.independent(mask)) continue;
    bool minimal = true;
    for (std::uint64_t rest = mask; rest != 0 && minimal; rest &= rest - 1) {
      std::uint64_t bit = rest & (~rest + 1);
      minimal = ranks.independent(mask & ~bit);
    }
    if (minimal) out.push_back(ElementSet::from_mask(mask));
  }
  m.cache_circuits(out);
  return out;
}

std::optional<Circuit> eliminate_circuit(const Matroid& m, const Circuit& c1,
                                         const Circuit& c2, Element e,
                                         std::optional<Element> keep,
                                         std::size_t max_n) {
  const ElementSet pool = (c1 | c2).without(e);
  for (const Circuit& c : circuits(m, max_n)) {
    if (!c.is_subset_of(pool)) continue;
    if (keep && !c.contains(*keep)) continue;
    return c;
  }
  return std::nullopt;
}

EliminationReport check_circuit_elimination(const Matroid& m, bool strong,
                                            std::size_t max_n) {
  const std::vector<Circuit> all = circuits(m, max_n);
  std::vector<std::uint64_t> masks;
  masks.reserve(all.size());
  for (const Circuit& c : all) masks.push_back(c.mask());

  auto exists = [&](std::uint64_t pool, std::uint64_t must) {
    for (std::uint64_t c : masks) {
      if ((c & ~pool) == 0 && (c & must) == must) return true;
    }
    return false;
  };

  EliminationReport report;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (i == j) continue;
      ++report.pairs_checked;
      std::uint64_t shared = masks[i] & masks[j];
      std::uint64_t only_first = masks[i] & ~masks[j];
      for (std::uint64_t s = shared; s != 0; s &= s - 1) {
        std::uint64_t ebit = s & (~s + 1);
        std::uint64_t pool = (masks[i] | masks[j]) & ~ebit;
        Element e = static_cast<Element>(std::countr_zero(ebit));
        if (!exists(pool, 0)) {
          report.ok = false;
          report.c1 = all[i];
          report.c2 = all[j];
          report.e = e;
          report.detail = "no circuit inside (C1 | C2) - e";
          return report;
        }
        if (!strong) continue;
        for (std::uint64_t t = only_first; t != 0; t &= t - 1) {
          std::uint64_t kbit = t & (~t + 1);
          if (!exists(pool, kbit)) {
            report.ok = false;
            report.c1 = all[i];
            report.c2 = all[j];
            report.e = e;
            report.kept = static_cast<Element>(std::countr_zero(kbit));
            report.detail = "no circuit inside (C1 | C2) - e containing e1";
            return report;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace matroid
