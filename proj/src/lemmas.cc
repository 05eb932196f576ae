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

#include "matroid/lemmas.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include "matroid/bases.h"
#include "matroid/closure.h"
#include "matroid/coloring.h"
#include "matroid/constructions.h"
#include "matroid/contraction.h"
#include "matroid/errors.h"

namespace matroid {

namespace {

using Mask = std::uint64_t;

ElementSet set_of(Mask m) { return ElementSet::from_mask(m); }
std::string str(Mask m) { return set_of(m).to_string(); }
std::size_t popcount(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

// Calls f(sub) for every submask of `mask`, including 0 and mask itself.
template <class F>
void for_each_submask(Mask mask, F&& f) {
  Mask sub = mask;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

// nullopt means pass; otherwise the failure detail.
using Check = std::optional<std::string>;

// Shared state for one battery run. Masks index the ground set directly.
struct Context {
  const Matroid& m;
  std::size_t n;
  Mask full;
  SubsetRanks ranks;
  std::vector<Mask> order;
  std::vector<Mask> closure_of;
  std::vector<Mask> closed;
  std::vector<Circuit> circuit_list;
  bool loop_free;
  std::uint64_t seed;

  Context(const Matroid& matroid, std::uint64_t s)
      : m(matroid),
        n(matroid.size()),
        full((Mask{1} << matroid.size()) - 1),
        ranks(matroid),
        order(canonical_masks(matroid.size())),
        loop_free(is_loop_free(matroid)),
        seed(s) {
    closure_of.resize(Mask{1} << n);
    for (Mask a : order) {
      closure_of[a] = closure(m, set_of(a)).mask();
      if (closure_of[a] == a) closed.push_back(a);
    }
    circuit_list = circuits(m, n);
  }

  std::size_t r(Mask a) { return ranks.rank(a); }
  bool indep(Mask a) { return ranks.independent(a); }
};

Check lemma1(Context& c) {
  for (Mask a : c.order) {
    if (is_independent(c.m, set_of(a)) != c.indep(a)) {
      return "is_independent disagrees with rank at " + str(a);
    }
    // Independent by definition: every subset has full rank.
    bool by_subsets = true;
    for_each_submask(a, [&](Mask b) { by_subsets = by_subsets && c.indep(b); });
    if (by_subsets != (c.r(a) == popcount(a))) {
      return "independence by subsets disagrees with r=|A| at " + str(a);
    }
    std::optional<std::string> bad;
    for_each_submask(a, [&](Mask b) {
      if (bad || !c.indep(b)) return;
      for (Mask rest = a & ~b; rest != 0; rest &= rest - 1) {
        if (c.indep(b | (rest & (~rest + 1)))) return;
      }
      if (popcount(b) != c.r(a)) {
        bad = "maximal independent " + str(b) + " in " + str(a) +
              " has size " + std::to_string(popcount(b)) + " != r(A)=" +
              std::to_string(c.r(a));
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Check elimination(Context& c, bool strong) {
  EliminationReport rep = check_circuit_elimination(c.m, strong, c.n);
  if (rep.ok) return std::nullopt;
  std::string out = "C1=" + rep.c1->to_string() + " C2=" + rep.c2->to_string() +
                    " e=" + std::to_string(*rep.e);
  if (rep.kept) out += " e1=" + std::to_string(*rep.kept);
  return out + ": " + rep.detail;
}

Check lemma3(Context& c) {
  for (const ElementSet& b : all_bases(c.m, c.n)) {
    const Mask bm = b.mask();
    for (Element x = 0; x < c.n; ++x) {
      if (b.contains(x)) continue;
      const Mask pool = bm | (Mask{1} << x);
      std::vector<Mask> inside;
      for (const Circuit& circ : c.circuit_list) {
        if ((circ.mask() & ~pool) == 0) inside.push_back(circ.mask());
      }
      if (inside.size() != 1) {
        return std::to_string(inside.size()) + " circuits inside B+x for B=" +
               b.to_string() + " x=" + std::to_string(x);
      }
      const Circuit fc = fundamental_circuit(c.m, WellOrderedBase{b.members()}, x);
      if (fc.mask() != inside.front()) {
        return "fundamental_circuit(B=" + b.to_string() + ", x=" +
               std::to_string(x) + ")=" + fc.to_string() +
               " but the circuit inside B+x is " + str(inside.front());
      }
    }
  }
  return std::nullopt;
}

Check lemma4(Context& c) {
  for (Mask b = 0; b <= c.full; ++b) {
    std::optional<std::string> bad;
    for_each_submask(b, [&](Mask a) {
      if (bad) return;
      for (std::size_t x = 0; x < c.n; ++x) {
        const Mask bit = Mask{1} << x;
        if (c.r(a | bit) == c.r(a) && c.r(b | bit) != c.r(b)) {
          bad = "A=" + str(a) + " B=" + str(b) + " x=" + std::to_string(x);
          return;
        }
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Check lemma5(Context& c) {
  for (Mask a : c.order) {
    Mask spanned = 0;
    for (std::size_t x = 0; x < c.n; ++x) {
      const Mask bit = Mask{1} << x;
      if (!(a & bit) && c.r(a | bit) == c.r(a)) spanned |= bit;
    }
    std::optional<std::string> bad;
    for_each_submask(spanned, [&](Mask xs) {
      if (!bad && c.r(a | xs) != c.r(a)) {
        bad = "A=" + str(a) + " X=" + str(xs);
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Check lemma6(Context& c) {
  if (c.closed.empty()) return std::string("no closed set exists");
  for (Mask z1 : c.closed) {
    for (Mask z2 : c.closed) {
      if (!is_closed(c.m, set_of(z1 & z2))) {
        return str(z1) + " & " + str(z2) + " is not closed";
      }
    }
  }
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<std::size_t> pick(0, c.closed.size() - 1);
  for (int trial = 0; trial < 64; ++trial) {
    const std::size_t k = 3 + static_cast<std::size_t>(trial % 3);
    Mask meet = c.full;
    std::string family;
    for (std::size_t i = 0; i < k; ++i) {
      const Mask z = c.closed[pick(rng)];
      meet &= z;
      family += (i ? " " : "") + str(z);
    }
    if (!is_closed(c.m, set_of(meet))) {
      return "intersection of family " + family + " is not closed";
    }
  }
  return std::nullopt;
}

Check lemma7(Context& c) {
  for (Mask x : c.order) {
    const Mask cx = c.closure_of[x];
    for (Mask z : c.closed) {
      if ((x & ~z) == 0 && (cx & ~z) != 0) {
        return "a) closure(" + str(x) + ")=" + str(cx) +
               " escapes closed superset " + str(z);
      }
    }
    for (std::size_t y = 0; y < c.n; ++y) {
      const Mask bigger = x | (Mask{1} << y);
      if ((cx & ~c.closure_of[bigger]) != 0) {
        return "b) closure(" + str(x) + ") is not inside closure(" +
               str(bigger) + ")";
      }
    }
    if (c.closure_of[cx] != cx) {
      return "c) closure(closure(" + str(x) + "))=" + str(c.closure_of[cx]) +
             " != " + str(cx);
    }
  }
  return std::nullopt;
}

Check lemma8(Context& c) {
  for (Mask x : c.order) {
    const Mask by_meet = closure_by_intersection(c.m, set_of(x), c.n).mask();
    if (by_meet != c.closure_of[x]) {
      return "closure(" + str(x) + ")=" + str(c.closure_of[x]) +
             " but the intersection of closed supersets is " + str(by_meet);
    }
  }
  return std::nullopt;
}

Check lemma9(Context& c) {
  for (Mask b : c.order) {
    bool maximal = c.indep(b);
    for (std::size_t x = 0; x < c.n && maximal; ++x) {
      const Mask bit = Mask{1} << x;
      if (!(b & bit) && c.indep(b | bit)) maximal = false;
    }
    if (maximal != is_base(c.m, set_of(b))) {
      return "maximal independence and is_base disagree at " + str(b);
    }
  }
  return std::nullopt;
}

// fits in mask form: z0 attains the contracted rank of a.
bool fits_mask(Context& c, Mask z, Mask a, Mask z0) {
  return c.r(a | z0) - c.r(z0) == c.r(a | z) - c.r(z);
}

Check lemma10(Context& c) {
  std::mt19937_64 rng(c.seed ^ 0x10ab);
  for (Mask z : c.order) {
    const Mask outside = c.full & ~z;
    // Library forms agree with the mask forms and the definition.
    std::optional<std::string> bad;
    for_each_submask(outside, [&](Mask a) {
      if (bad) return;
      const ElementSet za = set_of(z), aa = set_of(a);
      if (contracted_rank(c.m, za, aa) !=
          contracted_rank_by_minimum(c.m, za, aa)) {
        bad = "contracted rank of " + str(a) + " over " + str(z) +
              " differs from the minimum over subsets";
        return;
      }
      for_each_submask(z, [&](Mask z0) {
        if (!bad && fits(c.m, za, aa, set_of(z0)) != fits_mask(c, z, a, z0)) {
          bad = "fits disagrees for Z=" + str(z) + " A=" + str(a) +
                " Z0=" + str(z0);
        }
      });
    });
    if (bad) return bad;

    // a) upward closure of fitting within Z.
    for_each_submask(outside, [&](Mask a) {
      for_each_submask(z, [&](Mask z1) {
        for_each_submask(z1, [&](Mask z0) {
          if (!bad && fits_mask(c, z, a, z0) && !fits_mask(c, z, a, z1)) {
            bad = "a) Z0=" + str(z0) + " fits A=" + str(a) + " but Z1=" +
                  str(z1) + " does not (Z=" + str(z) + ")";
          }
        });
      });
    });
    if (bad) return bad;

    // b) the union of per-member fitting sets fits a whole family.
    std::vector<Mask> members;
    for_each_submask(outside, [&](Mask a) { members.push_back(a); });
    auto first_fit = [&](Mask a) {
      Mask best = z;
      for_each_submask(z, [&](Mask z0) {
        if (fits_mask(c, z, a, z0) &&
            (popcount(z0) < popcount(best) ||
             (popcount(z0) == popcount(best) && z0 < best))) {
          best = z0;
        }
      });
      return best;
    };
    std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
    for (int trial = 0; trial < 16; ++trial) {
      const std::size_t k = 1 + static_cast<std::size_t>(trial % 4);
      std::vector<Mask> family;
      Mask joint = 0;
      for (std::size_t i = 0; i < k; ++i) {
        family.push_back(members[pick(rng)]);
        joint |= first_fit(family.back());
      }
      for (Mask a : family) {
        if (!fits_mask(c, z, a, joint)) {
          return "b) union " + str(joint) + " of fitting sets does not fit " +
                 str(a) + " (Z=" + str(z) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

Check lemma11(Context& c) {
  for (Mask z : c.order) {
    const Minor minor = contract(c.m, set_of(z));
    const AxiomReport rep = validate_axioms(minor.matroid, c.n);
    if (!rep.ok) {
      return "M/" + str(z) + " violates " + rep.axiom + ": " + rep.detail;
    }
    std::optional<std::string> bad;
    for_each_submask(c.full & ~z, [&](Mask a) {
      if (bad) return;
      const ElementSet child = minor.from_parent(set_of(a));
      if (minor.matroid.rank(child) > c.r(a)) {
        bad = "r'(" + str(a) + ") > r(" + str(a) + ") for Z=" + str(z);
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Check lemma12(Context& c) {
  for (Mask z : c.order) {
    const Minor minor = contract(c.m, set_of(z));
    std::optional<std::string> bad;
    for_each_submask(c.full & ~z, [&](Mask x) {
      if (bad) return;
      const bool in_minor =
          is_independent(minor.matroid, minor.from_parent(set_of(x)));
      bool all_y = true;
      for_each_submask(z, [&](Mask y) {
        if (c.indep(y) && !c.indep(x | y)) all_y = false;
      });
      if (in_minor != all_y) {
        bad = "X=" + str(x) + " Z=" + str(z) + ": independent in M/Z is " +
              (in_minor ? "true" : "false");
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Check lemma13(Context& c) {
  for (Mask z : c.order) {
    const bool loop_free = is_loop_free(contract(c.m, set_of(z)).matroid);
    if (loop_free != is_closed(c.m, set_of(z))) {
      return "Z=" + str(z) + ": M/Z loop-free is " +
             (loop_free ? std::string("true") : std::string("false"));
    }
  }
  return std::nullopt;
}

Coloring all_distinct(std::size_t n) {
  Coloring phi;
  for (Element e = 0; e < n; ++e) phi[e] = std::to_string(e);
  return phi;
}

Check lemma14(Context& c) {
  const bool distinct_proper = is_proper(c.m, all_distinct(c.n));
  if (distinct_proper != c.loop_free) {
    return "all-distinct coloring proper is " +
           std::string(distinct_proper ? "true" : "false") +
           " on a matroid that is " + (c.loop_free ? "" : "not ") +
           "loop-free";
  }
  try {
    const ChromaticResult chr = chromatic_number(c.m, c.n);
    if (!c.loop_free) return std::string("chromatic_number succeeded with a loop");
    if (!is_proper(c.m, chr.witness)) {
      return "chromatic witness " + to_string(chr.witness) + " is improper";
    }
  } catch (const InputError&) {
    if (c.loop_free) return std::string("chromatic_number rejected a loop-free matroid");
  }
  return std::nullopt;
}

Check lemma15(Context& c, std::string& note) {
  if (!c.loop_free) {
    note = "vacuous (loops)";
    return std::nullopt;
  }
  // Distinct list colors always exist when every list has n colors.
  std::mt19937_64 rng(c.seed ^ 0x15);
  std::uniform_int_distribution<std::size_t> color(0, 2 * c.n);
  for (int trial = 0; trial < 32; ++trial) {
    Listing l;
    Coloring phi;
    std::vector<bool> used(2 * c.n + 1, false);
    for (Element e = 0; e < c.n; ++e) {
      std::vector<std::size_t> menu;
      while (menu.size() < c.n) {
        const std::size_t col = color(rng);
        if (std::find(menu.begin(), menu.end(), col) == menu.end()) {
          menu.push_back(col);
        }
      }
      for (std::size_t col : menu) l[e].push_back("c" + std::to_string(col));
      for (std::size_t col : menu) {
        if (!used[col]) {
          used[col] = true;
          phi[e] = "c" + std::to_string(col);
          break;
        }
      }
    }
    if (phi.size() != c.n || !is_proper(c.m, phi)) {
      return "distinct-color construction failed on " + to_string(l);
    }
  }
  if (c.n <= kListChromaticMaxN) {
    const std::size_t chr = chromatic_number(c.m, c.n).k;
    const std::size_t kmax = std::min(c.n, kListChromaticMaxK);
    const ListChromaticResult list = list_chromatic_number(c.m, kmax);
    if (list.k) {
      if (*list.k > c.n || *list.k < chr) {
        return "List=" + std::to_string(*list.k) + " outside [Chr=" +
               std::to_string(chr) + ", n=" + std::to_string(c.n) + "]";
      }
      note = "List=" + std::to_string(*list.k);
    } else {
      note = "List=" + std::to_string(c.n) + " (by construction)";
    }
  }
  return std::nullopt;
}

Check lemma16(Context& c) {
  for (const Circuit& circ : c.circuit_list) {
    const Mask cm = circ.mask();
    for (Mask z : c.closed) {
      for (Element x : circ) {
        const Mask rest = cm & ~(Mask{1} << x);
        if ((rest & ~z) == 0 && (cm & ~z) != 0) {
          return "C=" + circ.to_string() + " x=" + std::to_string(x) +
                 " closed Z=" + str(z);
        }
      }
    }
  }
  return std::nullopt;
}

Check lemma17(Context& c, std::string& note) {
  if (!c.loop_free) {
    note = "vacuous (loops)";
    return std::nullopt;
  }
  for (const ElementSet& b : all_bases(c.m, c.n)) {
    const std::size_t r = b.size();
    // positions[x]: base positions in x's fundamental circuit.
    std::vector<std::vector<std::size_t>> positions(c.n);
    for (Element x = 0; x < c.n; ++x) {
      if (b.contains(x)) {
        positions[x] = {static_cast<std::size_t>(
            std::lower_bound(b.begin(), b.end(), x) - b.begin())};
        continue;
      }
      const Circuit fc =
          fundamental_circuit(c.m, WellOrderedBase{b.members()}, x);
      for (std::size_t p = 0; p < r; ++p) {
        if (fc.contains(b[p])) positions[x].push_back(p);
      }
      if (positions[x].empty()) {
        return "fundamental circuit " + fc.to_string() +
               " has no base element";
      }
    }
    // The library decomposition agrees for the ascending order.
    const MbDecomposition d = mb_classes(c.m, WellOrderedBase{b.members()});
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::size_t> rank_of(r);
    bool first = true;
    do {
      for (std::size_t i = 0; i < r; ++i) rank_of[perm[i]] = i;
      std::vector<std::size_t> image(c.n);
      for (Element x = 0; x < c.n; ++x) {
        std::size_t best = positions[x].front();
        for (std::size_t p : positions[x]) {
          if (rank_of[p] > rank_of[best]) best = p;
        }
        image[x] = best;
        if (first && b[best] != d.image[x]) {
          return "mb_classes disagrees at x=" + std::to_string(x) +
                 " for B=" + b.to_string();
        }
      }
      first = false;
      for (const Circuit& circ : c.circuit_list) {
        bool repeated = false;
        for (std::size_t i = 0; i < circ.size() && !repeated; ++i) {
          for (std::size_t j = i + 1; j < circ.size() && !repeated; ++j) {
            repeated = image[circ[i]] == image[circ[j]];
          }
        }
        if (!repeated) {
          WellOrderedBase wob;
          for (std::size_t p : perm) wob.elements.push_back(b[p]);
          return "circuit " + circ.to_string() +
                 " has distinct mb values under B=" + wob.to_string();
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

Check lemma18(Context& c) {
  for (Mask a : c.order) {
    const Mask spanned = c.closure_of[a] & ~a;
    const std::size_t want = popcount(a) + 1;
    std::optional<std::string> bad;
    for_each_submask(spanned, [&](Mask x) {
      if (!bad && popcount(x) == want && c.indep(x)) {
        bad = "A=" + str(a) + " independent " + str(x);
      }
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

Check lemma19(Context& c, std::string& note) {
  if (!c.loop_free) {
    note = "vacuous (loops)";
    return std::nullopt;
  }
  const std::size_t chr = chromatic_number(c.m, c.n).k;
  for (Mask a : c.order) {
    const std::size_t spanned = popcount(c.closure_of[a] & ~a);
    if (spanned > chr * popcount(a)) {
      return "A=" + str(a) + " spans " + std::to_string(spanned) +
             " outside elements > Chr*|A|=" + std::to_string(chr * popcount(a));
    }
  }
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = {
      "L1",  "L2a", "L2b", "L3",    "L4",  "L5",  "L6",
      "L7abc", "L8", "L9",  "L10ab", "L11", "L12", "L13",
      "L14", "L15", "L16", "L17",   "L18", "L19-analog"};
  return ids;
}

std::vector<LemmaResult> check_lemmas(const Matroid& m,
                                      const LemmaOptions& options) {
  const std::vector<std::string>& ids = lemma_ids();
  std::vector<LemmaResult> out;
  out.reserve(ids.size());
  if (m.size() > options.max_n) {
    for (const std::string& id : ids) {
      out.push_back({id, LemmaStatus::kSkipped, ""});
    }
    return out;
  }

  Context c(m, options.seed);
  std::string note;
  std::map<std::string, std::function<Check()>> checks = {
      {"L1", [&] { return lemma1(c); }},
      {"L2a", [&] { return elimination(c, false); }},
      {"L2b", [&] { return elimination(c, true); }},
      {"L3", [&] { return lemma3(c); }},
      {"L4", [&] { return lemma4(c); }},
      {"L5", [&] { return lemma5(c); }},
      {"L6", [&] { return lemma6(c); }},
      {"L7abc", [&] { return lemma7(c); }},
      {"L8", [&] { return lemma8(c); }},
      {"L9", [&] { return lemma9(c); }},
      {"L10ab", [&] { return lemma10(c); }},
      {"L11", [&] { return lemma11(c); }},
      {"L12", [&] { return lemma12(c); }},
      {"L13", [&] { return lemma13(c); }},
      {"L14", [&] { return lemma14(c); }},
      {"L15", [&] { return lemma15(c, note); }},
      {"L16", [&] { return lemma16(c); }},
      {"L17", [&] { return lemma17(c, note); }},
      {"L18", [&] { return lemma18(c); }},
      {"L19-analog", [&] { return lemma19(c, note); }},
  };
  for (const std::string& id : ids) {
    if (id == "L17" && m.size() > options.ordered_base_max_n) {
      out.push_back({id, LemmaStatus::kSkipped, ""});
      continue;
    }
    note.clear();
    Check result;
    try {
      result = checks.at(id)();
    } catch (const std::exception& e) {
      // Library preconditions fail on oracles that are not matroids.
      result = std::string("threw: ") + e.what();
    }
    if (result) {
      out.push_back({id, LemmaStatus::kFail, *result});
    } else {
      out.push_back({id, LemmaStatus::kPass, note});
    }
  }
  return out;
}

std::string to_string(const LemmaResult& r) {
  switch (r.status) {
    case LemmaStatus::kPass:
      return r.id + ": pass" + (r.detail.empty() ? "" : " (" + r.detail + ")");
    case LemmaStatus::kFail:
      return r.id + ": fail " + r.detail;
    case LemmaStatus::kSkipped:
      return r.id + ": skipped (size)";
  }
  return r.id;
}

}  // namespace matroid
