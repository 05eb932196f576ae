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

#include "matroid/coloring.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "list_search.h"
#include "matroid/closure.h"
#include "matroid/errors.h"

namespace matroid {

std::string to_string(const Coloring& phi) {
  std::string out;
  for (const auto& [e, c] : phi) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e) + ':' + c;
  }
  return out;
}

std::string to_string(const Listing& l) {
  std::string out;
  for (const auto& [e, colors] : l) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e) + ":{";
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (i > 0) out += ',';
      out += colors[i];
    }
    out += '}';
  }
  return out;
}

namespace {

template <class Map>
void require_total(const Matroid& m, const Map& map, const char* what) {
  if (map.size() != m.size() ||
      (!map.empty() && map.rbegin()->first >= m.size())) {
    for (Element e = 0; e < m.size(); ++e) {
      if (!map.contains(e)) {
        throw InputError(std::string(what) + " is missing element " +
                         std::to_string(e));
      }
    }
    throw InputError(std::string(what) + " names elements outside 0.." +
                     std::to_string(m.size() == 0 ? 0 : m.size() - 1));
  }
}

std::map<Color, ElementSet> color_classes(const Coloring& phi) {
  std::map<Color, std::vector<Element>> groups;
  for (const auto& [e, c] : phi) groups[c].push_back(e);
  std::map<Color, ElementSet> out;
  for (auto& [c, members] : groups) out.emplace(c, ElementSet(members));
  return out;
}

// Integer form of a listing: colors numbered in ascending token order.
struct IntListing {
  std::vector<Color> tokens;
  std::vector<std::vector<int>> lists;
};

IntListing to_int_listing(const Listing& l, std::size_t n) {
  std::map<Color, int> ids;
  for (const auto& [e, colors] : l) {
    for (const Color& c : colors) ids.emplace(c, 0);
  }
  IntListing out;
  for (auto& [token, id] : ids) {
    id = static_cast<int>(out.tokens.size());
    out.tokens.push_back(token);
  }
  out.lists.resize(n);
  for (const auto& [e, colors] : l) {
    for (const Color& c : colors) out.lists[e].push_back(ids.at(c));
    std::sort(out.lists[e].begin(), out.lists[e].end());
    out.lists[e].erase(std::unique(out.lists[e].begin(), out.lists[e].end()),
                       out.lists[e].end());
  }
  return out;
}

}  // namespace

bool is_proper_by_classes(const Matroid& m, const Coloring& phi) {
  require_total(m, phi, "coloring");
  for (const auto& [color, members] : color_classes(phi)) {
    if (!is_independent(m, members)) return false;
  }
  return true;
}

bool is_proper_by_circuits(const Matroid& m, const Coloring& phi,
                           std::size_t max_n) {
  require_total(m, phi, "coloring");
  for (const Circuit& c : circuits(m, max_n)) {
    const Color& first = phi.at(c[0]);
    bool mono = std::all_of(c.begin(), c.end(),
                            [&](Element e) { return phi.at(e) == first; });
    if (mono) return false;
  }
  return true;
}

bool is_proper(const Matroid& m, const Coloring& phi) {
  const bool by_classes = is_proper_by_classes(m, phi);
  if (m.size() <= kEnumerateMaxN &&
      by_classes != is_proper_by_circuits(m, phi)) {
    throw std::logic_error(
        "color-class and circuit properness disagree; the oracle is not a "
        "matroid rank function");
  }
  return by_classes;
}

namespace {

void require_loop_free(const Matroid& m) {
  for (Element e = 0; e < m.size(); ++e) {
    if (m.rank(ElementSet{e}) == 0) {
      throw InputError("no proper coloring exists: element " +
                       std::to_string(e) + " is a loop");
    }
  }
}

bool partition_step(SubsetRanks& ranks, std::size_t x, std::size_t k,
                    std::vector<std::uint64_t>& classes,
                    std::vector<std::size_t>& color_of) {
  if (x == ranks.size()) return true;
  const std::uint64_t bit = std::uint64_t{1} << x;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (!ranks.independent(classes[c] | bit)) continue;
    classes[c] |= bit;
    color_of[x] = c;
    if (partition_step(ranks, x + 1, k, classes, color_of)) return true;
    classes[c] &= ~bit;
  }
  // Opening classes in order fixes the first element of each color.
  if (classes.size() < k) {
    classes.push_back(bit);
    color_of[x] = classes.size() - 1;
    if (partition_step(ranks, x + 1, k, classes, color_of)) return true;
    classes.pop_back();
  }
  return false;
}

std::optional<Coloring> k_coloring_with(SubsetRanks& ranks, std::size_t k) {
  std::vector<std::uint64_t> classes;
  std::vector<std::size_t> color_of(ranks.size(), 0);
  if (!partition_step(ranks, 0, k, classes, color_of)) return std::nullopt;
  Coloring phi;
  for (Element e = 0; e < ranks.size(); ++e) {
    phi[e] = std::to_string(color_of[e]);
  }
  return phi;
}

}  // namespace

std::optional<Coloring> k_coloring(const Matroid& m, std::size_t k,
                                   std::size_t max_n) {
  require_within_bound("k_coloring", m.size(), max_n);
  require_loop_free(m);
  SubsetRanks ranks(m);
  return k_coloring_with(ranks, k);
}

ChromaticResult chromatic_number(const Matroid& m, std::size_t max_n) {
  require_within_bound("chromatic", m.size(), max_n);
  require_loop_free(m);
  SubsetRanks ranks(m);
  const std::size_t n = m.size();
  if (n == 0) return {};
  // Each class holds at most rank(S) elements.
  const std::size_t r = ranks.rank(ranks.full_mask());
  for (std::size_t k = (n + r - 1) / r; k <= n; ++k) {
    if (auto phi = k_coloring_with(ranks, k)) return {k, std::move(*phi)};
  }
  throw std::logic_error("a loop-free matroid is always n-colorable");
}

ListColoringResult is_list_colorable(const Matroid& m, const Listing& l,
                                     std::size_t max_n) {
  require_within_bound("list coloring", m.size(), max_n);
  require_total(m, l, "listing");
  ListColoringResult result;
  for (const auto& [e, colors] : l) {
    if (colors.empty()) {
      result.diagnostic = "element " + std::to_string(e) + " has an empty list";
      return result;
    }
  }
  const IntListing il = to_int_listing(l, m.size());
  std::vector<Element> order(m.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return il.lists[a].size() < il.lists[b].size();
  });

  SubsetRanks ranks(m);
  internal::ListSearch search(il.lists, il.tokens.size());
  std::vector<int> found;
  search.run(
      order, [&](std::uint64_t mask) { return ranks.independent(mask); },
      [&](const std::vector<int>& assignment) {
        found = assignment;
        return false;
      });
  if (found.empty() && m.size() > 0) {
    result.diagnostic = "no proper list coloring exists";
    return result;
  }
  Coloring phi;
  for (Element e = 0; e < m.size(); ++e) phi[e] = il.tokens[found[e]];
  result.coloring = std::move(phi);
  return result;
}

namespace {

// Enumerates canonical k-listings of `members` in which every color is on
// at least two lists, and stops at the first one that cannot be colored.
class NoPrivateListingSearch {
 public:
  NoPrivateListingSearch(SubsetRanks& ranks, std::vector<Element> members,
                         std::size_t k)
      : ranks_(ranks),
        members_(std::move(members)),
        k_(static_cast<int>(k)),
        lists_(ranks.size()) {}

  // True if an uncolorable listing was found; it is left in lists().
  bool find_bad_listing() {
    count_.assign(members_.size() * k_, 0);
    return generate(0, 0, 0);
  }

  const std::vector<std::vector<int>>& lists() const { return lists_; }
  std::size_t checked() const { return checked_; }

 private:
  bool generate(std::size_t i, int used, int singles) {
    if (i == members_.size()) {
      if (singles != 0) return false;
      ++checked_;
      return !colorable(used);
    }
    const int remaining = static_cast<int>(members_.size() - i - 1);
    std::vector<int>& list = lists_[members_[i]];
    for (int reuse = std::min(k_, used); reuse >= 0; --reuse) {
      const int fresh = k_ - reuse;
      // Choose `reuse` of the used colors, in lexicographic order.
      std::vector<int> pick(reuse);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        int next_singles = singles + fresh;
        for (int c : pick) next_singles += count_[c] == 1 ? -1 : 0;
        // Each later list can pair up at most k single colors.
        if (next_singles <= k_ * remaining) {
          list = pick;
          for (int f = 0; f < fresh; ++f) list.push_back(used + f);
          for (int c : list) ++count_[c];
          const bool found = generate(i + 1, used + fresh, next_singles);
          for (int c : list) --count_[c];
          if (found) return true;
        }
        if (!next_combination(pick, used)) break;
      }
    }
    list.clear();
    return false;
  }

  static bool next_combination(std::vector<int>& pick, int universe) {
    const int r = static_cast<int>(pick.size());
    int i = r - 1;
    while (i >= 0 && pick[i] == universe - r + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    return true;
  }

  bool colorable(int num_colors) {
    internal::ListSearch search(lists_, static_cast<std::size_t>(num_colors));
    bool any = false;
    search.run(
        members_, [&](std::uint64_t mask) { return ranks_.independent(mask); },
        [&](const std::vector<int>&) {
          any = true;
          return false;
        });
    return any;
  }

  SubsetRanks& ranks_;
  std::vector<Element> members_;
  int k_;
  std::vector<std::vector<int>> lists_;
  std::vector<int> count_;
  std::size_t checked_ = 0;
};

}  // namespace

ListChromaticResult list_chromatic_number(const Matroid& m, std::size_t kmax,
                                          const ListChromaticLimits& limits) {
  require_within_bound("list_chromatic", m.size(), limits.max_n);
  if (kmax > limits.max_k) {
    throw BoundExceeded("list_chromatic: kmax " + std::to_string(kmax) +
                        " exceeds bound " + std::to_string(limits.max_k));
  }
  require_loop_free(m);
  const std::size_t n = m.size();
  SubsetRanks ranks(m);
  std::vector<std::uint64_t> subsets = canonical_masks(n);
  std::reverse(subsets.begin(), subsets.end());

  ListChromaticResult result;
  if (n == 0) {
    result.k = 0;
    return result;
  }
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::optional<Listing> bad;
    for (std::uint64_t t : subsets) {
      if (std::popcount(t) < 2) continue;
      const ElementSet members = ElementSet::from_mask(t);
      NoPrivateListingSearch search(ranks, members.members(), k);
      const bool found = search.find_bad_listing();
      result.listings_checked += search.checked();
      if (!found) continue;
      Listing l;
      int next_fresh = 0;
      for (Element e : members) {
        for (int c : search.lists()[e]) next_fresh = std::max(next_fresh, c + 1);
      }
      for (Element e = 0; e < n; ++e) {
        std::vector<Color>& list = l[e];
        if (members.contains(e)) {
          for (int c : search.lists()[e]) list.push_back(std::to_string(c));
        } else {
          for (std::size_t f = 0; f < k; ++f) {
            list.push_back(std::to_string(next_fresh++));
          }
        }
      }
      bad = std::move(l);
      break;
    }
    if (!bad) {
      result.k = k;
      return result;
    }
    result.failures.push_back(std::move(*bad));
  }
  return result;
}

Coloring color_from_base(const Matroid& m, const WellOrderedBase& b,
                         const Listing& l) {
  require_total(m, l, "listing");
  const MbDecomposition d = mb_classes(m, b);
  Coloring phi;
  for (const auto& [key, members] : d.classes) {
    for (Element x : members) {
      std::vector<Color> list = l.at(x);
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      if (list.size() < members.size()) {
        throw InputError("class of base element " + std::to_string(key) +
                         " has " + std::to_string(members.size()) +
                         " members but element " + std::to_string(x) +
                         " lists only " + std::to_string(list.size()) +
                         " colors (deficit " +
                         std::to_string(members.size() - list.size()) + ")");
      }
    }
    std::vector<Color> used;
    for (Element x : members) {
      std::vector<Color> list = l.at(x);
      std::sort(list.begin(), list.end());
      for (const Color& c : list) {
        if (std::find(used.begin(), used.end(), c) == used.end()) {
          phi[x] = c;
          used.push_back(c);
          break;
        }
      }
    }
  }
  if (!is_proper(m, phi)) {
    throw std::logic_error("color_from_base produced an improper coloring: " +
                           to_string(phi));
  }
  return phi;
}

DegreeBoundReport degree_bound_check(const Matroid& m, const ElementSet& a) {
  require_loop_free(m);
  DegreeBoundReport report;
  report.spanned = closure(m, a) - a;
  report.chromatic = chromatic_number(m).k;

  const std::size_t take = a.size() + 1;
  const std::vector<Element> pool(report.spanned.begin(),
                                  report.spanned.end());
  if (take <= pool.size()) {
    std::vector<bool> select(pool.size(), false);
    std::fill(select.begin(), select.begin() + take, true);
    do {
      std::vector<Element> chosen;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (select[i]) chosen.push_back(pool[i]);
      }
      ++report.subsets_checked;
      ElementSet subset(std::move(chosen));
      if (is_independent(m, subset)) {
        report.ok = false;
        report.independent_witness = std::move(subset);
        report.detail = "independent set of size |A|+1 inside closure(A)-A: " +
                        report.independent_witness->to_string();
        break;
      }
    } while (std::prev_permutation(select.begin(), select.end()));
  }

  const std::size_t bound = report.chromatic * a.size();
  report.count_ok = report.spanned.size() <= bound;
  if (!report.count_ok) {
    report.ok = false;
    if (!report.detail.empty()) report.detail += "; ";
    report.detail += "|closure(A)-A| = " +
                     std::to_string(report.spanned.size()) + " > " +
                     std::to_string(bound);
  }
  return report;
}

}  // namespace matroid
