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

#include "matroid/compactness.h"

#include <algorithm>
#include <map>
#include <memory>
#include <random>

#include "list_search.h"
#include "matroid/constructions.h"
#include "matroid/errors.h"

namespace matroid {

ChainedMatroid::ChainedMatroid(std::string name, Generator generator)
    : name_(std::move(name)), generator_(std::move(generator)) {}

ChainedMatroid::ChainedMatroid(std::string name, std::vector<Matroid> levels)
    : name_(std::move(name)), count_(levels.size()) {
  auto shared = std::make_shared<std::vector<Matroid>>(std::move(levels));
  generator_ = [shared](std::size_t i) { return shared->at(i); };
}

std::optional<std::size_t> ChainedMatroid::level_count() const {
  return count_;
}

const Matroid& ChainedMatroid::level(std::size_t i) const {
  if (count_ && i >= *count_) {
    throw InputError("chain " + name_ + " has only " + std::to_string(*count_) +
                     " levels (asked for level " + std::to_string(i) + ")");
  }
  while (levels_.size() <= i) {
    levels_.push_back(generator_(levels_.size()));
    check_consistent(levels_.size() - 1);
  }
  return levels_[i];
}

void ChainedMatroid::check_consistent(std::size_t i) const {
  if (i == 0) return;
  const Matroid& prev = levels_[i - 1];
  const Matroid& cur = levels_[i];
  if (cur.size() <= prev.size()) {
    levels_.pop_back();
    throw ChainError("chain " + name_ + ": level " + std::to_string(i) +
                     " has " + std::to_string(cur.size()) +
                     " elements, not more than level " +
                     std::to_string(i - 1) + "'s " +
                     std::to_string(prev.size()));
  }
  auto check = [&](const ElementSet& a) {
    if (prev.rank(a) != cur.rank(a)) {
      const std::size_t rp = prev.rank(a), rc = cur.rank(a);
      levels_.pop_back();
      throw ChainError("chain " + name_ + ": rank of " + a.to_string() +
                       " is " + std::to_string(rp) + " at level " +
                       std::to_string(i - 1) + " but " + std::to_string(rc) +
                       " at level " + std::to_string(i));
    }
  };
  const std::size_t n = prev.size();
  if (n <= 10) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      check(ElementSet::from_mask(mask));
    }
    return;
  }
  // Spot check: every singleton and pair, then seeded random subsets.
  for (Element x = 0; x < n; ++x) {
    for (Element y = x; y < n; ++y) check(ElementSet{x, y});
  }
  std::mt19937_64 rng(i);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 256; ++trial) {
    std::vector<Element> members;
    for (Element x = 0; x < n; ++x) {
      if (coin(rng)) members.push_back(x);
    }
    check(ElementSet(std::move(members)));
  }
}

namespace {

GraphSpec disjoint_cycles(const std::vector<std::size_t>& lengths) {
  GraphSpec g;
  Element id = 0;
  std::size_t vertex = 0;
  for (std::size_t len : lengths) {
    for (std::size_t j = 0; j < len; ++j) {
      g.edges.push_back({id++, "v" + std::to_string(vertex + j),
                         "v" + std::to_string(vertex + (j + 1) % len)});
    }
    vertex += len;
  }
  return g;
}

}  // namespace

ChainedMatroid disjoint_triangles_chain() {
  return ChainedMatroid("disjoint-triangles", [](std::size_t level) {
    return graphic(disjoint_cycles(std::vector<std::size_t>(level + 1, 3)));
  });
}

ChainedMatroid growing_cycle_chain() {
  return ChainedMatroid("growing-cycle", [](std::size_t level) {
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i <= level; ++i) lengths.push_back(i + 3);
    return graphic(disjoint_cycles(lengths));
  });
}

ChainedMatroid growing_uniform_chain(std::size_t rank) {
  return ChainedMatroid("growing-uniform", [rank](std::size_t level) {
    return uniform(level + 3, std::min(rank, level + 3));
  });
}

ChainedMatroid chain_family(const std::string& name) {
  if (name == "disjoint-triangles") return disjoint_triangles_chain();
  if (name == "growing-cycle") return growing_cycle_chain();
  if (name == "growing-uniform") return growing_uniform_chain();
  throw InputError("unknown chain family \"" + name +
                   "\" (expected disjoint-triangles, growing-cycle or "
                   "growing-uniform)");
}

namespace {

struct LevelLists {
  std::vector<Color> tokens;
  std::vector<std::vector<int>> lists;
};

// Integer lists for elements 0..n-1, colors numbered in token order.
LevelLists lists_for(const Listing& l, std::size_t n) {
  std::map<Color, int> ids;
  for (Element e = 0; e < n; ++e) {
    auto it = l.find(e);
    if (it == l.end()) {
      throw InputError("listing has no entry for element " +
                       std::to_string(e));
    }
    for (const Color& c : it->second) ids.emplace(c, 0);
  }
  LevelLists out;
  for (auto& [token, id] : ids) {
    id = static_cast<int>(out.tokens.size());
    out.tokens.push_back(token);
  }
  out.lists.resize(n);
  for (Element e = 0; e < n; ++e) {
    for (const Color& c : l.at(e)) out.lists[e].push_back(ids.at(c));
    std::sort(out.lists[e].begin(), out.lists[e].end());
    out.lists[e].erase(std::unique(out.lists[e].begin(), out.lists[e].end()),
                       out.lists[e].end());
  }
  return out;
}

Coloring to_coloring(const std::vector<int>& assignment,
                     const std::vector<Color>& tokens, std::size_t n) {
  Coloring phi;
  for (Element e = 0; e < n; ++e) phi[e] = tokens[assignment[e]];
  return phi;
}

}  // namespace

std::vector<Coloring> restriction_colorings(const ChainedMatroid& chain,
                                            const Listing& l, std::size_t i,
                                            std::size_t max_n) {
  const Matroid& m = chain.level(i);
  require_within_bound("restriction_colorings", m.size(), max_n);
  const LevelLists ll = lists_for(l, m.size());
  SubsetRanks ranks(m);
  std::vector<Element> order(m.size());
  for (Element e = 0; e < m.size(); ++e) order[e] = e;
  std::vector<Coloring> out;
  internal::ListSearch search(ll.lists, ll.tokens.size());
  search.run(
      order, [&](std::uint64_t mask) { return ranks.independent(mask); },
      [&](const std::vector<int>& assignment) {
        out.push_back(to_coloring(assignment, ll.tokens, m.size()));
        return true;
      });
  return out;
}

ExtensionResult extend_coloring(const ChainedMatroid& chain, const Listing& l,
                                std::size_t depth, std::size_t max_n) {
  ExtensionResult result;
  std::vector<const Matroid*> levels;
  for (std::size_t i = 0; i <= depth; ++i) {
    levels.push_back(&chain.level(i));
    require_within_bound("extend_coloring", levels.back()->size(), max_n);
  }
  const std::size_t n = levels.back()->size();
  const LevelLists ll = lists_for(l, n);

  std::vector<SubsetRanks> ranks;
  ranks.reserve(levels.size());
  for (const Matroid* m : levels) ranks.emplace_back(*m);

  // A level with no proper L-coloring of its own ends every path through
  // it; report the first one.
  for (std::size_t i = 0; i <= depth; ++i) {
    const std::size_t size = levels[i]->size();
    std::vector<std::vector<int>> lists(ll.lists.begin(),
                                        ll.lists.begin() + size);
    std::vector<Element> order(size);
    for (Element e = 0; e < size; ++e) order[e] = e;
    internal::ListSearch probe(lists, ll.tokens.size());
    bool colorable = false;
    probe.run(
        order, [&](std::uint64_t mask) { return ranks[i].independent(mask); },
        [&](const std::vector<int>&) {
          colorable = true;
          return false;
        });
    if (!colorable) {
      result.failed_level = i;
      result.diagnostic = "level " + std::to_string(i) + " (" +
                          std::to_string(size) +
                          " elements) has no proper L-coloring";
      return result;
    }
  }

  std::vector<int> assignment(n, -1);
  // Depth-first over levels; extend() returns true once level `depth` is
  // colored.
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    ++result.nodes_visited;
    if (i > depth) return true;
    const std::size_t lo = i == 0 ? 0 : levels[i - 1]->size();
    const std::size_t hi = levels[i]->size();
    std::vector<std::vector<int>> lists(ll.lists.begin(),
                                        ll.lists.begin() + hi);
    internal::ListSearch search(lists, ll.tokens.size());
    for (Element e = 0; e < lo; ++e) {
      search.classes()[assignment[e]] |= std::uint64_t{1} << e;
      search.assignment()[e] = assignment[e];
    }
    std::vector<Element> fresh;
    for (Element e = static_cast<Element>(lo); e < hi; ++e) fresh.push_back(e);
    bool done = false;
    search.run(
        fresh, [&](std::uint64_t mask) { return ranks[i].independent(mask); },
        [&](const std::vector<int>& level_assignment) {
          for (Element e = static_cast<Element>(lo); e < hi; ++e) {
            assignment[e] = level_assignment[e];
          }
          done = extend(i + 1);
          return !done;
        });
    return done;
  };
  if (extend(0)) {
    result.coloring = to_coloring(assignment, ll.tokens, n);
  } else {
    result.diagnostic =
        "every level is colorable on its own but no coloring of level " +
        std::to_string(depth) + " extends the earlier levels";
  }
  return result;
}

}  // namespace matroid
