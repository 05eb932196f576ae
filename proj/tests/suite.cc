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

#include "suite.h"

#include <random>
#include <utility>

#include "matroid/constructions.h"

namespace suite {

std::vector<Entry> uniform_entries() {
  std::vector<Entry> out;
  for (std::size_t n = 0; n <= 7; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      out.push_back({"uniform(" + std::to_string(n) + "," + std::to_string(k) +
                         ")",
                     matroid::uniform(n, k), oracle::uniform_table(n, k)});
    }
  }
  return out;
}

std::vector<Entry> graphic_entries() {
  // Edge slots on 4 vertices: 4 self-loops then the 6 pairs.
  std::vector<std::pair<int, int>> slots;
  for (int v = 0; v < 4; ++v) slots.push_back({v, v});
  for (int u = 0; u < 4; ++u) {
    for (int v = u + 1; v < 4; ++v) slots.push_back({u, v});
  }
  std::vector<Entry> out;
  std::vector<std::size_t> pick;
  // Non-decreasing slot sequences enumerate each multiset once.
  auto emit = [&] {
    matroid::GraphSpec g;
    std::vector<std::pair<int, int>> edges;
    std::string name = "graph[";
    for (std::size_t i = 0; i < pick.size(); ++i) {
      const auto [u, v] = slots[pick[i]];
      edges.push_back({u, v});
      g.edges.push_back({static_cast<matroid::Element>(i), std::to_string(u),
                         std::to_string(v)});
      name += (i ? " " : "") + std::to_string(u) + "-" + std::to_string(v);
    }
    out.push_back({name + "]", matroid::graphic(g),
                   oracle::graphic_table(edges)});
  };
  auto extend = [&](auto&& self, std::size_t from) -> void {
    emit();
    if (pick.size() == 5) return;
    for (std::size_t s = from; s < slots.size(); ++s) {
      pick.push_back(s);
      self(self, s);
      pick.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<Entry> linear_entries() {
  std::mt19937_64 rng(kLinearSeed);
  std::vector<Entry> out;
  for (int i = 0; i < kLinearCount; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t dim = 1 + rng() % 4;
    matroid::VectorSpec spec{2, dim, {}};
    std::vector<std::vector<std::uint32_t>> vecs;
    for (std::size_t e = 0; e < n; ++e) {
      std::vector<std::uint32_t> v(dim);
      for (auto& c : v) c = static_cast<std::uint32_t>(rng() % 2);
      vecs.push_back(v);
      spec.vectors.push_back({static_cast<matroid::Element>(e), v});
    }
    out.push_back({"gf2#" + std::to_string(i), matroid::linear(spec),
                   oracle::linear_table(vecs, 2, dim)});
  }
  return out;
}

const std::vector<Entry>& all() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> v = uniform_entries();
    for (auto* part : {graphic_entries, linear_entries}) {
      for (Entry& e : part()) v.push_back(std::move(e));
    }
    return v;
  }();
  return entries;
}

}  // namespace suite
