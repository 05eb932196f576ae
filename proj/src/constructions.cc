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

#include "matroid/constructions.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "matroid/errors.h"

namespace matroid {

std::optional<Element> Minor::from_parent(Element parent) const {
  auto it = std::lower_bound(parent_ids.begin(), parent_ids.end(), parent);
  if (it != parent_ids.end() && *it == parent) {
    return static_cast<Element>(it - parent_ids.begin());
  }
  // Index maps built by restriction/contraction are ascending, but fall back
  // to a scan for hand-made ones.
  for (std::size_t i = 0; i < parent_ids.size(); ++i) {
    if (parent_ids[i] == parent) return static_cast<Element>(i);
  }
  return std::nullopt;
}

ElementSet Minor::to_parent(const ElementSet& child) const {
  std::vector<Element> out;
  out.reserve(child.size());
  for (Element e : child) out.push_back(to_parent(e));
  return ElementSet(std::move(out));
}

ElementSet Minor::from_parent(const ElementSet& parent) const {
  std::vector<Element> out;
  out.reserve(parent.size());
  for (Element e : parent) {
    auto child = from_parent(e);
    if (!child) {
      throw InputError("element " + std::to_string(e) +
                       " is not in the minor's ground set");
    }
    out.push_back(*child);
  }
  return ElementSet(std::move(out));
}

Matroid uniform(std::size_t n, std::size_t k) {
  if (k > n) {
    throw InputError("uniform: rank cap k=" + std::to_string(k) +
                     " exceeds n=" + std::to_string(n));
  }
  return Matroid(
      n, [k](const ElementSet& a) { return std::min(a.size(), k); },
      "uniform(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")",
      UniformSpec{n, k});
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Matroid graphic(const GraphSpec& g) {
  const std::size_t n = g.edges.size();
  std::map<std::string, std::size_t> vertex_index;
  // endpoints[id] = dense vertex indices of edge id.
  std::vector<std::pair<std::size_t, std::size_t>> endpoints(n);
  std::vector<bool> seen(n, false);
  for (const GraphEdge& e : g.edges) {
    if (e.id >= n) {
      throw InputError("graphic: edge id " + std::to_string(e.id) +
                       " is not in 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (seen[e.id]) {
      throw InputError("graphic: duplicate edge id " + std::to_string(e.id));
    }
    seen[e.id] = true;
    auto u = vertex_index.emplace(e.u, vertex_index.size()).first->second;
    auto v = vertex_index.emplace(e.v, vertex_index.size()).first->second;
    endpoints[e.id] = {u, v};
  }
  const std::size_t vertices = vertex_index.size();

  auto oracle = [endpoints, vertices](const ElementSet& a) {
    // Covered vertices minus components among them; each successful union
    // removes exactly one component, so the difference is the union count.
    UnionFind uf(vertices);
    std::size_t merges = 0;
    for (Element e : a) {
      if (uf.unite(endpoints[e].first, endpoints[e].second)) ++merges;
    }
    return merges;
  };
  return Matroid(n, std::move(oracle),
                 "graphic(edges=" + std::to_string(n) +
                     ",vertices=" + std::to_string(vertices) + ")",
                 g);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows,
                       std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    // Fermat inverse; p is prime.
    const std::uint64_t inv = pow_mod(rows[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint64_t factor = rows[r][c] % p * inv % p;
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k) {
        const std::uint64_t sub = factor * rows[rank][k] % p;
        rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + p - sub) % p);
      }
    }
    ++rank;
  }
  return rank;
}

Matroid linear(const VectorSpec& v) {
  if (!is_prime(v.p)) {
    throw InputError("linear: field size " + std::to_string(v.p) +
                     " is not prime");
  }
  const std::size_t n = v.vectors.size();
  std::vector<std::vector<std::uint32_t>> by_id(n);
  std::vector<bool> seen(n, false);
  for (const LabeledVector& lv : v.vectors) {
    if (lv.id >= n || seen[lv.id]) {
      throw InputError("linear: vector ids must be exactly 0.." +
                       std::to_string(n == 0 ? 0 : n - 1) + " (got " +
                       std::to_string(lv.id) + ")");
    }
    if (lv.coords.size() != v.dim) {
      throw InputError("linear: vector " + std::to_string(lv.id) + " has " +
                       std::to_string(lv.coords.size()) +
                       " coordinates, expected " + std::to_string(v.dim));
    }
    for (std::uint32_t c : lv.coords) {
      if (c >= v.p) {
        throw InputError("linear: coordinate " + std::to_string(c) +
                         " of vector " + std::to_string(lv.id) +
                         " is not in 0.." + std::to_string(v.p - 1));
      }
    }
    seen[lv.id] = true;
    by_id[lv.id] = lv.coords;
  }
  auto oracle = [by_id, p = v.p](const ElementSet& a) {
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(a.size());
    for (Element e : a) rows.push_back(by_id[e]);
    return rank_mod_p(std::move(rows), p);
  };
  return Matroid(n, std::move(oracle),
                 "linear(p=" + std::to_string(v.p) +
                     ",dim=" + std::to_string(v.dim) +
                     ",n=" + std::to_string(n) + ")",
                 v);
}

Matroid from_table(const TableSpec& t) {
  require_within_bound("table", t.n, kValidateMaxN);
  if (t.ranks.size() != (std::size_t{1} << t.n)) {
    throw InputError("table: expected " +
                     std::to_string(std::size_t{1} << t.n) +
                     " rank entries, got " + std::to_string(t.ranks.size()));
  }
  Matroid m(
      t.n,
      [ranks = t.ranks](const ElementSet& a) { return ranks[a.mask()]; },
      "table(n=" + std::to_string(t.n) + ")", t);
  AxiomReport report = validate_axioms(m);
  if (!report.ok) {
    std::string witness;
    for (const ElementSet& s : report.witness) {
      if (!witness.empty()) witness += ", ";
      witness += s.to_string();
    }
    throw AxiomError("table violates " + report.axiom + " at (" + witness +
                     "): " + report.detail);
  }
  return m;
}

TableSpec tabulate(const Matroid& m, std::size_t max_n) {
  require_within_bound("tabulate", m.size(), max_n);
  TableSpec t;
  t.n = m.size();
  t.ranks.resize(std::size_t{1} << t.n);
  for (std::uint64_t mask = 0; mask < t.ranks.size(); ++mask) {
    t.ranks[mask] = m.rank(ElementSet::from_mask(mask));
  }
  return t;
}

Minor restriction(const Matroid& m, const ElementSet& a) {
  if (!a.empty() && a.back() >= m.size()) {
    throw InputError("restriction: element " + std::to_string(a.back()) +
                     " is outside the ground set");
  }
  std::vector<Element> ids(a.begin(), a.end());
  auto oracle = [m, ids](const ElementSet& child) {
    std::vector<Element> lifted;
    lifted.reserve(child.size());
    for (Element e : child) lifted.push_back(ids[e]);
    return m.rank(ElementSet(std::move(lifted)));
  };
  Matroid restricted(ids.size(), std::move(oracle),
                     m.description() + "|" + a.to_string());
  return Minor{std::move(restricted), std::move(ids)};
}

}  // namespace matroid
