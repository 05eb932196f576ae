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

#include <doctest.h>

#include "matroid/coloring.h"
#include "matroid/compactness.h"
#include "matroid/constructions.h"
#include "matroid/errors.h"
#include "oracles.h"

using namespace matroid;

namespace {

Listing lists_on(std::size_t n, std::vector<Color> colors) {
  Listing l;
  for (Element e = 0; e < n; ++e) l[e] = colors;
  return l;
}

Coloring restrict_to(const Coloring& phi, std::size_t n) {
  Coloring out;
  for (Element e = 0; e < n; ++e) out[e] = phi.at(e);
  return out;
}

}  // namespace

TEST_SUITE("compactness") {

TEST_CASE("family levels grow and stay consistent") {
  for (const std::string& name :
       {"disjoint-triangles", "growing-cycle", "growing-uniform"}) {
    const ChainedMatroid chain = chain_family(name);
    CAPTURE(name);
    CHECK_FALSE(chain.level_count());
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(validate_axioms(chain.level(i)).ok);
    }
  }
  CHECK(disjoint_triangles_chain().level(3).size() == 12);
  CHECK(growing_cycle_chain().level(2).size() == 3 + 4 + 5);
  CHECK(growing_uniform_chain().level(2).size() == 5);
  CHECK_THROWS_AS(chain_family("spiral"), InputError);
}

TEST_CASE("inconsistent levels are rejected with a witness") {
  const ChainedMatroid bad("bad", std::vector<Matroid>{uniform(2, 1),
                                                       uniform(3, 2)});
  CHECK_NOTHROW(bad.level(0));
  try {
    bad.level(1);
    FAIL("expected a ChainError");
  } catch (const ChainError& e) {
    CHECK(std::string(e.what()).find("{0,1}") != std::string::npos);
  }
  const ChainedMatroid shrinking(
      "shrink", std::vector<Matroid>{uniform(3, 1), uniform(2, 1)});
  CHECK_THROWS_AS(shrinking.level(1), ChainError);
  const ChainedMatroid finite("finite", std::vector<Matroid>{uniform(2, 1)});
  CHECK_THROWS_AS(finite.level(1), InputError);
}

TEST_CASE("large levels are spot checked") {
  // 12 elements exceed the exhaustive consistency bound; a rank change on
  // a pair is still caught.
  const ChainedMatroid bad("bad-large", std::vector<Matroid>{
                                            uniform(11, 2), uniform(12, 3)});
  CHECK_THROWS_AS(bad.level(1), ChainError);
}

TEST_CASE("restriction colorings match brute force") {
  const ChainedMatroid chain = growing_uniform_chain();
  const Listing l = lists_on(5, {"a", "b"});
  // U(2,3): proper 2-colorings split 3 elements into classes of size <= 2.
  const auto level0 = restriction_colorings(chain, l, 0);
  const oracle::Table t = oracle::uniform_table(3, 2);
  std::size_t expected = 0;
  for (int code = 0; code < 8; ++code) {
    std::vector<int> colors{code & 1, code >> 1 & 1, code >> 2 & 1};
    expected += oracle::proper(t, colors);
  }
  CHECK(level0.size() == expected);
  for (std::size_t i = 1; i < level0.size(); ++i) {
    CHECK(to_string(level0[i - 1]) < to_string(level0[i]));
  }
  // U(2,5) needs at least 3 colors.
  CHECK(restriction_colorings(chain, l, 2).empty());
  CHECK_THROWS_AS(restriction_colorings(chain, lists_on(2, {"a"}), 0),
                  InputError);
}

TEST_CASE("two lists extend along disjoint triangles") {
  const ChainedMatroid chain = disjoint_triangles_chain();
  const Listing l = lists_on(15, {"a", "b"});
  const ExtensionResult r = extend_coloring(chain, l, 4);
  REQUIRE(r.coloring);
  CHECK_FALSE(r.failed_level);
  for (std::size_t i = 0; i <= 4; ++i) {
    const Matroid& level = chain.level(i);
    CHECK(is_proper(level, restrict_to(*r.coloring, level.size())));
  }
}

TEST_CASE("an uncolorable level is reported by index") {
  const ChainedMatroid chain = disjoint_triangles_chain();
  Listing l = lists_on(12, {"a", "b"});
  for (Element e : {6u, 7u, 8u}) l[e] = {"a"};
  const ExtensionResult r = extend_coloring(chain, l, 3);
  CHECK_FALSE(r.coloring);
  REQUIRE(r.failed_level);
  CHECK(*r.failed_level == 2);
  CHECK(r.diagnostic == "level 2 (9 elements) has no proper L-coloring");
}

TEST_CASE("extension backtracks across levels") {
  // Level 1 adds element 2 parallel to 0. Elements 1 and 2 can only take
  // a, so 0 must take b; the first level-0 coloring gives 0 the color a
  // and has to be abandoned.
  const Matroid level0 = uniform(2, 2);
  const Matroid level1 = Matroid(
      3,
      [](const ElementSet& a) {
        // Element 2 is parallel to 0; 0 and 1 stay independent.
        std::size_t r = 0;
        bool zero_class = a.contains(0) || a.contains(2);
        r += zero_class ? 1 : 0;
        r += a.contains(1) ? 1 : 0;
        return r;
      },
      "parallel");
  const ChainedMatroid chain("backtrack", std::vector<Matroid>{level0, level1});
  Listing l;
  l[0] = {"a", "b"};
  l[1] = {"a"};
  l[2] = {"a"};
  const ExtensionResult r = extend_coloring(chain, l, 1);
  REQUIRE(r.coloring);
  CHECK(r.coloring->at(0) == "b");
  CHECK(r.nodes_visited > 2);
}

}  // TEST_SUITE
