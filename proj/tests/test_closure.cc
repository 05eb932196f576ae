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

#include "matroid/closure.h"
#include "matroid/constructions.h"
#include "matroid/errors.h"
#include "oracles.h"
#include "suite.h"

using namespace matroid;

TEST_SUITE("closure") {

TEST_CASE("a rank-2 pair spans uniform(4,2)") {
  const Matroid m = uniform(4, 2);
  CHECK_FALSE(is_closed(m, ElementSet{0, 1}));
  CHECK(closure(m, ElementSet{0, 1}) == ElementSet{0, 1, 2, 3});
  CHECK(is_closed(m, ElementSet{0}));
  CHECK(closure(m, ElementSet{2}) == ElementSet{2});
  CHECK(is_closed(m, ElementSet{}));
}

TEST_CASE("loops lie in the closure of the empty set") {
  const Matroid m =
      graphic(GraphSpec{{{0, "a", "a"}, {1, "a", "b"}, {2, "b", "b"}}});
  CHECK(closure(m, ElementSet{}) == ElementSet{0, 2});
  CHECK_FALSE(is_closed(m, ElementSet{}));
}

TEST_CASE("closure agrees with the smallest closed superset on the suite") {
  for (const suite::Entry& e : suite::all()) {
    if (e.matroid.size() > 6) continue;
    CAPTURE(e.name);
    for (oracle::Mask x = 0; x < e.table.size(); ++x) {
      const ElementSet xs = ElementSet::from_mask(x);
      const oracle::Mask expected = oracle::closure(e.table, x);
      REQUIRE(closure(e.matroid, xs).mask() == expected);
      REQUIRE(closure_by_intersection(e.matroid, xs).mask() == expected);
      REQUIRE(is_closed(e.matroid, xs) == oracle::closed(e.table, x));
    }
  }
}

TEST_CASE("closure is extensive, monotone and idempotent") {
  for (const suite::Entry& e : suite::all()) {
    if (e.matroid.size() > 5) continue;
    for (oracle::Mask x = 0; x < e.table.size(); ++x) {
      const ElementSet cx = closure(e.matroid, ElementSet::from_mask(x));
      REQUIRE(ElementSet::from_mask(x).is_subset_of(cx));
      REQUIRE(closure(e.matroid, cx) == cx);
      oracle::submasks(x, [&](oracle::Mask y) {
        REQUIRE(closure(e.matroid, ElementSet::from_mask(y)).is_subset_of(cx));
      });
    }
  }
}

TEST_CASE("the intersection route refuses above its bound") {
  CHECK_THROWS_AS(closure_by_intersection(uniform(13, 2), ElementSet{}),
                  BoundExceeded);
  CHECK(closure(uniform(13, 2), ElementSet{0, 1}).size() == 13);
}

}  // TEST_SUITE
