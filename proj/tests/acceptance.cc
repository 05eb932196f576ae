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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Time limits are wall-clock seconds.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matroid/bases.h"
#include "matroid/cli.h"
#include "matroid/closure.h"
#include "matroid/coloring.h"
#include "matroid/compactness.h"
#include "matroid/constructions.h"
#include "matroid/contraction.h"
#include "matroid/errors.h"
#include "matroid/io.h"
#include "matroid/lemmas.h"
#include "oracles.h"
#include "suite.h"

namespace {

using namespace matroid;

constexpr double kAxiomLimitSeconds = 10.0;
constexpr double kLemmaLimitSeconds = 60.0;
constexpr double kListLimitSeconds = 300.0;
constexpr double kColorFromBaseLimitSeconds = 30.0;
constexpr double kCompactnessLimitSeconds = 5.0;
constexpr int kListingsPerOrderedBase = 100;
constexpr std::uint64_t kListingSeed = 7;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::vector<WellOrderedBase> ordered_bases(const Matroid& m) {
  std::vector<WellOrderedBase> out;
  for (const ElementSet& b : all_bases(m)) {
    std::vector<Element> perm = b.members();
    do {
      out.push_back(WellOrderedBase{perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

Outcome axiom_suite() {
  Outcome o;
  std::size_t count = 0;
  for (const suite::Entry& e : suite::all()) {
    ++count;
    const AxiomReport rep = validate_axioms(e.matroid);
    if (!rep.ok) o.fail(e.name + " violates " + rep.axiom);
    for (oracle::Mask a = 0; a < e.table.size(); ++a) {
      if (e.matroid.rank(ElementSet::from_mask(a)) != e.table[a]) {
        o.fail(e.name + " rank disagrees with oracle at " +
               ElementSet::from_mask(a).to_string());
        break;
      }
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " matroids";
  return o;
}

Outcome lemma_battery() {
  Outcome o;
  std::size_t count = 0;
  for (const suite::Entry& e : suite::all()) {
    if (e.matroid.size() > 7) continue;
    ++count;
    for (const LemmaResult& r : check_lemmas(e.matroid)) {
      if (r.status != LemmaStatus::kPass) o.fail(e.name + " " + to_string(r));
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " matroids x 20 checks";
  return o;
}

Outcome chromatic_equals_list() {
  Outcome o;
  struct Anchor {
    std::string name;
    Matroid m;
    std::size_t expected;
  };
  const std::vector<Anchor> anchors = {
      {"U(2,4)", uniform(4, 2), 2},
      {"U(1,3)", uniform(3, 1), 3},
      {"triangle",
       graphic(GraphSpec{{{0, "a", "b"}, {1, "b", "c"}, {2, "a", "c"}}}), 2},
  };
  for (const Anchor& a : anchors) {
    const std::size_t chr = chromatic_number(a.m).k;
    const auto list = list_chromatic_number(a.m, chr);
    if (chr != a.expected || list.k != a.expected) {
      o.fail(a.name + " Chr=" + std::to_string(chr) + " List=" +
             (list.k ? std::to_string(*list.k) : "?"));
    }
  }
  std::size_t count = 0;
  for (const suite::Entry& e : suite::all()) {
    if (e.matroid.size() > 5 || !is_loop_free(e.matroid)) continue;
    const std::size_t chr = chromatic_number(e.matroid).k;
    if (chr > 3) continue;
    ++count;
    const auto list = list_chromatic_number(e.matroid, chr);
    if (list.k != chr) {
      o.fail(e.name + " Chr=" + std::to_string(chr) + " but List>" +
             std::to_string(chr) + ": " +
             (list.failures.empty() ? "" : to_string(list.failures.back())));
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " matroids + 3 anchors";
  return o;
}

Outcome color_from_base_suite() {
  Outcome o;
  std::mt19937_64 rng(kListingSeed);
  std::size_t calls = 0;
  for (const suite::Entry& e : suite::all()) {
    const Matroid& m = e.matroid;
    if (m.size() > 6 || !is_loop_free(m)) continue;
    for (const WellOrderedBase& b : ordered_bases(m)) {
      const MbDecomposition d = mb_classes(m, b);
      for (int t = 0; t < kListingsPerOrderedBase; ++t) {
        // Lists exactly as long as the class, drawn from a small palette so
        // that lists overlap heavily.
        Listing l;
        for (Element x = 0; x < m.size(); ++x) {
          const std::size_t need = d.classes.at(d.image[x]).size();
          std::vector<int> palette(need + 2);
          std::iota(palette.begin(), palette.end(), 0);
          std::shuffle(palette.begin(), palette.end(), rng);
          for (std::size_t i = 0; i < need; ++i) {
            l[x].push_back("c" + std::to_string(palette[i]));
          }
        }
        ++calls;
        try {
          const Coloring phi = color_from_base(m, b, l);
          if (!is_proper(m, phi)) {
            o.fail(e.name + " B=" + b.to_string() + " improper");
          }
        } catch (const std::exception& ex) {
          o.fail(e.name + " B=" + b.to_string() + " " + ex.what());
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(calls) + " colorings";
  return o;
}

Outcome mb_repeats() {
  Outcome o;
  const Matroid u24 = uniform(4, 2);
  const WellOrderedBase b01{{0, 1}};
  if (mb(u24, b01, 2) != 1 || mb(u24, b01, 3) != 1) {
    o.fail("U(2,4) anchor: mb(2)=" + std::to_string(mb(u24, b01, 2)) +
           " mb(3)=" + std::to_string(mb(u24, b01, 3)));
  }
  std::size_t checked = 0;
  for (const suite::Entry& e : suite::all()) {
    const Matroid& m = e.matroid;
    if (m.size() > 6 || oracle::has_loop(e.table)) continue;
    const std::vector<oracle::Mask> circs = oracle::circuits(e.table);
    for (const WellOrderedBase& b : ordered_bases(m)) {
      std::vector<Element> image(m.size());
      for (Element x = 0; x < m.size(); ++x) image[x] = mb(m, b, x);
      for (oracle::Mask c : circs) {
        ++checked;
        bool repeated = false;
        for (Element x = 0; x < m.size(); ++x) {
          for (Element y = x + 1; y < m.size(); ++y) {
            if ((c >> x & 1) && (c >> y & 1) && image[x] == image[y]) {
              repeated = true;
            }
          }
        }
        if (!repeated) {
          o.fail(e.name + " B=" + b.to_string() + " circuit " +
                 ElementSet::from_mask(c).to_string());
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " (ordered base, circuit) pairs";
  return o;
}

Outcome contraction_identities() {
  Outcome o;
  const Matroid u24 = uniform(4, 2);
  const Minor minor = contract(u24, {0});
  const oracle::Table u13 = oracle::uniform_table(3, 1);
  if (minor.matroid.size() != 3 ||
      minor.parent_ids != std::vector<Element>{1, 2, 3}) {
    o.fail("contract(U(2,4),{0}) has the wrong ground set");
  } else {
    for (oracle::Mask a = 0; a < 8; ++a) {
      if (minor.matroid.rank(ElementSet::from_mask(a)) != u13[a]) {
        o.fail("table differs from U(1,3) at " +
               ElementSet::from_mask(a).to_string());
      }
    }
  }
  for (oracle::Mask z = 0; z < 16; ++z) {
    const ElementSet zs = ElementSet::from_mask(z);
    const bool loop_free = is_loop_free(contract(u24, zs).matroid);
    if (loop_free != is_closed(u24, zs)) o.fail("Z=" + zs.to_string());
  }
  if (o.ok) o.detail = "table agrees on 8 subsets; 16 contraction sets";
  return o;
}

Outcome compactness_harness() {
  Outcome o;
  const ChainedMatroid chain = disjoint_triangles_chain();
  const std::size_t depth = 4;
  Listing two;
  for (Element e = 0; e < chain.level(depth).size(); ++e) two[e] = {"a", "b"};
  const ExtensionResult ok = extend_coloring(chain, two, depth);
  if (!ok.coloring) {
    o.fail("2-lists not extended: " + ok.diagnostic);
    return o;
  }
  for (std::size_t i = 0; i <= depth; ++i) {
    const Matroid& level = chain.level(i);
    Coloring restricted;
    for (Element e = 0; e < level.size(); ++e) {
      restricted[e] = ok.coloring->at(e);
    }
    if (!is_proper(level, restricted)) {
      o.fail("level " + std::to_string(i) + " restriction improper");
    }
  }
  // Level 2 adds the triangle {6,7,8}; a single shared color on it cannot
  // be proper, while levels 0 and 1 stay colorable.
  Listing bad = two;
  for (Element e : {6u, 7u, 8u}) bad[e] = {"a"};
  const ExtensionResult fail = extend_coloring(chain, bad, depth);
  if (fail.coloring || fail.failed_level != 2 ||
      fail.diagnostic.find("level 2") == std::string::npos) {
    o.fail("injected level-2 listing: " + fail.diagnostic);
  }
  if (o.ok) {
    o.detail = "depth 4 extended in " + std::to_string(ok.nodes_visited) +
               " nodes; " + fail.diagnostic;
  }
  return o;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str() + "\n--stderr--\n" + err.str();
}

Outcome cli_determinism() {
  Outcome o;
  const std::string data = MATROID_DATA_DIR;
  const std::vector<std::string> files = {data + "/u24.m",
                                          data + "/triangle.m",
                                          data + "/fano_gf2.m"};
  const std::vector<std::vector<std::string>> commands = {
      {"validate", "-i", files[0]},
      {"circuits", "-i", files[0]},
      {"chromatic", "-i", files[0]},
      {"closed", "-i", files[0], "--subset", "{0,1}"},
      {"closure", "-i", files[2], "--subset", "{0,1}"},
      {"contract", "-i", files[2], "--contract", "{0}"},
      {"mb", "-i", files[2], "--seed", "3"},
      {"mb", "-i", files[2], "--seed", "3", "--max-n", "0"},
      {"list-chromatic", "-i", files[1]},
      {"color-from-base", "-i", files[0], "--lists", data + "/u24_lists.txt"},
      {"check-lemmas", "-i", files[1], "--seed", "5"},
      {"compactness", "--family", "disjoint-triangles", "--depth", "3"},
  };
  for (const auto& args : commands) {
    int c1 = 0, c2 = 0;
    const std::string a = run_cli(args, c1);
    const std::string b = run_cli(args, c2);
    if (a != b || c1 != c2) o.fail("nondeterministic: " + args[0]);
    if (c1 != 0) o.fail(args[0] + " exited " + std::to_string(c1) + ": " + a);
  }
  for (const std::string& f : files) {
    const Matroid first = parse_matroid(read_file(f));
    const Matroid second = parse_matroid(serialize(first));
    const Matroid third = parse_matroid(serialize(second));
    for (oracle::Mask a = 0; a < (oracle::Mask{1} << first.size()); ++a) {
      const ElementSet s = ElementSet::from_mask(a);
      if (first.rank(s) != second.rank(s) || first.rank(s) != third.rank(s)) {
        o.fail(f + " round trip differs at " + s.to_string());
        break;
      }
    }
    if (serialize(first) != serialize(second)) {
      o.fail(f + " serialization is not a fixed point");
    }
  }
  if (o.ok) {
    o.detail = std::to_string(commands.size()) +
               " commands rerun; 3 files round-tripped";
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;  // seconds; 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "axiom suite", kAxiomLimitSeconds, axiom_suite},
      {2, "lemma battery (n <= 7)", kLemmaLimitSeconds, lemma_battery},
      {3, "chromatic equals list chromatic (n <= 5, Chr <= 3)",
       kListLimitSeconds, chromatic_equals_list},
      {4, "color_from_base over ordered bases (n <= 6)",
       kColorFromBaseLimitSeconds, color_from_base_suite},
      {5, "repeated mb value on every circuit (n <= 6)", 0, mb_repeats},
      {6, "contraction identities", 0, contraction_identities},
      {7, "compactness harness", kCompactnessLimitSeconds,
       compactness_harness},
      {8, "CLI determinism and round trip", 0, cli_determinism},
  };
  // Warm the suite outside any timed criterion.
  suite::all();
  bool all_ok = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (c.limit > 0 && seconds > c.limit) {
      o.fail("took " + std::to_string(seconds) + " s");
    }
    all_ok = all_ok && o.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << "  "
         << c.name << "  [" << seconds << " s";
    if (c.limit > 0) line << " / limit " << c.limit << " s";
    line << "]  " << o.detail;
    std::cout << line.str() << std::endl;
  }
  return all_ok ? 0 : 1;
}
