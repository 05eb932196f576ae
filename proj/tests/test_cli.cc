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

#include <fstream>
#include <sstream>

#include "matroid/cli.h"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = matroid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return std::string(MATROID_DATA_DIR) + "/" + name;
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(MATROID_TEST_TMP_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("circuits lists four circuits in order") {
  const Result r = run({"circuits", "-i", data("u24.m")});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "circuits: 4"));
  CHECK(r.out.find("\n\n{0,1,2}\n{0,1,3}\n{0,2,3}\n{1,2,3}\n") !=
        std::string::npos);
}

TEST_CASE("chromatic prints the number and a witness") {
  const Result r = run({"chromatic", "-i", data("u24.m")});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "chromatic: 2"));
  CHECK(has_line(r.out, "proper: true"));
  CHECK(has_line(r.out, "3: 1"));
}

TEST_CASE("closed reports false for a spanning pair") {
  const Result r = run({"closed", "-i", data("u24.m"), "--subset", "{0,1}"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "closed: false"));
}

TEST_CASE("key lines precede a blank line and the certificate") {
  const Result r = run({"closure", "-i", data("triangle.m"), "--subset", "{0}"});
  CHECK(r.code == 0);
  const std::size_t blank = r.out.find("\n\n");
  REQUIRE(blank != std::string::npos);
  std::istringstream keys(r.out.substr(0, blank));
  for (std::string l; std::getline(keys, l);) {
    CHECK(l.find(": ") != std::string::npos);
  }
  CHECK(has_line(r.out, "closure: {0}"));
}

TEST_CASE("contract prints the minor as a table") {
  const Result r = run({"contract", "-i", data("u24.m"), "--contract", "{0}"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "minor-n: 3"));
  CHECK(has_line(r.out, "minor-rank: 1"));
  CHECK(has_line(r.out, "minor-loop-free: true"));
  CHECK(has_line(r.out, "rank {0,1} 1"));
}

TEST_CASE("mb echoes the seed and the best base") {
  const Result r = run({"mb", "-i", data("fano_gf2.m")});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "seed: 0"));
  CHECK(has_line(r.out, "best-optimal: true"));
  const Result seeded =
      run({"mb", "-i", data("fano_gf2.m"), "--seed", "4", "--max-n", "0"});
  CHECK(has_line(seeded.out, "seed: 4"));
  CHECK(has_line(seeded.out, "best-optimal: false"));
}

TEST_CASE("base honors the order flag") {
  const Result r = run({"base", "-i", data("u24.m"), "--order", "3,2,1,0"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "base: (3,2)"));
  CHECK(run({"base", "-i", data("u24.m"), "--order", "3,2"}).code == 2);
}

TEST_CASE("list-chromatic and color-from-base") {
  const Result l = run({"list-chromatic", "-i", data("triangle.m")});
  CHECK(l.code == 0);
  CHECK(has_line(l.out, "list-chromatic: 2"));
  const Result c = run({"color-from-base", "-i", data("u24.m"), "--lists",
                        data("u24_lists.txt")});
  CHECK(c.code == 0);
  CHECK(has_line(c.out, "proper: true"));
  const std::string short_lists = temp_file(
      "short.txt", "list 0 : p q\nlist 1 : p q\nlist 2 : p q\nlist 3 : p q\n");
  const Result d =
      run({"color-from-base", "-i", data("u24.m"), "--lists", short_lists});
  CHECK(d.code == 2);
  CHECK(d.err.find("deficit") != std::string::npos);
}

TEST_CASE("check-lemmas passes on the bundled files") {
  for (const char* f : {"u24.m", "triangle.m", "fano_gf2.m"}) {
    const Result r = run({"check-lemmas", "-i", data(f)});
    CAPTURE(r.out);
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "failed: 0"));
  }
}

TEST_CASE("compactness on a family and on a chain file") {
  const Result r = run({"compactness", "--family", "disjoint-triangles",
                        "--depth", "2"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "extended: true"));
  CHECK(r.out.find("note: finite-depth Konig search") != std::string::npos);
  const std::string chain = temp_file(
      "chain.m",
      "matroid uniform\nn 2\nk 1\nmatroid uniform\nn 3\nk 1\n");
  const Result f = run({"compactness", "-i", chain, "--depth", "1"});
  CHECK(f.code == 1);
  CHECK(has_line(f.out, "failed-level: 1"));
  CHECK(run({"compactness", "--family", "nope"}).code == 2);
  CHECK(run({"compactness"}).code == 2);
}

TEST_CASE("validate exits 1 on a table that breaks an axiom") {
  const std::string bad = temp_file(
      "bad.m", "matroid table\nn 2\nrank {} 0\nrank {0} 0\nrank {1} 1\n"
               "rank {0,1} 2\n");
  const Result r = run({"validate", "-i", bad});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "axioms: fail"));
  CHECK(r.out.find("submodularity") != std::string::npos);
  CHECK(run({"circuits", "-i", bad}).code == 2);
}

TEST_CASE("input errors exit 2") {
  CHECK(run({"closed", "-i", data("u24.m"), "--subset", "{1,0}"}).code == 2);
  CHECK(run({"closed", "-i", data("u24.m"), "--subset", "{9}"}).code == 2);
  CHECK(run({"closed", "-i", data("u24.m")}).code == 2);
  CHECK(run({"circuits", "-i", "/nonexistent.m"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("bounds refuse and can be raised") {
  const std::string big = temp_file("u13.m", "matroid uniform\nn 13\nk 1\n");
  const Result refused = run({"circuits", "-i", big});
  CHECK(refused.code == 2);
  CHECK(refused.err.find("--max-n") != std::string::npos);
  CHECK(run({"circuits", "-i", big, "--max-n", "13"}).code == 0);
  const Result lemmas = run({"check-lemmas", "-i", big});
  CHECK(lemmas.code == 0);
  CHECK(has_line(lemmas.out, "skipped: 20"));
}

TEST_CASE("reruns are byte-identical") {
  const std::vector<std::string> args = {"check-lemmas", "-i",
                                         data("fano_gf2.m"), "--seed", "8"};
  const Result a = run(args), b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
}

}  // TEST_SUITE
