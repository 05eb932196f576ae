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

#include "matroid/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "matroid/bases.h"
#include "matroid/closure.h"
#include "matroid/coloring.h"
#include "matroid/compactness.h"
#include "matroid/constructions.h"
#include "matroid/contraction.h"
#include "matroid/errors.h"
#include "matroid/io.h"
#include "matroid/lemmas.h"
#include "matroid/matroid.h"

namespace matroid::cli {

namespace {

struct Flags {
  std::string command;
  std::string input;
  std::string subset;
  std::string contract;
  std::string lists;
  std::string order;
  std::optional<std::size_t> kmax;
  std::size_t depth = 3;
  std::string family;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_n;
};

const std::vector<std::string> kCommands = {
    "validate",  "circuits",       "closure",        "closed",
    "contract",  "base",           "mb",             "chromatic",
    "list-chromatic", "color-from-base", "check-lemmas", "compactness"};

// Collects the key: value section and the certificate separately so the
// blank separator is always printed exactly once.
class Report {
 public:
  void key(const std::string& k, const std::string& v) {
    keys_ << k << ": " << v << '\n';
  }
  void line(const std::string& text) { cert_ << text << '\n'; }
  void print(std::ostream& out) const {
    out << keys_.str() << '\n' << cert_.str();
  }

 private:
  std::ostringstream keys_;
  std::ostringstream cert_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::size_t bound(const Flags& f, std::size_t fallback) {
  return f.max_n.value_or(fallback);
}

Matroid load(const Flags& f) {
  if (f.input.empty()) throw InputError("missing -i FILE");
  return parse_matroid(read_file(f.input));
}

ElementSet subset_flag(const std::string& text, const char* flag,
                       const Matroid& m) {
  if (text.empty()) throw InputError(std::string("missing ") + flag);
  ElementSet s = parse_subset(text);
  if (!s.empty() && s.back() >= m.size()) {
    throw InputError(std::string(flag) + ": element " +
                     std::to_string(s.back()) + " is outside the ground set");
  }
  return s;
}

std::vector<Element> order_flag(const Flags& f, std::size_t n) {
  std::vector<Element> order;
  if (f.order.empty()) {
    for (Element e = 0; e < n; ++e) order.push_back(e);
    return order;
  }
  std::stringstream ss(f.order);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
    Element value = 0;
    auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() ||
        ptr != item.data() + item.size()) {
      throw InputError("--order: \"" + item + "\" is not an element id");
    }
    order.push_back(value);
  }
  return order;
}

void header(Report& r, const std::string& command, const Matroid& m) {
  r.key("command", command);
  r.key("matroid", m.description());
  r.key("n", std::to_string(m.size()));
  r.key("rank", std::to_string(m.rank()));
}

void print_coloring(Report& r, const Coloring& phi) {
  for (const auto& [e, c] : phi) r.line(std::to_string(e) + ": " + c);
}

int cmd_validate(const Flags& f, Report& r) {
  Matroid m = [&] {
    try {
      return load(f);
    } catch (const AxiomError& e) {
      r.key("command", "validate");
      r.key("axioms", "fail");
      r.line(e.what());
      throw;
    }
  }();
  header(r, "validate", m);
  const AxiomReport rep = validate_axioms(m, bound(f, kValidateMaxN));
  r.key("axioms", rep.ok ? "ok" : "fail");
  if (rep.ok) {
    r.line("normalization, monotonicity, subcardinality and submodularity "
           "hold on all " + std::to_string(std::uint64_t{1} << m.size()) +
           " subsets");
    return kExitOk;
  }
  r.key("violated", rep.axiom);
  std::string witness;
  for (const ElementSet& s : rep.witness) {
    witness += (witness.empty() ? "" : ",") + s.to_string();
  }
  r.key("witness", "(" + witness + ")");
  r.line(rep.detail);
  return kExitPropertyFails;
}

int cmd_circuits(const Flags& f, Report& r) {
  const Matroid m = load(f);
  header(r, "circuits", m);
  const std::vector<Circuit> all = circuits(m, bound(f, kEnumerateMaxN));
  r.key("circuits", std::to_string(all.size()));
  for (const Circuit& c : all) r.line(c.to_string());
  return kExitOk;
}

int cmd_closure(const Flags& f, Report& r) {
  const Matroid m = load(f);
  const ElementSet x = subset_flag(f.subset, "--subset", m);
  header(r, "closure", m);
  const ElementSet cx = closure(m, x);
  r.key("subset", x.to_string());
  r.key("closure", cx.to_string());
  const std::size_t rx = m.rank(x);
  for (Element y : cx - x) {
    r.line("r(" + x.to_string() + "+" + std::to_string(y) +
           ")=" + std::to_string(rx));
  }
  for (Element y : m.ground_set() - cx) {
    r.line("r(" + x.to_string() + "+" + std::to_string(y) +
           ")=" + std::to_string(m.rank(x.with(y))) + " > " +
           std::to_string(rx));
  }
  return kExitOk;
}

int cmd_closed(const Flags& f, Report& r) {
  const Matroid m = load(f);
  const ElementSet z = subset_flag(f.subset, "--subset", m);
  header(r, "closed", m);
  r.key("subset", z.to_string());
  const bool closed = is_closed(m, z);
  r.key("closed", yes_no(closed));
  const std::size_t rz = m.rank(z);
  for (Element y : m.ground_set() - z) {
    const std::size_t ry = m.rank(z.with(y));
    r.line("r(" + z.to_string() + "+" + std::to_string(y) +
           ")=" + std::to_string(ry) + (ry == rz ? " = " : " > ") +
           std::to_string(rz));
  }
  return kExitOk;
}

int cmd_contract(const Flags& f, Report& r) {
  const Matroid m = load(f);
  const ElementSet z = subset_flag(f.contract, "--contract", m);
  require_within_bound("contract", m.size(), bound(f, kValidateMaxN));
  header(r, "contract", m);
  const Minor minor = contract(m, z);
  r.key("contracted", z.to_string());
  r.key("minor-n", std::to_string(minor.matroid.size()));
  r.key("minor-rank", std::to_string(minor.matroid.rank()));
  r.key("minor-loop-free", yes_no(is_loop_free(minor.matroid)));
  r.key("contracted-closed", yes_no(is_closed(m, z)));
  for (std::size_t i = 0; i < minor.parent_ids.size(); ++i) {
    r.line("# element " + std::to_string(i) + " is parent element " +
           std::to_string(minor.parent_ids[i]));
  }
  std::istringstream table(serialize(minor.matroid));
  for (std::string line; std::getline(table, line);) r.line(line);
  return kExitOk;
}

int cmd_base(const Flags& f, Report& r) {
  const Matroid m = load(f);
  const WellOrderedBase b = greedy_base(m, order_flag(f, m.size()));
  header(r, "base", m);
  r.key("base", b.to_string());
  r.key("is-base", yes_no(is_base(m, b.set())));
  r.line("independent: r(" + b.set().to_string() +
         ")=" + std::to_string(m.rank(b.set())));
  r.line("spanning: closure(" + b.set().to_string() +
         ")=" + closure(m, b.set()).to_string());
  return kExitOk;
}

int cmd_mb(const Flags& f, Report& r) {
  const Matroid m = load(f);
  const WellOrderedBase b = greedy_base(m, order_flag(f, m.size()));
  const MbDecomposition d = mb_classes(m, b);
  BaseSearchOptions options;
  options.seed = f.seed;
  if (f.max_n) options.exhaustive_max_n = *f.max_n;
  const BaseBound best = best_base_bound(m, options);
  header(r, "mb", m);
  r.key("seed", std::to_string(f.seed));
  r.key("base", b.to_string());
  r.key("max-class", std::to_string(d.max_class_size));
  r.key("best-base", best.base.to_string());
  r.key("best-max-class", std::to_string(best.max_class_size));
  r.key("best-optimal", yes_no(best.optimal));
  r.key("best-candidates", std::to_string(best.candidates));
  for (Element x = 0; x < m.size(); ++x) {
    r.line("mb(" + std::to_string(x) + ")=" + std::to_string(d.image[x]));
  }
  for (const auto& [key, members] : d.classes) {
    r.line("class " + std::to_string(key) + ": " + members.to_string());
  }
  return kExitOk;
}

int cmd_chromatic(const Flags& f, Report& r) {
  const Matroid m = load(f);
  const ChromaticResult chr = chromatic_number(m, bound(f, kValidateMaxN));
  header(r, "chromatic", m);
  r.key("chromatic", std::to_string(chr.k));
  r.key("proper", yes_no(is_proper(m, chr.witness)));
  print_coloring(r, chr.witness);
  return kExitOk;
}

int cmd_list_chromatic(const Flags& f, Report& r) {
  const Matroid m = load(f);
  ListChromaticLimits limits;
  if (f.max_n) limits.max_n = *f.max_n;
  const std::size_t kmax =
      f.kmax.value_or(std::min(m.size(), limits.max_k));
  if (f.kmax) limits.max_k = std::max(limits.max_k, *f.kmax);
  const std::size_t chr = chromatic_number(m, limits.max_n).k;
  const ListChromaticResult list = list_chromatic_number(m, kmax, limits);
  header(r, "list-chromatic", m);
  r.key("kmax", std::to_string(kmax));
  r.key("chromatic", std::to_string(chr));
  r.key("list-chromatic",
        list.k ? std::to_string(*list.k) : ">=" + std::to_string(kmax + 1));
  r.key("listings-checked", std::to_string(list.listings_checked));
  for (std::size_t i = 0; i < list.failures.size(); ++i) {
    r.line("uncolorable " + std::to_string(i + 1) +
           "-listing: " + to_string(list.failures[i]));
  }
  return kExitOk;
}

int cmd_color_from_base(const Flags& f, Report& r) {
  const Matroid m = load(f);
  if (f.lists.empty()) throw InputError("missing --lists FILE");
  const Listing l = parse_listing(read_file(f.lists), m.size());
  const WellOrderedBase b = greedy_base(m, order_flag(f, m.size()));
  const Coloring phi = color_from_base(m, b, l);
  header(r, "color-from-base", m);
  r.key("base", b.to_string());
  r.key("max-class", std::to_string(mb_classes(m, b).max_class_size));
  r.key("proper", yes_no(is_proper(m, phi)));
  print_coloring(r, phi);
  return kExitOk;
}

int cmd_check_lemmas(const Flags& f, Report& r) {
  const Matroid m = load(f);
  LemmaOptions options;
  options.seed = f.seed;
  if (f.max_n) {
    options.max_n = *f.max_n;
    options.ordered_base_max_n = *f.max_n;
  }
  const std::vector<LemmaResult> results = check_lemmas(m, options);
  header(r, "check-lemmas", m);
  r.key("seed", std::to_string(f.seed));
  std::size_t failed = 0, skipped = 0;
  for (const LemmaResult& res : results) {
    failed += res.status == LemmaStatus::kFail;
    skipped += res.status == LemmaStatus::kSkipped;
  }
  r.key("checked", std::to_string(results.size()));
  r.key("failed", std::to_string(failed));
  r.key("skipped", std::to_string(skipped));
  for (const LemmaResult& res : results) r.line(to_string(res));
  return failed == 0 ? kExitOk : kExitPropertyFails;
}

int cmd_compactness(const Flags& f, Report& r) {
  if (f.family.empty() == f.input.empty()) {
    throw InputError("compactness needs exactly one of --family NAME or "
                     "-i CHAIN_FILE");
  }
  const ChainedMatroid chain =
      f.family.empty()
          ? ChainedMatroid(f.input, parse_matroids(read_file(f.input)))
          : chain_family(f.family);
  const std::size_t n = chain.level(f.depth).size();
  Listing l;
  if (f.lists.empty()) {
    for (Element e = 0; e < n; ++e) l[e] = {"a", "b"};
  } else {
    l = parse_listing(read_file(f.lists));
  }
  const ExtensionResult ext =
      extend_coloring(chain, l, f.depth, bound(f, kValidateMaxN));
  r.key("command", "compactness");
  r.key("note", kCompactnessSearchNote);
  r.key("chain", chain.name());
  r.key("depth", std::to_string(f.depth));
  r.key("n", std::to_string(n));
  r.key("lists", f.lists.empty() ? "{a,b} on every element" : f.lists);
  r.key("extended", yes_no(ext.coloring.has_value()));
  if (ext.failed_level) r.key("failed-level", std::to_string(*ext.failed_level));
  r.key("nodes-visited", std::to_string(ext.nodes_visited));
  if (!ext.coloring) {
    r.line(ext.diagnostic);
    return kExitPropertyFails;
  }
  for (std::size_t i = 0; i <= f.depth; ++i) {
    const Matroid& level = chain.level(i);
    Coloring restricted;
    for (Element e = 0; e < level.size(); ++e) {
      restricted[e] = ext.coloring->at(e);
    }
    r.line("level " + std::to_string(i) + " (" + level.description() +
           "): proper " + yes_no(is_proper(level, restricted)));
  }
  print_coloring(r, *ext.coloring);
  return kExitOk;
}

int dispatch(const Flags& f, Report& r) {
  static const std::map<std::string, int (*)(const Flags&, Report&)> table = {
      {"validate", cmd_validate},
      {"circuits", cmd_circuits},
      {"closure", cmd_closure},
      {"closed", cmd_closed},
      {"contract", cmd_contract},
      {"base", cmd_base},
      {"mb", cmd_mb},
      {"chromatic", cmd_chromatic},
      {"list-chromatic", cmd_list_chromatic},
      {"color-from-base", cmd_color_from_base},
      {"check-lemmas", cmd_check_lemmas},
      {"compactness", cmd_compactness},
  };
  return table.at(f.command)(f, r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Finite matroid algorithms with deterministic certificates",
               "matroid"};
  Flags f;
  app.add_option("command", f.command, "Operation to run")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("-i", f.input, "Matroid file (or chain file for compactness)");
  app.add_option("--subset", f.subset, "Subset literal {a,b,...}");
  app.add_option("--contract", f.contract, "Subset literal to contract");
  app.add_option("--lists", f.lists, "Listing file");
  app.add_option("--order", f.order, "Element order \"i,j,k,...\"");
  app.add_option("--kmax", f.kmax, "Largest list size to test");
  app.add_option("--depth", f.depth, "Chain depth for compactness");
  app.add_option("--family", f.family,
                 "disjoint-triangles, growing-cycle or growing-uniform");
  app.add_option("--seed", f.seed, "Seed for randomized modes (default 0)");
  app.add_option("--max-n", f.max_n, "Override the exhaustive size bound");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Report report;
  try {
    const int code = dispatch(f, report);
    report.print(out);
    return code;
  } catch (const AxiomError& e) {
    if (f.command == "validate") {
      report.print(out);
      return kExitPropertyFails;
    }
    err << "error: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ChainError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

}  // namespace matroid::cli
