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

#include "matroid/io.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "matroid/constructions.h"

namespace matroid {

ParseError::ParseError(std::size_t line, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
  std::string text;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t start = raw.find_first_not_of(" \t");
    if (start == std::string::npos || raw[start] == '#') continue;
    Line line{number, {}, raw.substr(start)};
    std::istringstream words(raw);
    std::string w;
    while (words >> w) line.tokens.push_back(w);
    out.push_back(std::move(line));
  }
  return out;
}

std::uint64_t to_uint(const Line& line, const std::string& token,
                      const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size()) {
    throw ParseError(line.number, std::string("expected ") + what +
                                      ", got \"" + token + "\"");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t count, const char* usage) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, std::string("expected \"") + usage + "\"");
  }
}

std::size_t single_value(const Line& line, std::optional<std::size_t>& slot,
                         const char* key) {
  expect_arity(line, 2, (std::string(key) + " <int>").c_str());
  if (slot) throw ParseError(line.number, std::string("repeated ") + key);
  slot = to_uint(line, line.tokens[1], "an integer");
  return *slot;
}

// Construction errors are reported against the block's header line.
template <class F>
Matroid construct(const Line& header, F&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const AxiomError& e) {
    throw AxiomError("line " + std::to_string(header.number) + ": " +
                     e.what());
  } catch (const InputError& e) {
    throw ParseError(header.number, e.what());
  }
}

Matroid parse_block(const Line& header, const std::vector<Line>& body) {
  if (header.tokens.size() != 2) {
    throw ParseError(header.number, "expected \"matroid <kind>\"");
  }
  const std::string& kind = header.tokens[1];
  const std::size_t end_line = body.empty() ? header.number
                                            : body.back().number;
  if (kind == "uniform") {
    std::optional<std::size_t> n, k;
    for (const Line& line : body) {
      if (line.tokens[0] == "n") {
        single_value(line, n, "n");
      } else if (line.tokens[0] == "k") {
        single_value(line, k, "k");
      } else {
        throw ParseError(line.number, "unexpected \"" + line.tokens[0] +
                                          "\" in uniform matroid");
      }
    }
    if (!n || !k) throw ParseError(end_line, "uniform matroid needs n and k");
    return construct(header, [&] { return uniform(*n, *k); });
  }
  if (kind == "graphic") {
    GraphSpec g;
    for (const Line& line : body) {
      if (line.tokens[0] != "edge") {
        throw ParseError(line.number, "unexpected \"" + line.tokens[0] +
                                          "\" in graphic matroid");
      }
      expect_arity(line, 4, "edge <id> <u> <v>");
      g.edges.push_back(
          {static_cast<Element>(to_uint(line, line.tokens[1], "an edge id")),
           line.tokens[2], line.tokens[3]});
    }
    return construct(header, [&] { return graphic(g); });
  }
  if (kind == "linear") {
    VectorSpec v;
    std::optional<std::size_t> p, dim;
    for (const Line& line : body) {
      const std::string& key = line.tokens[0];
      if (key == "field") {
        single_value(line, p, "field");
      } else if (key == "dim") {
        single_value(line, dim, "dim");
      } else if (key == "vec") {
        if (!dim) throw ParseError(line.number, "vec before dim");
        expect_arity(line, 2 + *dim, "vec <id> <c1> ... <cdim>");
        LabeledVector lv;
        lv.id = static_cast<Element>(to_uint(line, line.tokens[1], "an id"));
        for (std::size_t i = 0; i < *dim; ++i) {
          lv.coords.push_back(static_cast<std::uint32_t>(
              to_uint(line, line.tokens[2 + i], "a coordinate")));
        }
        v.vectors.push_back(std::move(lv));
      } else {
        throw ParseError(line.number,
                         "unexpected \"" + key + "\" in linear matroid");
      }
    }
    if (!p || !dim) {
      throw ParseError(end_line, "linear matroid needs field and dim");
    }
    v.p = static_cast<std::uint32_t>(*p);
    v.dim = *dim;
    return construct(header, [&] { return linear(v); });
  }
  if (kind == "table") {
    std::optional<std::size_t> n;
    TableSpec t;
    std::vector<bool> seen;
    for (const Line& line : body) {
      const std::string& key = line.tokens[0];
      if (key == "n") {
        single_value(line, n, "n");
        require_within_bound("table", *n, kValidateMaxN);
        t.n = *n;
        t.ranks.assign(std::size_t{1} << *n, 0);
        seen.assign(t.ranks.size(), false);
      } else if (key == "rank") {
        if (!n) throw ParseError(line.number, "rank before n");
        expect_arity(line, 3, "rank {i,j,...} <int>");
        ElementSet s;
        try {
          s = parse_subset(line.tokens[1]);
        } catch (const InputError& e) {
          throw ParseError(line.number, e.what());
        }
        if (!s.empty() && s.back() >= *n) {
          throw ParseError(line.number, "subset " + s.to_string() +
                                            " leaves the ground set");
        }
        const std::uint64_t mask = s.mask();
        if (seen[mask]) {
          throw ParseError(line.number, "repeated subset " + s.to_string());
        }
        seen[mask] = true;
        t.ranks[mask] = to_uint(line, line.tokens[2], "a rank");
      } else {
        throw ParseError(line.number,
                         "unexpected \"" + key + "\" in table matroid");
      }
    }
    if (!n) throw ParseError(end_line, "table matroid needs n");
    for (std::uint64_t mask = 0; mask < seen.size(); ++mask) {
      if (!seen[mask]) {
        throw ParseError(end_line, "table is missing subset " +
                                       ElementSet::from_mask(mask).to_string());
      }
    }
    return construct(header, [&] { return from_table(t); });
  }
  throw ParseError(header.number, "unknown matroid kind \"" + kind +
                                      "\" (expected uniform, graphic, "
                                      "linear or table)");
}

}  // namespace

std::vector<Matroid> parse_matroids(const std::string& text) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "no matroid block found");
  std::vector<Matroid> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    if (lines[i].tokens[0] != "matroid") {
      throw ParseError(lines[i].number, "expected \"matroid <kind>\" header");
    }
    const Line& header = lines[i++];
    std::vector<Line> body;
    while (i < lines.size() && lines[i].tokens[0] != "matroid") {
      body.push_back(lines[i++]);
    }
    out.push_back(parse_block(header, body));
  }
  return out;
}

Matroid parse_matroid(const std::string& text) {
  std::vector<Matroid> all = parse_matroids(text);
  if (all.size() != 1) {
    throw InputError("expected one matroid block, found " +
                     std::to_string(all.size()));
  }
  return std::move(all.front());
}

namespace {

struct Writer {
  std::ostringstream out;

  void operator()(const std::monostate&) {}
  void operator()(const UniformSpec& u) {
    out << "matroid uniform\nn " << u.n << "\nk " << u.k << "\n";
  }
  void operator()(const GraphSpec& g) {
    std::vector<const GraphEdge*> edges;
    for (const GraphEdge& e : g.edges) edges.push_back(&e);
    std::sort(edges.begin(), edges.end(),
              [](const GraphEdge* a, const GraphEdge* b) {
                return a->id < b->id;
              });
    out << "matroid graphic\n";
    for (const GraphEdge* e : edges) {
      out << "edge " << e->id << ' ' << e->u << ' ' << e->v << "\n";
    }
  }
  void operator()(const VectorSpec& v) {
    std::vector<const LabeledVector*> vecs;
    for (const LabeledVector& lv : v.vectors) vecs.push_back(&lv);
    std::sort(vecs.begin(), vecs.end(),
              [](const LabeledVector* a, const LabeledVector* b) {
                return a->id < b->id;
              });
    out << "matroid linear\nfield " << v.p << "\ndim " << v.dim << "\n";
    for (const LabeledVector* lv : vecs) {
      out << "vec " << lv->id;
      for (std::uint32_t c : lv->coords) out << ' ' << c;
      out << "\n";
    }
  }
  void operator()(const TableSpec& t) {
    out << "matroid table\nn " << t.n << "\n";
    for (std::uint64_t mask : canonical_masks(t.n)) {
      out << "rank " << ElementSet::from_mask(mask).to_string() << ' '
          << t.ranks[mask] << "\n";
    }
  }
};

}  // namespace

std::string serialize(const Matroid& m) {
  Writer w;
  if (std::holds_alternative<std::monostate>(m.source())) {
    w(tabulate(m));
  } else {
    std::visit(w, m.source());
  }
  return w.out.str();
}

Listing parse_listing(const std::string& text, std::optional<std::size_t> n) {
  Listing l;
  for (const Line& line : tokenize(text)) {
    if (line.tokens[0] != "list" || line.tokens.size() < 3 ||
        line.tokens[2] != ":") {
      throw ParseError(line.number,
                       "expected \"list <id> : <token> <token> ...\"");
    }
    const auto id =
        static_cast<Element>(to_uint(line, line.tokens[1], "an element id"));
    if (n && id >= *n) {
      throw ParseError(line.number, "element " + std::to_string(id) +
                                        " is outside the ground set");
    }
    if (l.contains(id)) {
      throw ParseError(line.number,
                       "element " + std::to_string(id) + " listed twice");
    }
    std::set<Color> colors(line.tokens.begin() + 3, line.tokens.end());
    if (colors.size() != line.tokens.size() - 3) {
      throw ParseError(line.number, "repeated color in list");
    }
    l[id] = std::vector<Color>(colors.begin(), colors.end());
  }
  if (n) {
    for (Element e = 0; e < *n; ++e) {
      if (!l.contains(e)) {
        throw InputError("listing has no entry for element " +
                         std::to_string(e));
      }
    }
  }
  return l;
}

std::string serialize(const Listing& l) {
  std::ostringstream out;
  for (const auto& [e, colors] : l) {
    out << "list " << e << " :";
    for (const Color& c : colors) out << ' ' << c;
    out << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace matroid
