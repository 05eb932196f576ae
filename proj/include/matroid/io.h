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

// Text formats.
//
// Matroid file (lines starting with '#' and blank lines are ignored):
//
//   matroid uniform        matroid graphic        matroid linear
//   n 4                    edge 0 a b             field 2
//   k 2                    edge 1 b c             dim 2
//                          edge 2 a c             vec 0 1 0
//                                                 vec 1 0 1
//   matroid table
//   n 1
//   rank {} 0
//   rank {0} 1
//
// A table lists every subset exactly once. Several matroid blocks may be
// concatenated; each `matroid` header starts a new one.
//
// Listing file: one line per element, `list <id> : <token> <token> ...`.

#ifndef MATROID_IO_H_
#define MATROID_IO_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matroid/coloring.h"
#include "matroid/errors.h"
#include "matroid/matroid.h"

namespace matroid {

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Exactly one matroid block.
Matroid parse_matroid(const std::string& text);
// One or more matroid blocks, in file order.
std::vector<Matroid> parse_matroids(const std::string& text);

// Writes the construction the matroid came from; matroids without one
// (restrictions, contractions) are written as rank tables.
std::string serialize(const Matroid& m);

// With `n`, every element 0..n-1 must be listed exactly once.
Listing parse_listing(const std::string& text,
                      std::optional<std::size_t> n = std::nullopt);
std::string serialize(const Listing& l);

// Whole-file read; throws InputError if the file cannot be opened.
std::string read_file(const std::string& path);

}  // namespace matroid

#endif  // MATROID_IO_H_
