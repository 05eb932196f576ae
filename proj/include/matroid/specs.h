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

// Plain descriptions of the concrete matroid families. A Matroid built from
// one of these keeps a copy so it can be written back out verbatim.

#ifndef MATROID_SPECS_H_
#define MATROID_SPECS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "matroid/element_set.h"

namespace matroid {

struct UniformSpec {
  std::size_t n = 0;
  std::size_t k = 0;
};

// One edge of a multigraph. u == v is a self-loop.
struct GraphEdge {
  Element id = 0;
  std::string u;
  std::string v;
};

struct GraphSpec {
  std::vector<GraphEdge> edges;
};

struct LabeledVector {
  Element id = 0;
  std::vector<std::uint32_t> coords;
};

// Vectors over GF(p).
struct VectorSpec {
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::vector<LabeledVector> vectors;
};

// ranks[mask] is the rank of the subset selected by mask; 2^n entries.
struct TableSpec {
  std::size_t n = 0;
  std::vector<std::size_t> ranks;
};

using MatroidSource =
    std::variant<std::monostate, UniformSpec, GraphSpec, VectorSpec,
                 TableSpec>;

}  // namespace matroid

#endif  // MATROID_SPECS_H_
