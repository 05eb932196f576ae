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

#ifndef MATROID_ERRORS_H_
#define MATROID_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matroid {

// Malformed input: out-of-range ids, bad literals, syntax errors.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rank table or oracle that is not a matroid rank function.
class AxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive operation was asked to run above its configured size bound.
// Operations refuse rather than sample.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A chain of restrictions whose ranks disagree on a shared subset.
class ChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws BoundExceeded if n > max_n.
void require_within_bound(const char* operation, std::size_t n,
                          std::size_t max_n);

}  // namespace matroid

#endif  // MATROID_ERRORS_H_
