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

// Command-line front end. Every command prints `key: value` lines, a blank
// line, then a human-readable certificate. Output depends only on the
// arguments and the files they name.

#ifndef MATROID_CLI_H_
#define MATROID_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace matroid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFails = 1;
inline constexpr int kExitInputError = 2;

// `args` excludes the program name: {"circuits", "-i", "u24.m"}.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace matroid::cli

#endif  // MATROID_CLI_H_
