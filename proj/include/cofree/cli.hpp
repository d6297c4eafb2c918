// Copyright 2026 The Cofree Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Subcommands: eval, normal-check,
// couniversal-verify, bl-family.
//
// Exit codes: 0 pass, 1 property failure, 2 input error, 3 truncation or
// bound error.

#ifndef COFREE_CLI_HPP
#define COFREE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cofree::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBound = 3;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cofree::cli

#endif  // COFREE_CLI_HPP
