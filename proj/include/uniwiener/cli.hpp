// Copyright 2026 The uniwiener Authors
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

#ifndef UNIWIENER_CLI_HPP_
#define UNIWIENER_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "uniwiener/verification.hpp"

namespace uniwiener::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitVerificationFailed = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);

// Runs the counterexample's replay arguments on its edge list and returns the
// last line printed.
std::string replay(const Counterexample& c);

}  // namespace uniwiener::cli

#endif  // UNIWIENER_CLI_HPP_
