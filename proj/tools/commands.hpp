// Copyright 2026 The carlitz-pp Authors.
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

#ifndef CARLITZ_TOOLS_COMMANDS_HPP_
#define CARLITZ_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "carlitz/error.hpp"
#include "carlitz/field.hpp"

namespace carlitz::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kBadField = 3,
  kUnsupported = 4,
  kMismatch = 5,
  kDomainError = 6,
  kBadCoefficient = 7,
  kBadPermutation = 8,
  kNotConjugateExit = 9,
  kNotFullCycleExit = 10,
};

int exit_code_for(Errc code) noexcept;

// Runs `carlitz-pp <args...>` (args excludes the program name). Results go
// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::uint64_t max_q = kDefaultMaxQ);

// q cap from CARLITZ_PP_MAX_Q, or the library default.
std::uint64_t max_q_from_env();

}  // namespace carlitz::cli

#endif  // CARLITZ_TOOLS_COMMANDS_HPP_
