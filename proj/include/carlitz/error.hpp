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

#ifndef CARLITZ_ERROR_HPP_
#define CARLITZ_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace carlitz {

enum class Errc {
  kParse,
  kInvalidField,
  kUnsupportedField,
  kFieldMismatch,
  kDomain,
  kInvalidCoefficient,
  kNotPermutation,
  kNotConjugate,
  kNotFullCycle,
  kInternal,
};

const char* errc_name(Errc code) noexcept;

// All library failures are reported through this exception; `code()`
// distinguishes user errors from internal-consistency failures.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace carlitz

#endif  // CARLITZ_ERROR_HPP_
