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

#ifndef CARLITZ_PRNG_HPP_
#define CARLITZ_PRNG_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "carlitz/field.hpp"
#include "carlitz/form.hpp"

namespace carlitz {

// s(n+1) = psi(s(n)) from s(0) = seed.
struct SequenceSpec {
  CarlitzForm form;
  Element seed;
  std::size_t count = 0;
};

/// Infinite stream over one permutation polynomial. The state is a single
/// field element, so a generator is cheap to copy and fork.
class Sequence {
 public:
  Sequence(CarlitzForm form, const Element& seed);

  // Current state, then advances.
  Index next() noexcept {
    const Index out = state_;
    state_ = form_.eval(state_);
    return out;
  }
  Index state() const noexcept { return state_; }
  const CarlitzForm& form() const noexcept { return form_; }

 private:
  CarlitzForm form_;
  Index state_;
};

// [s0, ..., s(count-1)]
std::vector<Element> stream(const SequenceSpec& spec);
// Length of the cycle through `seed`, by following it.
std::uint64_t period(const CarlitzForm& form, const Element& seed);
bool is_full_period(const CarlitzForm& form);

}  // namespace carlitz

#endif  // CARLITZ_PRNG_HPP_
