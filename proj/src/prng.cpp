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

#include "carlitz/prng.hpp"

#include <utility>

namespace carlitz {

Sequence::Sequence(CarlitzForm form, const Element& seed)
    : form_(std::move(form)), state_(seed.index()) {
  require_same_field(form_.field(), seed.field());
}

std::vector<Element> stream(const SequenceSpec& spec) {
  Sequence seq(spec.form, spec.seed);
  std::vector<Element> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) out.emplace_back(spec.form.field(), seq.next());
  return out;
}

std::uint64_t period(const CarlitzForm& form, const Element& seed) {
  require_same_field(form.field(), seed.field());
  const std::uint64_t q = form.field()->order();
  std::uint64_t steps = 0;
  Index x = seed.index();
  do {
    x = form.eval(x);
    if (++steps > q) throw Error(Errc::kInternal, "orbit longer than q; form is not a bijection");
  } while (x != seed.index());
  return steps;
}

bool is_full_period(const CarlitzForm& form) {
  return period(form, form.field()->zero()) == form.field()->order();
}

}  // namespace carlitz
