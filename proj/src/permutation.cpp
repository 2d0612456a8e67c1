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

#include "carlitz/permutation.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace carlitz {

Permutation Permutation::from_images(FieldPtr field, std::vector<Index> images) {
  if (!field) throw Error(Errc::kDomain, "permutation without a field");
  const std::size_t q = field->order();
  if (images.size() != q)
    throw Error(Errc::kNotPermutation, "image table has " + std::to_string(images.size()) +
                                           " entries, expected q=" + std::to_string(q));
  std::vector<bool> seen(q, false);
  for (Index v : images) {
    if (v >= q || seen[v])
      throw Error(Errc::kNotPermutation, "image table is not a bijection on [0, q)");
    seen[v] = true;
  }
  return Permutation(std::move(field), std::move(images));
}

Permutation Permutation::identity(FieldPtr field) {
  std::vector<Index> images(field->order());
  std::iota(images.begin(), images.end(), Index{0});
  return Permutation(std::move(field), std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

CycleType::CycleType(std::vector<Term> terms) {
  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& t : terms)
    if (t.multiplicity > 0) merged[t.length] += t.multiplicity;
  for (const auto& [length, mult] : merged) terms_.push_back({mult, length});
}

std::uint64_t CycleType::points() const noexcept {
  std::uint64_t total = 0;
  for (const auto& t : terms_) total += t.multiplicity * t.length;
  return total;
}

std::string CycleType::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(terms_[i].multiplicity) + "x" + std::to_string(terms_[i].length);
  }
  return out + "]";
}

std::vector<Cycle> cycle_decomposition(const Permutation& sigma) {
  std::vector<Cycle> cycles;
  std::vector<bool> seen(sigma.size(), false);
  for (Index start = 0; start < sigma.size(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (Index x = start; !seen[x]; x = sigma(x)) {
      seen[x] = true;
      c.push_back(x);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

CycleType cycle_type(const Permutation& sigma) {
  std::vector<CycleType::Term> terms;
  for (const auto& c : cycle_decomposition(sigma)) terms.push_back({1, c.size()});
  return CycleType(std::move(terms));
}

bool is_full_cycle(const Permutation& sigma) {
  // Follow the orbit of 0; full iff it returns only after q steps.
  std::size_t steps = 0;
  Index x = 0;
  do {
    x = sigma(x);
    ++steps;
  } while (x != 0);
  return steps == sigma.size();
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  require_same_field(sigma.field(), tau.field());
  std::vector<Index> out(sigma.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sigma(tau(static_cast<Index>(i)));
  return Permutation::from_images(sigma.field(), std::move(out));
}

Permutation inverse(const Permutation& sigma) {
  std::vector<Index> out(sigma.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[sigma(static_cast<Index>(i))] = static_cast<Index>(i);
  return Permutation::from_images(sigma.field(), std::move(out));
}

Permutation power(const Permutation& sigma, std::uint64_t k) {
  Permutation result = Permutation::identity(sigma.field());
  Permutation base = sigma;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> order(const Permutation& sigma) {
  std::uint64_t acc = 1;
  const CycleType type = cycle_type(sigma);
  for (const auto& t : type.terms()) {
    const std::uint64_t g = std::gcd(acc, t.length);
    const std::uint64_t factor = t.length / g;
    if (acc > std::numeric_limits<std::uint64_t>::max() / factor) return std::nullopt;
    acc *= factor;
  }
  return acc;
}

Permutation conjugate(const Permutation& sigma, const Permutation& pi) {
  require_same_field(sigma.field(), pi.field());
  // pi sigma pi^-1 maps pi(x) to pi(sigma(x)).
  std::vector<Index> out(sigma.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[pi(static_cast<Index>(x))] = pi(sigma(static_cast<Index>(x)));
  return Permutation::from_images(sigma.field(), std::move(out));
}

Permutation conjugator_between(const Permutation& sigma, const Permutation& tau) {
  require_same_field(sigma.field(), tau.field());
  if (cycle_type(sigma) != cycle_type(tau))
    throw Error(Errc::kNotConjugate, "cycle types " + cycle_type(sigma).to_string() +
                                         " and " + cycle_type(tau).to_string() + " differ");
  std::map<std::size_t, std::vector<Cycle>> by_length;
  for (auto& c : cycle_decomposition(tau)) by_length[c.size()].push_back(std::move(c));
  std::map<std::size_t, std::size_t> next;
  std::vector<Index> pi(sigma.size());
  for (const auto& c : cycle_decomposition(sigma)) {
    const Cycle& target = by_length[c.size()][next[c.size()]++];
    for (std::size_t i = 0; i < c.size(); ++i) pi[c[i]] = target[i];
  }
  return Permutation::from_images(sigma.field(), std::move(pi));
}

}  // namespace carlitz
