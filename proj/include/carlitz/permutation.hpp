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

#ifndef CARLITZ_PERMUTATION_HPP_
#define CARLITZ_PERMUTATION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlitz/field.hpp"

namespace carlitz {

/// A bijection of F_q stored as a dense image table over element indices.
class Permutation {
 public:
  /// Throws Error(kNotPermutation) unless `images` is a bijection on [0, q).
  static Permutation from_images(FieldPtr field, std::vector<Index> images);
  static Permutation identity(FieldPtr field);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Index>& images() const noexcept { return images_; }
  std::size_t size() const noexcept { return images_.size(); }
  Index operator()(Index x) const { return images_[x]; }
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_ && a.field_->same_as(*b.field_);
  }

 private:
  Permutation(FieldPtr field, std::vector<Index> images)
      : field_(std::move(field)), images_(std::move(images)) {}

  FieldPtr field_;
  std::vector<Index> images_;
};

using Cycle = std::vector<Index>;

/// The multiset [n_1 x l_1, ..., n_s x l_s] of cycle lengths l_i with
/// multiplicities n_i, kept sorted by strictly increasing length.
class CycleType {
 public:
  struct Term {
    std::uint64_t multiplicity;
    std::uint64_t length;
    friend bool operator==(const Term&, const Term&) = default;
  };

  CycleType() = default;
  // Terms in any order; equal lengths are merged, zero multiplicities dropped.
  explicit CycleType(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  // sum n_i * l_i
  std::uint64_t points() const noexcept;
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<Term> terms_;
};

// Disjoint cycles covering every point, each starting at its smallest
// element, ordered by that element. Fixed points appear as 1-cycles.
std::vector<Cycle> cycle_decomposition(const Permutation& sigma);
CycleType cycle_type(const Permutation& sigma);
bool is_full_cycle(const Permutation& sigma);

// (sigma o tau)(x) = sigma(tau(x)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);
Permutation power(const Permutation& sigma, std::uint64_t k);
// lcm of the cycle lengths; empty if it does not fit in 64 bits.
std::optional<std::uint64_t> order(const Permutation& sigma);

// pi o sigma o pi^-1
Permutation conjugate(const Permutation& sigma, const Permutation& pi);

/// Some pi with pi o sigma o pi^-1 == tau. Cycles of equal length are paired
/// in canonical order and mapped entrywise, so the result is deterministic.
/// Throws Error(kNotConjugate) when the cycle types differ.
Permutation conjugator_between(const Permutation& sigma, const Permutation& tau);

}  // namespace carlitz

#endif  // CARLITZ_PERMUTATION_HPP_
