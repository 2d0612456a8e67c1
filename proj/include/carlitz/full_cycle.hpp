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

#ifndef CARLITZ_FULL_CYCLE_HPP_
#define CARLITZ_FULL_CYCLE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "carlitz/field.hpp"
#include "carlitz/form.hpp"
#include "carlitz/permutation.hpp"

namespace carlitz {

/// A full-cycle permutation polynomial over an odd prime field F_p:
///
///   (...(((...((x+a1)^(p-2)+a2)^(p-2)+...+an)^(p-2)+a(n+1))^(p-2)
///        -an)^(p-2)-...-a2)^(p-2)-a1
///
/// with a(n+1) != 0. Every full cycle of F_p has such a representation;
/// n = 0 is x + a(n+1).
class FullCycleForm {
 public:
  // Throws kUnsupportedField unless the field is F_p with p odd, and
  // kInvalidCoefficient for a_mid = 0.
  static FullCycleForm make(std::vector<Element> a_up, const Element& a_mid);

  const FieldPtr& field() const noexcept { return a_mid_.field(); }
  const std::vector<Element>& a_up() const noexcept { return a_up_; }
  const Element& a_mid() const noexcept { return a_mid_; }
  std::size_t n() const noexcept { return a_up_.size(); }

  // Chain with a0 = 1 and tail [a1..an, a(n+1), -an..-a1], or x + a(n+1).
  CarlitzForm expand() const;

  friend bool operator==(const FullCycleForm&, const FullCycleForm&) = default;

 private:
  FullCycleForm(std::vector<Element> a_up, Element a_mid)
      : a_up_(std::move(a_up)), a_mid_(std::move(a_mid)) {}

  std::vector<Element> a_up_;
  Element a_mid_;
};

/// Coefficients c != 0 and [a1, ..., a(n+1)] of a form with the cycle type
/// of a linear map c*x + d, over any F_q.
class GeneralForm {
 public:
  // Throws kDomain for c = 0 or an empty list.
  static GeneralForm make(const Element& c, std::vector<Element> a_list);

  const FieldPtr& field() const noexcept { return c_.field(); }
  const Element& c() const noexcept { return c_; }
  const std::vector<Element>& a_list() const noexcept { return a_list_; }
  std::size_t n() const noexcept { return a_list_.size() - 1; }

  /// b0 = c; bi = c*ai (i odd, i <= n) or c^-1*ai (i even, i <= n);
  /// b(n+1) = a(n+1); bi = -a(2n+2-i) for n+2 <= i <= 2n+1.
  CarlitzForm expand() const;

 private:
  GeneralForm(Element c, std::vector<Element> a_list)
      : c_(std::move(c)), a_list_(std::move(a_list)) {}

  Element c_;
  std::vector<Element> a_list_;
};

// Expanded full-cycle form; its induced permutation is checked to be a
// full cycle (kInternal otherwise).
CarlitzForm build_full_cycle_form(std::span<const Element> a_up, const Element& a_mid);

// Recognizes the palindromic-negated shape with a0 = 1 and a nonzero middle.
std::optional<FullCycleForm> match_full_cycle_shape(const CarlitzForm& f);

/// P o (x+d) o P^-1 in full-cycle shape. For P = b0..b(n+1) this is the
/// chain 1; -b(n+1), ..., -b2, b0*d, b2, ..., b(n+1); for P = c x + e it is
/// x + c d. Computed by symbolic composition and cross-checked against the
/// closed form. Requires an odd prime field and d != 0.
FullCycleForm conjugate_by_shift_form(const CarlitzForm& p, const Element& d);
CarlitzForm conjugate_by_shift(const CarlitzForm& p, const Element& d);

struct FullCycleDecomposition {
  FullCycleForm form;
  CarlitzForm witness;  // P with sigma = P o (x + shift) o P^-1
  Element shift;
};

/// Writes a full cycle sigma of F_p, p odd, as a full-cycle form by
/// conjugating x + 1 with a Carlitz encoding of the canonical conjugator.
/// Throws kNotFullCycle or kUnsupportedField.
FullCycleDecomposition decompose_full_cycle(const Permutation& sigma);

// -a^2 (((x-a)^(q-2) + a^-1)^(q-2) - a)^(q-2), the transposition (0 a).
CarlitzForm transposition_form(const Element& a);
// (a b) = (x+a) o (0 b-a) o (x-a).
CarlitzForm general_transposition_form(const Element& a, const Element& b);
// c*x + d when sigma is affine.
std::optional<CarlitzForm> as_affine(const Permutation& sigma);
// A form inducing sigma: linear when sigma is affine, otherwise a product
// of transpositions along its cycles. Not minimal.
CarlitzForm perm_to_carlitz(const Permutation& sigma);

// Cycle type of c*x + d from the order of c.
CycleType linear_cycle_type(const Element& c, const Element& d);
CarlitzForm same_cycle_type_form(const Element& c, std::span<const Element> a_list);

// k-th iterate in closed form: the middle coefficient becomes k*a(n+1).
CarlitzForm iterate_full_cycle(const FullCycleForm& f, std::uint64_t k);

/// k-th iterate of a GeneralForm in closed form: c -> c^k on the outer
/// coefficients and a geometric sum times a(n+1) in the middle. The sum
/// runs over powers of c^-1 for odd n and over powers of c for even n.
CarlitzForm iterate_general(const GeneralForm& g, std::uint64_t k);

}  // namespace carlitz

#endif  // CARLITZ_FULL_CYCLE_HPP_
