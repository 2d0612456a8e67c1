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

#ifndef CARLITZ_FORM_HPP_
#define CARLITZ_FORM_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "carlitz/field.hpp"
#include "carlitz/permutation.hpp"

namespace carlitz {

/// A permutation polynomial in Carlitz form.
///
/// Either the linear polynomial c*x + d (c != 0), or a chain
///
///   (...((a0*x + a1)^(q-2) + a2)^(q-2) + ... + an)^(q-2) + a(n+1)
///
/// with a0 != 0 and n >= 1 exponentiations by q-2. Forms are not
/// canonicalized: different coefficient lists may induce the same
/// permutation, and equality compares coefficients only.
class CarlitzForm {
 public:
  static CarlitzForm linear(const Element& c, const Element& d);
  // `tail` is [a1, ..., a(n+1)] and needs at least two entries.
  static CarlitzForm chain(const Element& a0, std::span<const Element> tail);
  static CarlitzForm identity(const FieldPtr& field);

  // Raw-index constructors; `coeffs` is [c, d] or [a0, a1, ..., a(n+1)].
  static CarlitzForm linear(FieldPtr field, Index c, Index d);
  static CarlitzForm chain(FieldPtr field, std::vector<Index> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  bool is_linear() const noexcept { return linear_; }
  // n: the number of x -> x^(q-2) steps; 0 for linear forms.
  std::size_t chain_length() const noexcept { return linear_ ? 0 : coeffs_.size() - 2; }

  // Linear: [c, d]. Chain: [a0, a1, ..., a(n+1)].
  std::span<const Index> coefficients() const noexcept { return coeffs_; }
  Element coefficient(std::size_t i) const { return Element(field_, coeffs_.at(i)); }
  Element leading() const { return coefficient(0); }
  std::vector<Element> tail() const;

  Index eval(Index x) const noexcept;
  Element eval(const Element& x) const;

  friend bool operator==(const CarlitzForm& a, const CarlitzForm& b) {
    return a.linear_ == b.linear_ && a.coeffs_ == b.coeffs_ && a.field_->same_as(*b.field_);
  }

 private:
  CarlitzForm(FieldPtr field, bool linear, std::vector<Index> coeffs);

  FieldPtr field_;
  bool linear_;
  std::vector<Index> coeffs_;
};

// Image table of f; throws kInternal if it is not a bijection.
Permutation to_permutation(const CarlitzForm& f);

/// A form inducing x -> a * f(x) with the same chain length. The factor is
/// pushed inward through a * u^(q-2) = (a^-1 * u)^(q-2), alternating a and
/// a^-1 from the outermost addend. Throws kDomain for a = 0.
CarlitzForm fold_multiplier(const Element& a, const CarlitzForm& f);

/// f o g, built by substituting g into the innermost slot of f. The chain
/// lengths add; linear o linear stays linear.
CarlitzForm compose(const CarlitzForm& f, const CarlitzForm& g);

/// Closed-form inverse. For a chain a0..a(n+1):
///   b0 = a0 (n odd) or a0^-1 (n even),
///   bk = -a0^-1 * a(n+2-k) if n+2-k is odd, -a0 * a(n+2-k) otherwise.
CarlitzForm carlitz_inverse(const CarlitzForm& f);

/// Coefficients s0..s(q-1) of the unique polynomial of degree < q that
/// agrees with f on F_q, by Lagrange interpolation over every point.
std::vector<Element> reduce_to_standard(const CarlitzForm& f);

// Horner evaluation of an ascending coefficient vector.
Element eval_standard(std::span<const Element> coeffs, const Element& x);

}  // namespace carlitz

#endif  // CARLITZ_FORM_HPP_
