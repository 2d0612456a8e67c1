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

#ifndef CARLITZ_FIELD_HPP_
#define CARLITZ_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <vector>

#include "carlitz/error.hpp"

namespace carlitz {

// Index of a field element under e = sum coeffs[i] * p^i.
using Index = std::uint32_t;

inline constexpr std::uint64_t kDefaultMaxQ = std::uint64_t{1} << 20;

class Field;
class Element;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_q, q = p^r > 2, in a polynomial basis over F_p.
///
/// Elements are addressed by their index in [0, q). For r > 1 the field is
/// F_p[g] / (modulus) with a monic irreducible modulus given by its r + 1
/// ascending coefficients. A Field is immutable once built and is shared
/// between the elements, forms and permutations that live in it.
class Field : public std::enable_shared_from_this<Field> {
 public:
  /// Builds F_{p^r}. An empty `modulus` selects the default: the monic
  /// irreducible of degree r with the smallest lower-coefficient index.
  /// Throws Error(kInvalidField) if p is not prime, q <= 2, q > max_q, or
  /// the modulus is not monic irreducible of degree r.
  static FieldPtr make(std::uint32_t p, std::uint32_t r = 1,
                       std::vector<std::uint32_t> modulus = {},
                       std::uint64_t max_q = kDefaultMaxQ);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return r_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return r_ == 1; }
  // Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept {
    return modulus_;
  }

  Index add(Index a, Index b) const noexcept;
  Index sub(Index a, Index b) const noexcept;
  Index neg(Index a) const noexcept;
  Index mul(Index a, Index b) const noexcept;
  Index pow(Index a, std::uint64_t e) const noexcept;
  // a^(q-2): inverse on F_q^*, 0 -> 0. Square-and-multiply.
  Index inv0(Index a) const noexcept;
  // Extended Euclid over Z (r = 1) or F_p[x] (r > 1). Throws kDomain on 0.
  Index inverse(Index a) const;
  // Image of the integer n under Z -> F_p -> F_q.
  Index from_integer(std::int64_t n) const noexcept;

  std::vector<std::uint32_t> coefficients(Index a) const;
  Index from_coefficients(std::span<const std::uint32_t> coeffs) const;

  Element element(Index a) const;
  Element zero() const;
  Element one() const;

  bool same_as(const Field& other) const noexcept;

  // Not for direct use: call make().
  struct Token {};
  Field(Token, std::uint32_t p, std::uint32_t r,
        std::vector<std::uint32_t> modulus);

 private:
  std::uint32_t p_;
  std::uint32_t r_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> place_;  // p^i, i < r
  std::vector<Index> inv0_table_;     // filled for small q
};

// Irreducibility over F_p of an arbitrary polynomial (ascending
// coefficients, leading coefficient nonzero).
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

bool is_prime(std::uint64_t n) noexcept;

/// A value in some F_q. Equality is index equality within the same field.
class Element {
 public:
  Element(FieldPtr field, Index index);

  const FieldPtr& field() const noexcept { return field_; }
  Index index() const noexcept { return index_; }
  std::vector<std::uint32_t> coefficients() const {
    return field_->coefficients(index_);
  }
  bool is_zero() const noexcept { return index_ == 0; }
  bool is_one() const noexcept { return index_ == 1; }

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Element& rhs);

  friend Element operator+(Element lhs, const Element& rhs) {
    return lhs += rhs;
  }
  friend Element operator-(Element lhs, const Element& rhs) {
    return lhs -= rhs;
  }
  friend Element operator*(Element lhs, const Element& rhs) {
    return lhs *= rhs;
  }
  // Elements of different fields compare unequal.
  friend bool operator==(const Element& lhs, const Element& rhs);

 private:
  FieldPtr field_;
  Index index_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

void require_same_field(const Field& a, const Field& b);
inline void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  require_same_field(*a, *b);
}

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element neg(const Element& a);
Element mul(const Element& a, const Element& b);
Element pow(const Element& a, std::uint64_t e);
Element inv0(const Element& a);
// Smallest k >= 1 with c^k = 1, searched over the divisors of q - 1.
std::uint64_t element_order(const Element& c);
std::vector<Element> enumerate(const FieldPtr& field);

}  // namespace carlitz

#endif  // CARLITZ_FIELD_HPP_
