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

#include "carlitz/field.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>
#include <utility>

namespace carlitz {
namespace {

using Poly = std::vector<std::int64_t>;

// q above this has no table; inv0 falls back to square-and-multiply.
constexpr std::uint32_t kInvTableLimit = 1u << 16;
constexpr std::uint64_t kHardMaxQ = std::uint64_t{1} << 31;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - quot * r};
    std::tie(old_s, s) = std::pair{s, old_s - quot * s};
  }
  std::int64_t inv = old_s % p;
  return inv < 0 ? inv + p : inv;
}

// Remainder of a modulo b over F_p; b must be trimmed and nonzero.
Poly poly_mod(Poly a, const Poly& b, std::int64_t p, Poly* quotient = nullptr) {
  trim(a);
  const std::int64_t lead_inv = mod_inverse(b.back(), p);
  if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::int64_t t = a.back() * lead_inv % p;
    if (quotient) (*quotient)[shift] = t;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = ((a[shift + j] - t * b[j]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

std::int64_t eval_at(std::span<const std::uint32_t> poly, std::int64_t x,
                     std::int64_t p) {
  std::int64_t acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t r) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < r; ++i) count *= p;
  std::vector<std::uint32_t> poly(r + 1, 0);
  poly[r] = 1;
  for (std::uint64_t lower = 0; lower < count; ++lower) {
    std::uint64_t rest = lower;
    for (std::uint32_t i = 0; i < r; ++i) {
      poly[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(p, poly)) return poly;
  }
  throw Error(Errc::kInternal, "no irreducible polynomial found");
}

}  // namespace

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kParse: return "parse error";
    case Errc::kInvalidField: return "invalid field";
    case Errc::kUnsupportedField: return "unsupported field";
    case Errc::kFieldMismatch: return "field mismatch";
    case Errc::kDomain: return "domain error";
    case Errc::kInvalidCoefficient: return "invalid coefficient";
    case Errc::kNotPermutation: return "not a permutation";
    case Errc::kNotConjugate: return "not conjugate";
    case Errc::kNotFullCycle: return "not a full cycle";
    case Errc::kInternal: return "internal error";
  }
  return "unknown error";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  if (poly.empty() || poly.back() % p == 0) return false;
  const std::size_t deg = poly.size() - 1;
  if (deg == 0) return false;
  if (deg == 1) return true;
  if (deg <= 3) {
    for (std::int64_t x = 0; x < p; ++x)
      if (eval_at(poly, x, p) == 0) return false;
    return true;
  }
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c %= p;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t lower = 0; lower < count; ++lower) {
      std::uint64_t rest = lower;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::int64_t>(rest % p);
        rest /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t r,
                     std::vector<std::uint32_t> modulus, std::uint64_t max_q) {
  if (!is_prime(p))
    throw Error(Errc::kInvalidField, "p=" + std::to_string(p) + " is not prime");
  if (r < 1) throw Error(Errc::kInvalidField, "degree r must be >= 1");
  const std::uint64_t cap = std::min(max_q, kHardMaxQ);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > cap)
      throw Error(Errc::kInvalidField,
                  "field size exceeds cap q <= " + std::to_string(cap));
  }
  if (q <= 2) throw Error(Errc::kInvalidField, "field size q must exceed 2");
  if (r == 1) {
    if (!modulus.empty() && !(modulus.size() == 2 && modulus[1] == 1))
      throw Error(Errc::kInvalidField, "prime fields take no modulus");
    modulus.clear();
  } else if (modulus.empty()) {
    modulus = default_modulus(p, r);
  } else {
    if (modulus.size() != r + 1)
      throw Error(Errc::kInvalidField, "modulus must have r+1 coefficients");
    for (auto c : modulus)
      if (c >= p) throw Error(Errc::kInvalidField, "modulus coefficient out of range");
    if (modulus.back() != 1) throw Error(Errc::kInvalidField, "modulus must be monic");
    if (!is_irreducible(p, modulus))
      throw Error(Errc::kInvalidField, "modulus is reducible over F_p");
  }
  return std::make_shared<const Field>(Token{}, p, r, std::move(modulus));
}

Field::Field(Token, std::uint32_t p, std::uint32_t r,
             std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < r_; ++i) {
    place_.push_back(q_);
    q_ *= p_;
  }
  if (q_ <= kInvTableLimit) {
    inv0_table_.resize(q_);
    for (Index a = 0; a < q_; ++a) inv0_table_[a] = pow(a, q_ - 2);
  }
}

Index Field::add(Index a, Index b) const noexcept {
  if (r_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Index out = 0;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += ((a % p_ + b % p_) % p_) * place_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

Index Field::neg(Index a) const noexcept {
  if (r_ == 1) return a == 0 ? 0 : p_ - a;
  Index out = 0;
  for (std::uint32_t i = 0; i < r_; ++i) {
    const std::uint32_t c = a % p_;
    out += (c == 0 ? 0 : p_ - c) * place_[i];
    a /= p_;
  }
  return out;
}

Index Field::sub(Index a, Index b) const noexcept { return add(a, neg(b)); }

Index Field::mul(Index a, Index b) const noexcept {
  const std::uint64_t p = p_;
  if (r_ == 1) return static_cast<Index>(std::uint64_t{a} * b % p);
  std::array<std::uint64_t, 32> x{}, y{};
  std::array<std::uint64_t, 64> prod{};
  for (std::uint32_t i = 0; i < r_; ++i) {
    x[i] = a % p_;
    y[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < r_; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
  }
  for (std::uint32_t k = 2 * r_ - 2; k >= r_; --k) {
    const std::uint64_t t = prod[k];
    if (t == 0) continue;
    for (std::uint32_t j = 0; j <= r_; ++j) {
      auto& slot = prod[k - r_ + j];
      slot = (slot + (p - t) * modulus_[j]) % p;
    }
  }
  Index out = 0;
  for (std::uint32_t i = 0; i < r_; ++i) out += static_cast<Index>(prod[i]) * place_[i];
  return out;
}

Index Field::pow(Index a, std::uint64_t e) const noexcept {
  Index result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Index Field::inv0(Index a) const noexcept {
  if (!inv0_table_.empty()) return inv0_table_[a];
  return pow(a, q_ - 2);
}

Index Field::inverse(Index a) const {
  if (a == 0) throw Error(Errc::kDomain, "zero has no multiplicative inverse");
  const std::int64_t p = p_;
  if (r_ == 1) return static_cast<Index>(mod_inverse(a, p));
  Poly m(modulus_.begin(), modulus_.end());
  Poly u;
  for (auto c : coefficients(a)) u.push_back(c);
  trim(u);
  // Invariant: old_s * a == old_r (mod m).
  Poly old_r = u, r = m, old_s{1}, s{};
  while (!r.empty()) {
    Poly quot;
    Poly rem = poly_mod(old_r, r, p, &quot);
    old_r = std::exchange(r, std::move(rem));
    Poly next_s = poly_sub(old_s, poly_mul(quot, s, p), p);
    old_s = std::exchange(s, std::move(next_s));
  }
  // old_r is a nonzero constant since m is irreducible.
  const std::int64_t scale = mod_inverse(old_r[0], p);
  std::vector<std::uint32_t> out(r_, 0);
  for (std::size_t i = 0; i < old_s.size() && i < r_; ++i)
    out[i] = static_cast<std::uint32_t>(old_s[i] * scale % p);
  return from_coefficients(out);
}

Index Field::from_integer(std::int64_t n) const noexcept {
  const std::int64_t p = p_;
  return static_cast<Index>(((n % p) + p) % p);
}

std::vector<std::uint32_t> Field::coefficients(Index a) const {
  std::vector<std::uint32_t> out(r_);
  for (auto& c : out) {
    c = a % p_;
    a /= p_;
  }
  return out;
}

Index Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != r_)
    throw Error(Errc::kDomain, "expected " + std::to_string(r_) + " coefficients");
  Index out = 0;
  for (std::uint32_t i = 0; i < r_; ++i) {
    if (coeffs[i] >= p_) throw Error(Errc::kDomain, "coefficient out of range");
    out += coeffs[i] * place_[i];
  }
  return out;
}

Element Field::element(Index a) const {
  if (a >= q_)
    throw Error(Errc::kDomain, "element index " + std::to_string(a) +
                                   " out of range for q=" + std::to_string(q_));
  return Element(shared_from_this(), a);
}

Element Field::zero() const { return element(0); }
Element Field::one() const { return element(1); }

bool Field::same_as(const Field& other) const noexcept {
  return this == &other ||
         (p_ == other.p_ && r_ == other.r_ && modulus_ == other.modulus_);
}

void require_same_field(const Field& a, const Field& b) {
  if (!a.same_as(b)) throw Error(Errc::kFieldMismatch, "operands live in different fields");
}

Element::Element(FieldPtr field, Index index) : field_(std::move(field)), index_(index) {
  if (!field_) throw Error(Errc::kDomain, "element without a field");
  if (index_ >= field_->order()) throw Error(Errc::kDomain, "element index out of range");
}

Element Element::operator-() const { return Element(field_, field_->neg(index_)); }

Element& Element::operator+=(const Element& rhs) {
  require_same_field(field_, rhs.field_);
  index_ = field_->add(index_, rhs.index_);
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same_field(field_, rhs.field_);
  index_ = field_->sub(index_, rhs.index_);
  return *this;
}

Element& Element::operator*=(const Element& rhs) {
  require_same_field(field_, rhs.field_);
  index_ = field_->mul(index_, rhs.index_);
  return *this;
}

bool operator==(const Element& lhs, const Element& rhs) {
  return lhs.index_ == rhs.index_ && lhs.field_->same_as(*rhs.field_);
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.index(); }

Element add(const Element& a, const Element& b) { return a + b; }
Element sub(const Element& a, const Element& b) { return a - b; }
Element neg(const Element& a) { return -a; }
Element mul(const Element& a, const Element& b) { return a * b; }

Element pow(const Element& a, std::uint64_t e) {
  return Element(a.field(), a.field()->pow(a.index(), e));
}

Element inv0(const Element& a) { return Element(a.field(), a.field()->inv0(a.index())); }

std::uint64_t element_order(const Element& c) {
  if (c.is_zero()) throw Error(Errc::kDomain, "order of 0 is undefined");
  const Field& f = *c.field();
  for (std::uint64_t k : divisors(f.order() - 1))
    if (f.pow(c.index(), k) == 1) return k;
  throw Error(Errc::kInternal, "element order does not divide q-1");
}

std::vector<Element> enumerate(const FieldPtr& field) {
  std::vector<Element> out;
  out.reserve(field->order());
  for (Index a = 0; a < field->order(); ++a) out.emplace_back(field, a);
  return out;
}

}  // namespace carlitz
