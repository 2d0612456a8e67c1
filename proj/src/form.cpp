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

#include "carlitz/form.hpp"

#include <string>
#include <utility>

namespace carlitz {

CarlitzForm::CarlitzForm(FieldPtr field, bool linear, std::vector<Index> coeffs)
    : field_(std::move(field)), linear_(linear), coeffs_(std::move(coeffs)) {
  if (!field_) throw Error(Errc::kDomain, "form without a field");
  for (Index c : coeffs_)
    if (c >= field_->order()) throw Error(Errc::kDomain, "coefficient index out of range");
  if (linear_) {
    if (coeffs_.size() != 2) throw Error(Errc::kDomain, "linear form takes exactly c and d");
    if (coeffs_[0] == 0) throw Error(Errc::kInvalidCoefficient, "linear form needs c != 0");
  } else {
    if (coeffs_.size() < 3)
      throw Error(Errc::kDomain, "chain needs a tail of at least two coefficients");
    if (coeffs_[0] == 0) throw Error(Errc::kInvalidCoefficient, "chain needs a0 != 0");
  }
}

CarlitzForm CarlitzForm::linear(const Element& c, const Element& d) {
  require_same_field(c.field(), d.field());
  return CarlitzForm(c.field(), true, {c.index(), d.index()});
}

CarlitzForm CarlitzForm::chain(const Element& a0, std::span<const Element> tail) {
  std::vector<Index> coeffs{a0.index()};
  for (const auto& a : tail) {
    require_same_field(a0.field(), a.field());
    coeffs.push_back(a.index());
  }
  return CarlitzForm(a0.field(), false, std::move(coeffs));
}

CarlitzForm CarlitzForm::identity(const FieldPtr& field) { return linear(field, 1, 0); }

CarlitzForm CarlitzForm::linear(FieldPtr field, Index c, Index d) {
  return CarlitzForm(std::move(field), true, {c, d});
}

CarlitzForm CarlitzForm::chain(FieldPtr field, std::vector<Index> coeffs) {
  return CarlitzForm(std::move(field), false, std::move(coeffs));
}

std::vector<Element> CarlitzForm::tail() const {
  std::vector<Element> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.emplace_back(field_, coeffs_[i]);
  return out;
}

Index CarlitzForm::eval(Index x) const noexcept {
  const Field& f = *field_;
  Index t = f.add(f.mul(coeffs_[0], x), coeffs_[1]);
  for (std::size_t i = 2; i < coeffs_.size(); ++i) t = f.add(f.inv0(t), coeffs_[i]);
  return t;
}

Element CarlitzForm::eval(const Element& x) const {
  require_same_field(field_, x.field());
  return Element(field_, eval(x.index()));
}

Permutation to_permutation(const CarlitzForm& f) {
  std::vector<Index> images(f.field()->order());
  for (Index x = 0; x < images.size(); ++x) images[x] = f.eval(x);
  try {
    return Permutation::from_images(f.field(), std::move(images));
  } catch (const Error&) {
    throw Error(Errc::kInternal, "Carlitz form induced a non-bijective table");
  }
}

CarlitzForm fold_multiplier(const Element& a, const CarlitzForm& f) {
  require_same_field(a.field(), f.field());
  if (a.is_zero()) throw Error(Errc::kDomain, "cannot fold the multiplier 0");
  const Field& fld = *f.field();
  const Index inv = fld.inverse(a.index());
  std::vector<Index> coeffs(f.coefficients().begin(), f.coefficients().end());
  if (f.is_linear()) {
    for (auto& c : coeffs) c = fld.mul(a.index(), c);
    return CarlitzForm::linear(f.field(), coeffs[0], coeffs[1]);
  }
  Index m = a.index();
  for (std::size_t i = coeffs.size() - 1; i >= 1; --i) {
    coeffs[i] = fld.mul(m, coeffs[i]);
    if (i > 1) m = (m == a.index()) ? inv : a.index();
  }
  // a0 shares the multiplier of a1.
  coeffs[0] = fld.mul(m, coeffs[0]);
  return CarlitzForm::chain(f.field(), std::move(coeffs));
}

CarlitzForm compose(const CarlitzForm& f, const CarlitzForm& g) {
  require_same_field(f.field(), g.field());
  const Field& fld = *f.field();
  const auto fc = f.coefficients();
  if (g.is_linear()) {
    // a0 (c x + d) + a1 = (a0 c) x + (a0 d + a1)
    const auto gc = g.coefficients();
    std::vector<Index> out(fc.begin(), fc.end());
    out[0] = fld.mul(fc[0], gc[0]);
    out[1] = fld.add(fld.mul(fc[0], gc[1]), fc[1]);
    if (f.is_linear()) return CarlitzForm::linear(f.field(), out[0], out[1]);
    return CarlitzForm::chain(f.field(), std::move(out));
  }
  const CarlitzForm folded = fold_multiplier(f.leading(), g);
  std::vector<Index> out(folded.coefficients().begin(), folded.coefficients().end());
  out.back() = fld.add(out.back(), fc[1]);
  out.insert(out.end(), fc.begin() + 2, fc.end());
  return CarlitzForm::chain(f.field(), std::move(out));
}

CarlitzForm carlitz_inverse(const CarlitzForm& f) {
  const Field& fld = *f.field();
  const auto a = f.coefficients();
  const Index a0 = a[0];
  const Index a0_inv = fld.inverse(a0);
  if (f.is_linear()) {
    return CarlitzForm::linear(f.field(), a0_inv, fld.neg(fld.mul(a0_inv, a[1])));
  }
  const std::size_t n = f.chain_length();
  std::vector<Index> b(n + 2);
  b[0] = (n % 2 == 1) ? a0 : a0_inv;
  for (std::size_t k = 1; k <= n + 1; ++k) {
    const std::size_t src = n + 2 - k;
    const Index scale = (src % 2 == 1) ? a0_inv : a0;
    b[k] = fld.neg(fld.mul(scale, a[src]));
  }
  return CarlitzForm::chain(f.field(), std::move(b));
}

std::vector<Element> reduce_to_standard(const CarlitzForm& f) {
  // With L_a(x) = -(x^q - x)/(x - a), s_0 = f(0) and
  // s_j = -sum_a f(a) a^(q-1-j) for 1 <= j <= q-1 (0^0 = 1).
  const Field& fld = *f.field();
  const std::size_t q = fld.order();
  std::vector<Index> acc(q, 0);
  for (Index a = 0; a < q; ++a) {
    const Index fa = f.eval(a);
    if (fa == 0) continue;
    Index pw = 1;
    for (std::size_t j = q - 1; j >= 1; --j) {
      acc[j] = fld.add(acc[j], fld.mul(fa, pw));
      pw = fld.mul(pw, a);
    }
  }
  std::vector<Element> out;
  out.reserve(q);
  out.emplace_back(f.field(), f.eval(Index{0}));
  for (std::size_t j = 1; j < q; ++j) out.emplace_back(f.field(), fld.neg(acc[j]));
  return out;
}

Element eval_standard(std::span<const Element> coeffs, const Element& x) {
  Element acc = x.field()->zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace carlitz
