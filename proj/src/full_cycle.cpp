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

#include "carlitz/full_cycle.hpp"

#include <string>
#include <utility>

namespace carlitz {
namespace {

void require_odd_prime_field(const Field& f, const char* what) {
  if (!f.is_prime_field() || f.characteristic() % 2 == 0)
    throw Error(Errc::kUnsupportedField,
                std::string(what) + " requires an odd prime field F_p");
}

// 1 + m + ... + m^(k-1)
Index geometric_sum(const Field& f, Index m, std::uint64_t k) {
  if (m == 1) return f.from_integer(static_cast<std::int64_t>(k % f.characteristic()));
  const Index num = f.sub(f.pow(m, k), 1);
  return f.mul(num, f.inverse(f.sub(m, 1)));
}

// Coefficients [b0, b1..bn, mid, -an..-a1] around multiplier `m`: odd
// positions scale by m, even by m^-1.
CarlitzForm conjugated_linear_shape(const FieldPtr& field, Index m,
                                    std::span<const Element> a_up, Index mid) {
  const Field& f = *field;
  if (a_up.empty()) return CarlitzForm::linear(field, m, mid);
  const Index m_inv = f.inverse(m);
  std::vector<Index> b{m};
  for (std::size_t i = 1; i <= a_up.size(); ++i)
    b.push_back(f.mul(i % 2 == 1 ? m : m_inv, a_up[i - 1].index()));
  b.push_back(mid);
  for (std::size_t i = a_up.size(); i >= 1; --i) b.push_back(f.neg(a_up[i - 1].index()));
  return CarlitzForm::chain(field, std::move(b));
}

}  // namespace

FullCycleForm FullCycleForm::make(std::vector<Element> a_up, const Element& a_mid) {
  require_odd_prime_field(*a_mid.field(), "a full-cycle form");
  for (const auto& a : a_up) require_same_field(a.field(), a_mid.field());
  if (a_mid.is_zero())
    throw Error(Errc::kInvalidCoefficient, "full-cycle form needs a(n+1) != 0");
  return FullCycleForm(std::move(a_up), a_mid);
}

CarlitzForm FullCycleForm::expand() const {
  return conjugated_linear_shape(field(), 1, a_up_, a_mid_.index());
}

GeneralForm GeneralForm::make(const Element& c, std::vector<Element> a_list) {
  if (c.is_zero()) throw Error(Errc::kDomain, "general form needs c != 0");
  if (a_list.empty()) throw Error(Errc::kDomain, "general form needs a(n+1)");
  for (const auto& a : a_list) require_same_field(a.field(), c.field());
  return GeneralForm(c, std::move(a_list));
}

CarlitzForm GeneralForm::expand() const {
  std::span<const Element> up(a_list_.data(), a_list_.size() - 1);
  return conjugated_linear_shape(field(), c_.index(), up, a_list_.back().index());
}

CarlitzForm build_full_cycle_form(std::span<const Element> a_up, const Element& a_mid) {
  const CarlitzForm form =
      FullCycleForm::make(std::vector<Element>(a_up.begin(), a_up.end()), a_mid).expand();
  if (!is_full_cycle(to_permutation(form)))
    throw Error(Errc::kInternal, "full-cycle form does not induce a full cycle");
  return form;
}

std::optional<FullCycleForm> match_full_cycle_shape(const CarlitzForm& f) {
  const Field& fld = *f.field();
  if (!fld.is_prime_field() || fld.characteristic() % 2 == 0) return std::nullopt;
  const auto c = f.coefficients();
  if (c[0] != 1) return std::nullopt;
  if (f.is_linear()) {
    if (c[1] == 0) return std::nullopt;
    return FullCycleForm::make({}, f.coefficient(1));
  }
  const std::size_t len = f.chain_length();
  if (len % 2 != 0) return std::nullopt;
  const std::size_t n = len / 2;
  // tail positions 1..2n+1; position n+1 is the middle.
  for (std::size_t i = 1; i <= n; ++i)
    if (c[2 * n + 2 - i] != fld.neg(c[i])) return std::nullopt;
  if (c[n + 1] == 0) return std::nullopt;
  std::vector<Element> up;
  for (std::size_t i = 1; i <= n; ++i) up.push_back(f.coefficient(i));
  return FullCycleForm::make(std::move(up), f.coefficient(n + 1));
}

CarlitzForm conjugate_by_shift(const CarlitzForm& p, const Element& d) {
  require_same_field(p.field(), d.field());
  const Field& fld = *p.field();
  const FieldPtr& field = p.field();
  const CarlitzForm shifted = compose(p, CarlitzForm::linear(field, 1, d.index()));
  const CarlitzForm symbolic = compose(shifted, carlitz_inverse(p));

  // Closed form: the conjugate of x + d by b0..b(n+1) mirrors P's tail.
  const auto b = p.coefficients();
  CarlitzForm expected = CarlitzForm::identity(field);
  if (p.is_linear()) {
    expected = CarlitzForm::linear(field, 1, fld.mul(b[0], d.index()));
  } else {
    const std::size_t n = p.chain_length();
    std::vector<Index> out{1};
    for (std::size_t i = n + 1; i >= 2; --i) out.push_back(fld.neg(b[i]));
    out.push_back(fld.mul(b[0], d.index()));
    for (std::size_t i = 2; i <= n + 1; ++i) out.push_back(b[i]);
    expected = CarlitzForm::chain(field, std::move(out));
  }
  if (!(symbolic == expected))
    throw Error(Errc::kInternal, "symbolic conjugation disagrees with the closed form");
  return symbolic;
}

FullCycleForm conjugate_by_shift_form(const CarlitzForm& p, const Element& d) {
  require_odd_prime_field(*p.field(), "conjugate_by_shift_form");
  if (d.is_zero()) throw Error(Errc::kInvalidCoefficient, "shift d must be nonzero");
  auto shape = match_full_cycle_shape(conjugate_by_shift(p, d));
  if (!shape) throw Error(Errc::kInternal, "conjugate is not in full-cycle shape");
  return *shape;
}

FullCycleDecomposition decompose_full_cycle(const Permutation& sigma) {
  require_odd_prime_field(*sigma.field(), "decompose_full_cycle");
  if (!is_full_cycle(sigma))
    throw Error(Errc::kNotFullCycle, "permutation has cycle type " +
                                         cycle_type(sigma).to_string());
  const FieldPtr& field = sigma.field();
  const Element shift = field->one();
  const Permutation translate = to_permutation(CarlitzForm::linear(field, 1, 1));
  const Permutation pi = conjugator_between(translate, sigma);
  CarlitzForm witness = perm_to_carlitz(pi);
  FullCycleForm form = conjugate_by_shift_form(witness, shift);
  if (!(to_permutation(form.expand()) == sigma))
    throw Error(Errc::kInternal, "decomposition does not re-induce the permutation");
  return {std::move(form), std::move(witness), shift};
}

CarlitzForm transposition_form(const Element& a) {
  if (a.is_zero()) throw Error(Errc::kDomain, "transposition (0 a) needs a != 0");
  const FieldPtr& field = a.field();
  const Field& f = *field;
  const Index neg_a = f.neg(a.index());
  const CarlitzForm inner =
      CarlitzForm::chain(field, {1, neg_a, f.inverse(a.index()), neg_a, 0});
  return fold_multiplier(-(a * a), inner);
}

CarlitzForm general_transposition_form(const Element& a, const Element& b) {
  require_same_field(a.field(), b.field());
  if (a == b) throw Error(Errc::kDomain, "transposition needs two distinct points");
  if (a.is_zero()) return transposition_form(b);
  const FieldPtr& field = a.field();
  const CarlitzForm to_origin = CarlitzForm::linear(field->one(), -a);
  const CarlitzForm back = CarlitzForm::linear(field->one(), a);
  return compose(back, compose(transposition_form(b - a), to_origin));
}

std::optional<CarlitzForm> as_affine(const Permutation& sigma) {
  const FieldPtr& field = sigma.field();
  const Field& f = *field;
  const Index d = sigma(0);
  const Index c = f.sub(sigma(1), d);
  if (c == 0) return std::nullopt;
  for (Index x = 0; x < sigma.size(); ++x)
    if (sigma(x) != f.add(f.mul(c, x), d)) return std::nullopt;
  return CarlitzForm::linear(field, c, d);
}

CarlitzForm perm_to_carlitz(const Permutation& sigma) {
  if (auto affine = as_affine(sigma)) return *affine;
  const FieldPtr& field = sigma.field();
  CarlitzForm result = CarlitzForm::identity(field);
  // (c0 c1 ... ck-1) = (c0 ck-1) o ... o (c0 c1)
  for (const auto& cycle : cycle_decomposition(sigma)) {
    const Element head = field->element(cycle[0]);
    for (std::size_t j = 1; j < cycle.size(); ++j)
      result = compose(general_transposition_form(head, field->element(cycle[j])), result);
  }
  return result;
}

CycleType linear_cycle_type(const Element& c, const Element& d) {
  require_same_field(c.field(), d.field());
  if (c.is_zero()) throw Error(Errc::kDomain, "linear map needs c != 0");
  const Field& f = *c.field();
  const std::uint64_t q = f.order();
  if (c.is_one()) {
    if (d.is_zero()) return CycleType({{q, 1}});
    return CycleType({{q / f.characteristic(), f.characteristic()}});
  }
  const std::uint64_t k = element_order(c);
  return CycleType({{(q - 1) / k, k}, {1, 1}});
}

CarlitzForm same_cycle_type_form(const Element& c, std::span<const Element> a_list) {
  const GeneralForm g = GeneralForm::make(c, std::vector<Element>(a_list.begin(), a_list.end()));
  CarlitzForm form = g.expand();
  const Permutation table = to_permutation(form);
  if (c.is_one() && table.is_identity()) return form;
  const CycleType predicted = linear_cycle_type(c, c.field()->one());
  if (cycle_type(table) != predicted)
    throw Error(Errc::kInternal, "form has cycle type " + cycle_type(table).to_string() +
                                     ", expected " + predicted.to_string());
  return form;
}

CarlitzForm iterate_full_cycle(const FullCycleForm& f, std::uint64_t k) {
  const Field& fld = *f.field();
  const Index times = fld.from_integer(static_cast<std::int64_t>(k % fld.characteristic()));
  return conjugated_linear_shape(f.field(), 1, f.a_up(), fld.mul(times, f.a_mid().index()));
}

CarlitzForm iterate_general(const GeneralForm& g, std::uint64_t k) {
  const Field& f = *g.field();
  const Index c = g.c().index();
  // Odd n conjugates c^-1 x + a(n+1); even n conjugates c x + a(n+1).
  const Index m = (g.n() % 2 == 1) ? f.inverse(c) : c;
  const Index mid = f.mul(geometric_sum(f, m, k), g.a_list().back().index());
  std::span<const Element> up(g.a_list().data(), g.a_list().size() - 1);
  return conjugated_linear_shape(g.field(), f.pow(c, k), up, mid);
}

}  // namespace carlitz
