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

// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Every check is exact; each criterion also has a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "carlitz/field.hpp"
#include "carlitz/form.hpp"
#include "carlitz/full_cycle.hpp"
#include "carlitz/permutation.hpp"
#include "carlitz/prng.hpp"
#include "test_util.hpp"

namespace carlitz {
namespace {

using testing::iterate_table;
using testing::random_element;
using testing::random_elements;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> findings;
};

// Tallies exact checks; keeps the first failure for the report.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& what) {
    ++total_;
    if (ok) return;
    ++failed_;
    if (first_.empty()) first_ = what();
  }
  Outcome outcome() const {
    std::ostringstream s;
    s << (total_ - failed_) << "/" << total_ << " checks";
    if (failed_) s << "; first failure: " << first_;
    return {failed_ == 0, s.str(), {}};
  }

 private:
  std::size_t total_ = 0, failed_ = 0;
  std::string first_;
};

std::vector<Index> affine_table(const Field& f, Index c, Index d) {
  std::vector<Index> t(f.order());
  for (Index x = 0; x < f.order(); ++x) t[x] = f.add(f.mul(c, x), d);
  return t;
}

// Cycle lengths by following the table, independent of perm's decomposition.
CycleType brute_cycle_type(const std::vector<Index>& t) {
  std::vector<bool> seen(t.size(), false);
  std::vector<CycleType::Term> terms;
  for (Index s = 0; s < t.size(); ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0;
    for (Index x = s; !seen[x]; x = t[x]) seen[x] = true, ++len;
    terms.push_back({1, len});
  }
  return CycleType(terms);
}

bool is_identity_table(const std::vector<Index>& t) {
  for (Index x = 0; x < t.size(); ++x)
    if (t[x] != x) return false;
  return true;
}

std::vector<Index> compose_tables(const std::vector<Index>& f, const std::vector<Index>& g) {
  std::vector<Index> out(f.size());
  for (Index x = 0; x < f.size(); ++x) out[x] = f[g[x]];
  return out;
}

std::string describe(const CarlitzForm& f) {
  std::ostringstream s;
  s << (f.is_linear() ? "lin:" : "chain:");
  for (auto c : f.coefficients()) s << c << ' ';
  return s.str();
}

Outcome theorem_forward() {
  Tally t;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const auto F = Field::make(p);
    for (Index a1 = 0; a1 < p; ++a1)
      for (Index a2 = 1; a2 < p; ++a2) {
        const Element up[] = {F->element(a1)};
        const auto table = to_permutation(build_full_cycle_form(up, F->element(a2))).images();
        t.check(brute_cycle_type(table) == CycleType({{1, p}}),
                [&] { return "p=" + std::to_string(p) + " a1=" + std::to_string(a1) + " a2=" + std::to_string(a2); });
      }
  }
  return t.outcome();
}

Outcome theorem_converse() {
  Tally t;
  auto round_trip = [&](const Permutation& sigma) {
    const auto dec = decompose_full_cycle(sigma);
    const auto shift = Permutation::from_images(sigma.field(), affine_table(*sigma.field(), 1, dec.shift.index()));
    t.check(to_permutation(dec.form.expand()) == sigma &&
                conjugate(shift, to_permutation(dec.witness)) == sigma,
            [&] { return "q=" + std::to_string(sigma.size()); });
  };
  const auto F5 = Field::make(5);
  std::size_t full = 0;
  testing::for_each_permutation(F5, [&](const Permutation& sigma) {
    if (brute_cycle_type(sigma.images()) != CycleType({{1, 5}})) return;
    ++full;
    round_trip(sigma);
  });
  t.check(full == 24, [&] { return "found " + std::to_string(full) + " full cycles of F_5"; });
  for (std::uint32_t p : {7u, 11u}) {
    const auto F = Field::make(p);
    for (int i = 0; i < 200; ++i) round_trip(testing::random_full_cycle(F));
  }
  return t.outcome();
}

Outcome lemma_inverse() {
  Tally t;
  for (const auto& F : {Field::make(5), Field::make(7), Field::make(3, 2), Field::make(11), Field::make(13)}) {
    for (int i = 0; i < 300; ++i) {
      const std::size_t n = 1 + i % 6;
      const auto f = testing::random_chain(F, n);
      const auto inv = carlitz_inverse(f);
      const auto tf = testing::pointwise([&](Index x) { return f.eval(x); }, F->order());
      const auto ti = testing::pointwise([&](Index x) { return inv.eval(x); }, F->order());
      t.check(is_identity_table(compose_tables(tf, ti)) && is_identity_table(compose_tables(ti, tf)) &&
                  to_permutation(compose(f, inv)).is_identity() && to_permutation(compose(inv, f)).is_identity(),
              [&] { return "q=" + std::to_string(F->order()) + " " + describe(f); });
    }
  }
  return t.outcome();
}

Outcome linear_cycle_types() {
  Tally t;
  for (const auto& F : {Field::make(3), Field::make(2, 2), Field::make(5), Field::make(7), Field::make(2, 3),
                        Field::make(3, 2), Field::make(2, 4), Field::make(5, 2), Field::make(3, 3)}) {
    for (Index c = 1; c < F->order(); ++c)
      for (Index d = 0; d < F->order(); ++d)
        t.check(linear_cycle_type(F->element(c), F->element(d)) == brute_cycle_type(affine_table(*F, c, d)),
                [&] { return "q=" + std::to_string(F->order()) + " c=" + std::to_string(c) + " d=" + std::to_string(d); });
  }
  return t.outcome();
}

Outcome transpositions() {
  Tally t;
  for (const auto& F : {Field::make(3), Field::make(2, 2), Field::make(5), Field::make(7), Field::make(2, 3),
                        Field::make(3, 2), Field::make(11), Field::make(13)}) {
    for (Index a = 1; a < F->order(); ++a) {
      const auto f = transposition_form(F->element(a));
      bool ok = true;
      for (Index x = 0; x < F->order(); ++x) ok = ok && f.eval(x) == (x == 0 ? a : (x == a ? 0 : x));
      t.check(ok, [&] { return "q=" + std::to_string(F->order()) + " a=" + std::to_string(a); });
    }
  }
  return t.outcome();
}

Outcome full_cycle_iterates() {
  Tally t;
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const auto F = Field::make(p);
    for (int i = 0; i < 100; ++i) {
      const auto f = FullCycleForm::make(random_elements(F, i % 4), random_element(F, true));
      const auto base = testing::pointwise([&](Index x) { return f.expand().eval(x); }, p);
      for (std::uint64_t k = 0; k <= 2 * p; ++k) {
        const auto it = to_permutation(iterate_full_cycle(f, k)).images();
        t.check(it == iterate_table(base, k), [&] { return "p=" + std::to_string(p) + " k=" + std::to_string(k); });
        if (k == p) t.check(is_identity_table(it), [&] { return "k=p not identity, p=" + std::to_string(p); });
      }
    }
  }
  return t.outcome();
}

// Iterate coefficients with the textbook middle term
// 1 + c^-1 + ... + c^-(k-1) for every parity of n.
CarlitzForm literal_general_iterate(const GeneralForm& g, std::uint64_t k) {
  const Field& f = *g.field();
  const Index c = g.c().index();
  const Index ck = f.pow(c, k), ck_inv = f.inverse(ck), c_inv = f.inverse(c);
  Index sum = 0, term = 1;
  for (std::uint64_t j = 0; j < k; ++j) sum = f.add(sum, term), term = f.mul(term, c_inv);
  const auto& a = g.a_list();
  const std::size_t n = g.n();
  if (n == 0) return CarlitzForm::linear(g.field(), ck, f.mul(sum, a[0].index()));
  std::vector<Index> beta{ck};
  for (std::size_t i = 1; i <= n; ++i) beta.push_back(f.mul(i % 2 ? ck : ck_inv, a[i - 1].index()));
  beta.push_back(f.mul(sum, a[n].index()));
  for (std::size_t i = n + 2; i <= 2 * n + 1; ++i) beta.push_back(f.neg(a[2 * n + 2 - i - 1].index()));
  return CarlitzForm::chain(g.field(), std::move(beta));
}

Outcome general_forms() {
  Tally t;
  std::size_t literal_checked[2] = {0, 0}, literal_failed[2] = {0, 0};
  std::size_t type_failed[2] = {0, 0};
  for (const auto& F : {Field::make(5), Field::make(7), Field::make(3, 2), Field::make(13)}) {
    const Index q = F->order();
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = i % 6;
      const auto g = GeneralForm::make(random_element(F, true), random_elements(F, n + 1));
      const CarlitzForm form = g.expand();
      const auto base = testing::pointwise([&](Index x) { return form.eval(x); }, q);
      const CycleType got = brute_cycle_type(base);
      const bool identity = is_identity_table(base);
      if (!(g.c().is_one() && identity)) {
        const CycleType predicted = g.c().is_one()
                                        ? CycleType({{q / F->characteristic(), F->characteristic()}})
                                        : CycleType({{(q - 1) / element_order(g.c()), element_order(g.c())}, {1, 1}});
        if (got != predicted) ++type_failed[n % 2];
        t.check(got == predicted, [&] { return "cycle type, q=" + std::to_string(q) + " n=" + std::to_string(n); });
      }
      for (std::uint64_t k = 0; k <= 2 * q; ++k) {
        const auto want = iterate_table(base, k);
        t.check(to_permutation(iterate_general(g, k)).images() == want,
                [&] { return "iterate, q=" + std::to_string(q) + " n=" + std::to_string(n) + " k=" + std::to_string(k); });
        ++literal_checked[n % 2];
        if (to_permutation(literal_general_iterate(g, k)).images() != want) ++literal_failed[n % 2];
      }
    }
  }
  Outcome out = t.outcome();
  for (int parity : {1, 0}) {
    std::ostringstream s;
    s << (parity ? "odd" : "even") << " n: cycle-type prediction failed " << type_failed[parity]
      << " times; literal iterate formula failed " << literal_failed[parity] << "/" << literal_checked[parity];
    out.findings.push_back(s.str());
  }
  // The literal formula is asserted only where it holds empirically.
  if (literal_failed[1] != 0) {
    out.pass = false;
    out.detail += "; literal iterate formula fails for odd n";
  }
  if (literal_failed[0] != 0)
    out.findings.push_back("even n: literal middle coefficient uses powers of c^-1; the correct sum uses powers of c");
  return out;
}

Outcome encoding_completeness() {
  Tally t;
  const auto F5 = Field::make(5);
  std::size_t count = 0;
  testing::for_each_permutation(F5, [&](const Permutation& sigma) {
    ++count;
    t.check(to_permutation(perm_to_carlitz(sigma)) == sigma, [&] { return "sigma #" + std::to_string(count); });
  });
  t.check(count == 120, [] { return "did not visit 120 permutations"; });
  return t.outcome();
}

Outcome prng_periods() {
  Tally t;
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const auto F = Field::make(p);
    for (int i = 0; i < 50; ++i) {
      const auto f = build_full_cycle_form(random_elements(F, i % 5), random_element(F, true));
      for (const auto& s : enumerate(F))
        t.check(period(f, s) == p, [&] { return "p=" + std::to_string(p) + " seed=" + std::to_string(s.index()); });
      t.check(is_full_period(f), [&] { return "is_full_period, p=" + std::to_string(p); });
    }
  }
  return t.outcome();
}

Outcome field_core() {
  Tally t;
  std::size_t fields = 0;
  for (std::uint32_t q = 3; q <= 121; ++q) {
    std::uint32_t p = 2;
    while (q % p) ++p;
    std::uint32_t r = 0, rest = q;
    while (rest % p == 0) rest /= p, ++r;
    if (rest != 1) continue;
    ++fields;
    const auto F = Field::make(p, r);
    for (Index a = 1; a < q; ++a)
      t.check(F->inv0(a) == F->inverse(a), [&] { return "inv0, q=" + std::to_string(q) + " a=" + std::to_string(a); });
    t.check(F->inv0(0) == 0, [&] { return "inv0(0), q=" + std::to_string(q); });
    if (q > 49) continue;
    for (Index a = 1; a < q; ++a)
      for (Index u = 0; u < q; ++u)
        t.check(F->mul(a, F->inv0(u)) == F->inv0(F->mul(F->inverse(a), u)),
                [&] { return "folding, q=" + std::to_string(q) + " a=" + std::to_string(a) + " u=" + std::to_string(u); });
  }
  t.check(fields == 40, [&] { return "expected 40 prime powers in [3,121], found " + std::to_string(fields); });
  return t.outcome();
}

struct Criterion {
  const char* id;
  const char* name;
  double budget_s;
  Outcome (*run)();
};

}  // namespace
}  // namespace carlitz

int main() {
  using namespace carlitz;
  const Criterion criteria[] = {
      {"AC1", "full-cycle forms are full cycles (p<=13, n=1, exhaustive)", 10, theorem_forward},
      {"AC2", "every full cycle decomposes and round-trips", 30, theorem_converse},
      {"AC3", "closed-form inverse is two-sided (n=1..6)", 30, lemma_inverse},
      {"AC4", "cycle type of cx+d from ord(c)", 10, linear_cycle_types},
      {"AC5", "transposition form induces (0 a)", 10, transpositions},
      {"AC6", "full-cycle closed-form iterates", 30, full_cycle_iterates},
      {"AC7", "general forms: cycle type and iterates", 60, general_forms},
      {"AC8", "every permutation of F_5 encodes", 10, encoding_completeness},
      {"AC9", "full-cycle forms give period p from every seed", 10, prng_periods},
      {"AC10", "inv0 vs extended Euclid; folding identity", 10, field_core},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what(), {}};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < c.budget_s;
    const bool pass = out.pass && in_budget;
    if (!pass) ++failed;
    std::printf("[%s] %-5s %s: %s (%.2f s, budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs, c.budget_s, in_budget ? "" : ", OVER BUDGET");
    for (const auto& f : out.findings) std::printf("       finding: %s\n", f.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
