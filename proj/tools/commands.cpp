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

#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "carlitz/form.hpp"
#include "carlitz/full_cycle.hpp"
#include "carlitz/io.hpp"
#include "carlitz/permutation.hpp"
#include "carlitz/prng.hpp"
#include "json.hpp"

namespace carlitz::cli {
namespace {

using ojson = nlohmann::ordered_json;

// Key/value output rendered either as "key: value" lines or one JSON object.
class Report {
 public:
  void add(const std::string& key, ojson value, std::string human = {}) {
    if (human.empty()) human = value.is_string() ? value.get<std::string>() : value.dump();
    doc_[key] = std::move(value);
    lines_.emplace_back(key, std::move(human));
  }

  void print(std::ostream& out, bool json) const {
    if (json) {
      ojson doc{{"v", kJsonVersion}};
      doc.update(doc_);
      out << doc.dump() << '\n';
      return;
    }
    for (const auto& [key, value] : lines_) out << key << ": " << value << '\n';
  }

 private:
  ojson doc_ = ojson::object();
  std::vector<std::pair<std::string, std::string>> lines_;
};

struct Context {
  FieldPtr field;
  bool json = false;
  std::ostream& out;
  std::ostream& err;
};

std::string format_cycles(const std::vector<Cycle>& cycles) {
  std::string s;
  for (const auto& c : cycles) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
    s += ')';
  }
  return s;
}

ojson form_json(const CarlitzForm& f) { return ojson::parse(form_to_json(f).dump()); }

void add_table(Report& r, const Permutation& sigma, const char* key = "table") {
  r.add(key, sigma.images(), format_indices(sigma.images()));
}

// Emits the verification line; returns the exit code.
int finish(const Context& ctx, Report& r, bool ok, const std::string& detail) {
  r.add("verified", ok, ok ? detail : "FAILED " + detail);
  r.print(ctx.out, ctx.json);
  if (!ok) ctx.err << "error: internal verification failed: " << detail << '\n';
  return ok ? kOk : kVerificationFailed;
}

std::string read_argument(const std::string& arg) {
  if (!arg.starts_with("@")) return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error(Errc::kParse, "cannot read file '" + arg.substr(1) + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Element> parse_list_args(const FieldPtr& field, const std::vector<std::string>& items) {
  std::vector<Element> out;
  for (const auto& item : items)
    for (auto& e : parse_element_list(field, item)) out.push_back(e);
  return out;
}

int cmd_analyze(const Context& ctx, const std::string& text) {
  const CarlitzForm f = parse_form(ctx.field, text);
  const Permutation sigma = to_permutation(f);
  const auto cycles = cycle_decomposition(sigma);
  const CycleType type = cycle_type(sigma);
  const auto ord = order(sigma);
  Report r;
  r.add("field", format_field_spec(*ctx.field));
  r.add("form", form_json(f), format_form(f));
  r.add("chain_length", f.chain_length());
  add_table(r, sigma);
  r.add("cycles", cycles, format_cycles(cycles));
  r.add("cycle_type", type.to_string());
  r.add("full_cycle", is_full_cycle(sigma));
  r.add("order", ord ? ojson(*ord) : ojson("overflow"));
  bool ok = type.points() == ctx.field->order();
  if (ord) ok = ok && power(sigma, *ord).is_identity();
  return finish(ctx, r, ok, "cycle lengths sum to q and sigma^order = id");
}

int cmd_invert(const Context& ctx, const std::string& text) {
  const CarlitzForm f = parse_form(ctx.field, text);
  const CarlitzForm inv = carlitz_inverse(f);
  const bool ok = to_permutation(compose(f, inv)).is_identity() &&
                  to_permutation(compose(inv, f)).is_identity();
  Report r;
  r.add("inverse", form_json(inv), format_form(inv));
  return finish(ctx, r, ok, "round-trip ok");
}

CarlitzForm power_form(const CarlitzForm& f, std::uint64_t k) {
  constexpr std::size_t kMaxChain = 1u << 20;
  if (f.chain_length() > 0 && k > kMaxChain / f.chain_length())
    throw Error(Errc::kDomain, "iterate chain too long; use an fc: or gf: form for closed-form iterates");
  CarlitzForm result = CarlitzForm::identity(f.field());
  CarlitzForm base = f;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

int cmd_iterate(const Context& ctx, const std::string& text, std::uint64_t k) {
  CarlitzForm base = CarlitzForm::identity(ctx.field);
  CarlitzForm it = base;
  std::string method;
  const std::string_view t = text;
  if (t.starts_with("fc:")) {
    const FullCycleForm fc = parse_full_cycle_form(ctx.field, text);
    base = fc.expand();
    it = iterate_full_cycle(fc, k);
    method = "closed form (full cycle)";
  } else if (t.starts_with("gf:")) {
    const GeneralForm g = parse_general_form(ctx.field, text);
    base = g.expand();
    it = iterate_general(g, k);
    method = "closed form (general)";
  } else {
    base = parse_form(ctx.field, text);
    const auto ord = order(to_permutation(base));
    it = power_form(base, ord ? k % *ord : k);
    method = "repeated composition";
  }
  const Permutation expected = power(to_permutation(base), k);
  const Permutation got = to_permutation(it);
  Report r;
  r.add("k", k);
  r.add("method", method);
  r.add("iterate", form_json(it), format_form(it));
  add_table(r, got);
  return finish(ctx, r, got == expected, "iterate table equals k-fold composition");
}

int cmd_fullcycle(const Context& ctx, const std::vector<std::string>& a, const std::string& mid) {
  const auto a_up = parse_list_args(ctx.field, a);
  const Element a_mid = parse_element(ctx.field, mid);
  const FullCycleForm fc = FullCycleForm::make(a_up, a_mid);
  const CarlitzForm f = build_full_cycle_form(a_up, a_mid);
  const Permutation sigma = to_permutation(f);
  Report r;
  r.add("full_cycle_form", format_full_cycle_form(fc));
  r.add("form", form_json(f), format_form(f));
  add_table(r, sigma);
  r.add("cycles", cycle_decomposition(sigma), format_cycles(cycle_decomposition(sigma)));
  const bool full = is_full_cycle(sigma);
  r.add("full_cycle", full);
  return finish(ctx, r, full && period(f, ctx.field->zero()) == ctx.field->order(),
                "single cycle of length p");
}

int cmd_decompose(const Context& ctx, const std::string& perm) {
  const Permutation sigma = parse_permutation(ctx.field, read_argument(perm));
  const FullCycleDecomposition dec = decompose_full_cycle(sigma);
  const CarlitzForm expanded = dec.form.expand();
  const Permutation shift = to_permutation(CarlitzForm::linear(ctx.field->one(), dec.shift));
  const bool ok = to_permutation(expanded) == sigma &&
                  conjugate(shift, to_permutation(dec.witness)) == sigma;
  Report r;
  r.add("full_cycle_form", format_full_cycle_form(dec.form));
  r.add("form", form_json(expanded), format_form(expanded));
  r.add("witness", form_json(dec.witness), format_form(dec.witness));
  r.add("shift", dec.shift.index());
  return finish(ctx, r, ok, "form re-induces sigma and sigma = P o (x+d) o P^-1");
}

int cmd_encode(const Context& ctx, const std::string& perm) {
  const Permutation sigma = parse_permutation(ctx.field, read_argument(perm));
  const CarlitzForm f = perm_to_carlitz(sigma);
  Report r;
  r.add("form", form_json(f), format_form(f));
  r.add("chain_length", f.chain_length());
  return finish(ctx, r, to_permutation(f) == sigma, "round-trip ok");
}

int cmd_txform(const Context& ctx, const std::string& a_text, const std::string& b_text) {
  const Element a = parse_element(ctx.field, a_text);
  Element lo = ctx.field->zero(), hi = a;
  CarlitzForm f = CarlitzForm::identity(ctx.field);
  if (b_text.empty()) {
    f = transposition_form(a);
  } else {
    hi = parse_element(ctx.field, b_text);
    lo = a;
    f = general_transposition_form(a, hi);
  }
  const Permutation sigma = to_permutation(f);
  bool ok = sigma(lo.index()) == hi.index() && sigma(hi.index()) == lo.index();
  for (Index x = 0; x < sigma.size(); ++x)
    if (x != lo.index() && x != hi.index()) ok = ok && sigma(x) == x;
  Report r;
  r.add("form", form_json(f), format_form(f));
  add_table(r, sigma);
  return finish(ctx, r, ok, "table is the transposition (" + std::to_string(lo.index()) + " " +
                                std::to_string(hi.index()) + ")");
}

int cmd_stream(const Context& ctx, const std::string& text, const std::string& seed_text,
               std::size_t count) {
  const CarlitzForm f = parse_form(ctx.field, text);
  const Element seed = parse_element(ctx.field, seed_text);
  const auto values = stream({f, seed, count});
  const std::uint64_t per = period(f, seed);
  bool ok = true;
  for (std::size_t i = 0; i + per < values.size(); ++i) ok = ok && values[i] == values[i + per];
  if (ctx.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : values) arr.push_back(v.index());
    ctx.out << arr.dump() << '\n';
  } else {
    for (const auto& v : values) ctx.out << v.index() << '\n';
  }
  ctx.err << (ok ? "verified: " : "verified: FAILED ") << "period " << per << '\n';
  return ok ? kOk : kVerificationFailed;
}

// Quick exhaustive sweeps over small fields.
int cmd_selftest(std::ostream& out) {
  std::mt19937_64 rng(20261014);
  bool all = true;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const Error& e) {
      out << "  " << e.what() << '\n';
    }
    out << (ok ? "ok   " : "FAIL ") << name << '\n';
    all = all && ok;
  };
  check("full-cycle forms over F_3, F_5, F_7 (n = 1)", [] {
    for (std::uint32_t p : {3u, 5u, 7u}) {
      const auto F = Field::make(p);
      for (Index a1 = 0; a1 < p; ++a1)
        for (Index a2 = 1; a2 < p; ++a2) {
          const Element up[] = {F->element(a1)};
          if (!is_full_cycle(to_permutation(build_full_cycle_form(up, F->element(a2))))) return false;
        }
    }
    return true;
  });
  check("decomposition of every full cycle of F_5", [] {
    const auto F = Field::make(5);
    std::vector<Index> rest{1, 2, 3, 4};
    do {
      std::vector<Index> img(5);
      Index prev = 0;
      for (Index x : rest) img[prev] = x, prev = x;
      img[prev] = 0;
      const auto sigma = Permutation::from_images(F, img);
      if (!(to_permutation(decompose_full_cycle(sigma).form.expand()) == sigma)) return false;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return true;
  });
  check("inverse forms over F_7 and F_9", [&] {
    for (const auto& F : {Field::make(7), Field::make(3, 2)}) {
      std::uniform_int_distribution<Index> any(0, F->order() - 1), nz(1, F->order() - 1);
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<Index> coeffs{nz(rng)};
        const std::size_t n = 1 + trial % 5;
        for (std::size_t i = 0; i <= n; ++i) coeffs.push_back(any(rng));
        const auto f = CarlitzForm::chain(F, coeffs);
        if (!to_permutation(compose(f, carlitz_inverse(f))).is_identity()) return false;
      }
    }
    return true;
  });
  check("transposition forms over F_4, F_5, F_8, F_9", [] {
    for (const auto& F : {Field::make(2, 2), Field::make(5), Field::make(2, 3), Field::make(3, 2)}) {
      for (Index a = 1; a < F->order(); ++a) {
        const auto sigma = to_permutation(transposition_form(F->element(a)));
        for (Index x = 0; x < F->order(); ++x) {
          const Index want = x == 0 ? a : (x == a ? 0 : x);
          if (sigma(x) != want) return false;
        }
      }
    }
    return true;
  });
  return all ? kOk : kVerificationFailed;
}

}  // namespace

int exit_code_for(Errc code) noexcept {
  switch (code) {
    case Errc::kParse: return kUsage;
    case Errc::kInvalidField: return kBadField;
    case Errc::kUnsupportedField: return kUnsupported;
    case Errc::kFieldMismatch: return kMismatch;
    case Errc::kDomain: return kDomainError;
    case Errc::kInvalidCoefficient: return kBadCoefficient;
    case Errc::kNotPermutation: return kBadPermutation;
    case Errc::kNotConjugate: return kNotConjugateExit;
    case Errc::kNotFullCycle: return kNotFullCycleExit;
    case Errc::kInternal: return kVerificationFailed;
  }
  return kVerificationFailed;
}

std::uint64_t max_q_from_env() {
  const char* env = std::getenv("CARLITZ_PP_MAX_Q");
  if (!env || !*env) return kDefaultMaxQ;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) return kDefaultMaxQ;
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::uint64_t max_q) {
  CLI::App app{"Carlitz-form permutation polynomials over finite fields", "carlitz-pp"};
  app.require_subcommand(1);

  std::string field_text, form_text, perm_text, mid, a_text, b_text, seed = "0";
  std::vector<std::string> a_list;
  std::uint64_t k = 1;
  std::size_t count = 0;
  bool json = false;

  auto with_field = [&](CLI::App* sub) {
    sub->add_option("-f,--field", field_text, "field spec, e.g. p=7 or p=3,r=2,mod=[1,0,1]")->required();
    sub->add_flag("--json", json, "emit JSON");
    return sub;
  };
  auto* analyze = with_field(app.add_subcommand("analyze", "table, cycles and cycle type of a form"));
  analyze->add_option("form", form_text, "lin:c,d | chain:a0;a1,... | fc:... | gf:...")->required();
  auto* invert = with_field(app.add_subcommand("invert", "closed-form inverse of a form"));
  invert->add_option("form", form_text)->required();
  auto* iterate = with_field(app.add_subcommand("iterate", "k-th iterate of a form"));
  iterate->add_option("form", form_text)->required();
  iterate->add_option("-k,--k", k, "iteration count")->required();
  auto* fullcycle = with_field(app.add_subcommand("fullcycle", "build a full-cycle form over F_p"));
  fullcycle->add_option("--a", a_list, "a1,...,an (comma separated or repeated)");
  fullcycle->add_option("--mid", mid, "nonzero middle coefficient a(n+1)")->required();
  auto* decompose = with_field(app.add_subcommand("decompose", "write a full cycle as a full-cycle form"));
  decompose->add_option("permutation", perm_text, "{\"q\":5,\"images\":[...]} or @file")->required();
  auto* encode = with_field(app.add_subcommand("encode", "Carlitz form of an arbitrary permutation"));
  encode->add_option("permutation", perm_text, "{\"q\":5,\"images\":[...]} or @file")->required();
  auto* txform = with_field(app.add_subcommand("txform", "form of the transposition (0 a) or (a b)"));
  txform->add_option("--a", a_text)->required();
  txform->add_option("--b", b_text);
  auto* stream_cmd = with_field(app.add_subcommand("stream", "sequence s(n+1) = f(s(n))"));
  stream_cmd->add_option("form", form_text)->required();
  stream_cmd->add_option("--seed", seed, "initial value s0");
  stream_cmd->add_option("--count", count, "number of outputs")->required();
  auto* selftest = app.add_subcommand("selftest");
  selftest->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (selftest->parsed()) return cmd_selftest(out);
    Context ctx{parse_field_spec(field_text, max_q), json, out, err};
    if (analyze->parsed()) return cmd_analyze(ctx, form_text);
    if (invert->parsed()) return cmd_invert(ctx, form_text);
    if (iterate->parsed()) return cmd_iterate(ctx, form_text, k);
    if (fullcycle->parsed()) return cmd_fullcycle(ctx, a_list, mid);
    if (decompose->parsed()) return cmd_decompose(ctx, perm_text);
    if (encode->parsed()) return cmd_encode(ctx, perm_text);
    if (txform->parsed()) return cmd_txform(ctx, a_text, b_text);
    if (stream_cmd->parsed()) return cmd_stream(ctx, form_text, seed, count);
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace carlitz::cli
