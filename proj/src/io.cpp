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

#include "carlitz/io.hpp"

#include <charconv>
#include <optional>

namespace carlitz {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::kParse, what); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    parse_fail("expected a non-negative integer for " + std::string(what) + ", got '" +
               std::string(text) + "'");
  return value;
}

// Splits on `sep` outside brackets. An all-blank input yields no pieces.
std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  if (trim(text).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[') ++depth;
    if (text[i] == ']') --depth;
    if (text[i] == sep && depth == 0) {
      out.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(text.substr(start)));
  return out;
}

std::string_view strip_prefix(std::string_view text, std::string_view prefix) {
  text = trim(text);
  if (text.substr(0, prefix.size()) != prefix) parse_fail("expected '" + std::string(prefix) + "'");
  return text.substr(prefix.size());
}

std::string join(const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i].index());
  }
  return out;
}

Index json_index(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned())
    parse_fail(std::string("JSON field '") + key + "' must be a non-negative integer");
  return doc[key].get<Index>();
}

void check_version(const json& doc) {
  if (!doc.is_object()) parse_fail("expected a JSON object");
  if (doc.contains("v") && doc["v"] != kJsonVersion)
    parse_fail("unsupported JSON version " + doc["v"].dump());
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

FieldPtr parse_field_spec(std::string_view text, std::uint64_t max_q) {
  std::optional<std::uint64_t> p, r;
  std::vector<std::uint32_t> modulus;
  for (auto item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) parse_fail("field spec item '" + std::string(item) + "' lacks '='");
    const auto key = trim(item.substr(0, eq));
    const auto value = trim(item.substr(eq + 1));
    if (key == "p") {
      p = parse_uint(value, "p");
    } else if (key == "r") {
      r = parse_uint(value, "r");
    } else if (key == "mod") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']')
        parse_fail("mod must be a bracketed list like [1,0,1]");
      for (auto c : split(value.substr(1, value.size() - 2), ','))
        modulus.push_back(static_cast<std::uint32_t>(parse_uint(c, "modulus coefficient")));
    } else {
      parse_fail("unknown field spec key '" + std::string(key) + "'");
    }
  }
  if (!p) parse_fail("field spec needs p=<prime>");
  if (*p > 0xffffffffu || r.value_or(1) > 64) throw Error(Errc::kInvalidField, "field too large");
  return Field::make(static_cast<std::uint32_t>(*p), static_cast<std::uint32_t>(r.value_or(1)),
                     std::move(modulus), max_q);
}

std::string format_field_spec(const Field& field) {
  std::string out = "p=" + std::to_string(field.characteristic());
  if (field.is_prime_field()) return out;
  out += ",r=" + std::to_string(field.degree()) + ",mod=[";
  for (std::size_t i = 0; i < field.modulus().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(field.modulus()[i]);
  }
  return out + "]";
}

Element parse_element(const FieldPtr& field, std::string_view text) {
  const std::uint64_t v = parse_uint(text, "element");
  if (v >= field->order())
    parse_fail("element " + std::to_string(v) + " out of range [0, " +
               std::to_string(field->order()) + ")");
  return field->element(static_cast<Index>(v));
}

std::vector<Element> parse_element_list(const FieldPtr& field, std::string_view text) {
  std::vector<Element> out;
  for (auto item : split(text, ',')) out.push_back(parse_element(field, item));
  return out;
}

FullCycleForm parse_full_cycle_form(const FieldPtr& field, std::string_view text) {
  const auto parts = split(strip_prefix(text, "fc:"), ';');
  if (parts.size() != 2) parse_fail("full-cycle form must look like fc:a1,...,an;amid");
  return FullCycleForm::make(parse_element_list(field, parts[0]), parse_element(field, parts[1]));
}

GeneralForm parse_general_form(const FieldPtr& field, std::string_view text) {
  const auto parts = split(strip_prefix(text, "gf:"), ';');
  if (parts.size() != 2) parse_fail("general form must look like gf:c;a1,...,a(n+1)");
  return GeneralForm::make(parse_element(field, parts[0]), parse_element_list(field, parts[1]));
}

CarlitzForm parse_form(const FieldPtr& field, std::string_view text) {
  text = trim(text);
  if (text.starts_with("{")) return form_from_json(field, parse_json(text));
  if (text.starts_with("fc:")) return parse_full_cycle_form(field, text).expand();
  if (text.starts_with("gf:")) return parse_general_form(field, text).expand();
  if (text.starts_with("lin:")) {
    const auto xs = parse_element_list(field, text.substr(4));
    if (xs.size() != 2) parse_fail("linear form must look like lin:c,d");
    return CarlitzForm::linear(xs[0], xs[1]);
  }
  if (text.starts_with("chain:")) {
    const auto parts = split(text.substr(6), ';');
    if (parts.size() != 2) parse_fail("chain form must look like chain:a0;a1,...,a(n+1)");
    const auto tail = parse_element_list(field, parts[1]);
    if (tail.size() < 2) parse_fail("chain tail needs at least two coefficients");
    return CarlitzForm::chain(parse_element(field, parts[0]), tail);
  }
  parse_fail("unrecognized form '" + std::string(text) + "' (expected lin:, chain:, fc: or gf:)");
}

std::string format_form(const CarlitzForm& form) {
  const auto c = form.coefficients();
  if (form.is_linear()) return "lin:" + std::to_string(c[0]) + "," + std::to_string(c[1]);
  return "chain:" + std::to_string(c[0]) + ";" + join(form.tail());
}

std::string format_full_cycle_form(const FullCycleForm& form) {
  return "fc:" + join(form.a_up()) + ";" + std::to_string(form.a_mid().index());
}

std::string format_general_form(const GeneralForm& form) {
  return "gf:" + std::to_string(form.c().index()) + ";" + join(form.a_list());
}

json form_to_json(const CarlitzForm& form) {
  const auto c = form.coefficients();
  if (form.is_linear()) return {{"v", kJsonVersion}, {"kind", "lin"}, {"c", c[0]}, {"d", c[1]}};
  return {{"v", kJsonVersion},
          {"kind", "chain"},
          {"a0", c[0]},
          {"tail", std::vector<Index>(c.begin() + 1, c.end())}};
}

CarlitzForm form_from_json(const FieldPtr& field, const json& doc) {
  check_version(doc);
  const std::string kind = doc.value("kind", "");
  auto element = [&](Index i) {
    if (i >= field->order()) parse_fail("coefficient " + std::to_string(i) + " out of range");
    return field->element(i);
  };
  if (kind == "lin") return CarlitzForm::linear(element(json_index(doc, "c")), element(json_index(doc, "d")));
  if (kind == "chain") {
    if (!doc.contains("tail") || !doc["tail"].is_array()) parse_fail("chain JSON needs a 'tail' array");
    std::vector<Element> tail;
    for (const auto& v : doc["tail"]) {
      if (!v.is_number_unsigned()) parse_fail("tail entries must be non-negative integers");
      tail.push_back(element(v.get<Index>()));
    }
    if (tail.size() < 2) parse_fail("chain tail needs at least two coefficients");
    return CarlitzForm::chain(element(json_index(doc, "a0")), tail);
  }
  parse_fail("form JSON 'kind' must be \"lin\" or \"chain\"");
}

json permutation_to_json(const Permutation& sigma) {
  return {{"v", kJsonVersion}, {"q", sigma.size()}, {"images", sigma.images()}};
}

Permutation permutation_from_json(const FieldPtr& field, const json& doc) {
  json images;
  if (doc.is_array()) {
    images = doc;
  } else {
    check_version(doc);
    if (doc.contains("q") && doc["q"] != field->order())
      parse_fail("permutation is over q=" + doc["q"].dump() + " but the field has q=" +
                 std::to_string(field->order()));
    if (!doc.contains("images") || !doc["images"].is_array())
      parse_fail("permutation JSON needs an 'images' array");
    images = doc["images"];
  }
  std::vector<Index> table;
  for (const auto& v : images) {
    if (!v.is_number_unsigned()) parse_fail("images must be non-negative integers");
    table.push_back(v.get<Index>());
  }
  return Permutation::from_images(field, std::move(table));
}

Permutation parse_permutation(const FieldPtr& field, std::string_view text) {
  return permutation_from_json(field, parse_json(text));
}

CycleType parse_cycle_type(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    parse_fail("cycle type must look like [2x2,1x1]");
  std::vector<CycleType::Term> terms;
  for (auto item : split(text.substr(1, text.size() - 2), ',')) {
    const auto x = item.find('x');
    if (x == std::string_view::npos) parse_fail("cycle type term '" + std::string(item) + "' lacks 'x'");
    const auto mult = parse_uint(item.substr(0, x), "multiplicity");
    const auto len = parse_uint(item.substr(x + 1), "cycle length");
    if (mult == 0 || len == 0) parse_fail("cycle type terms must be positive");
    terms.push_back({mult, len});
  }
  return CycleType(std::move(terms));
}

std::string format_indices(const std::vector<Index>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out + "]";
}

}  // namespace carlitz
