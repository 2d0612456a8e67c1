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

#include "doctest.h"
#include "test_util.hpp"

namespace carlitz {
namespace {

Errc error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kInternal;
}

TEST_CASE("field specs") {
  const auto F7 = parse_field_spec("p=7");
  CHECK(F7->order() == 7);
  CHECK(format_field_spec(*F7) == "p=7");
  const auto F9 = parse_field_spec("p=3,r=2,mod=[1,0,1]");
  CHECK(F9->order() == 9);
  CHECK(format_field_spec(*F9) == "p=3,r=2,mod=[1,0,1]");
  CHECK(format_field_spec(*parse_field_spec(" p = 2 , r = 3 ")) == "p=2,r=3,mod=[1,1,0,1]");
  CHECK(parse_field_spec(format_field_spec(*F9))->same_as(*F9));

  CHECK(error_of([] { parse_field_spec("q=7"); }) == Errc::kParse);
  CHECK(error_of([] { parse_field_spec("p=x"); }) == Errc::kParse);
  CHECK(error_of([] { parse_field_spec("r=2"); }) == Errc::kParse);
  CHECK(error_of([] { parse_field_spec("p=3,r=2,mod=1,0,1"); }) == Errc::kParse);
  CHECK(error_of([] { parse_field_spec("p=9"); }) == Errc::kInvalidField);
  CHECK(error_of([] { parse_field_spec("p=2,r=2,mod=[1,0,1]"); }) == Errc::kInvalidField);
  CHECK(error_of([] { parse_field_spec("p=101", 100); }) == Errc::kInvalidField);
}

TEST_CASE("form text") {
  const auto F5 = parse_field_spec("p=5");
  CHECK(parse_form(F5, "chain:2;1,3") == CarlitzForm::chain(F5, {2, 1, 3}));
  CHECK(parse_form(F5, "lin:3, 4") == CarlitzForm::linear(F5, 3, 4));
  CHECK(parse_form(F5, "fc:0;1") == CarlitzForm::chain(F5, {1, 0, 1, 0}));
  CHECK(parse_form(F5, "fc:;2") == CarlitzForm::linear(F5, 1, 2));
  CHECK(parse_form(F5, "gf:4;0,1") == CarlitzForm::chain(F5, {4, 0, 1, 0}));
  CHECK(parse_form(F5, R"({"kind":"chain","a0":2,"tail":[1,3]})") == CarlitzForm::chain(F5, {2, 1, 3}));
  CHECK(format_form(CarlitzForm::chain(F5, {2, 4, 2})) == "chain:2;4,2");
  CHECK(format_form(CarlitzForm::linear(F5, 1, 0)) == "lin:1,0");
  CHECK(format_full_cycle_form(parse_full_cycle_form(F5, "fc:3,0;2")) == "fc:3,0;2");
  CHECK(format_full_cycle_form(parse_full_cycle_form(F5, "fc:;2")) == "fc:;2");
  CHECK(format_general_form(parse_general_form(F5, "gf:2;1,0,4")) == "gf:2;1,0,4");

  CHECK(error_of([&] { parse_form(F5, "chain:2;1"); }) == Errc::kParse);
  CHECK(error_of([&] { parse_form(F5, "chain:0;1,2"); }) == Errc::kInvalidCoefficient);
  CHECK(error_of([&] { parse_form(F5, "lin:1,5"); }) == Errc::kParse);
  CHECK(error_of([&] { parse_form(F5, "lin:1"); }) == Errc::kParse);
  CHECK(error_of([&] { parse_form(F5, "poly:1,2"); }) == Errc::kParse);
  CHECK(error_of([&] { parse_form(F5, "fc:1;0"); }) == Errc::kInvalidCoefficient);
  CHECK(error_of([&] { parse_form(F5, R"({"kind":"lin","c":1})"); }) == Errc::kParse);
  CHECK(error_of([&] { parse_form(F5, R"({"v":2,"kind":"lin","c":1,"d":0})"); }) == Errc::kParse);
}

TEST_CASE("text and JSON forms round trip") {
  for (const auto& F : {Field::make(5), Field::make(3, 2), Field::make(2, 4)}) {
    for (int i = 0; i < 50; ++i) {
      const auto f = testing::random_form(F, 6);
      CHECK(parse_form(F, format_form(f)) == f);
      CHECK(form_from_json(F, form_to_json(f)) == f);
      CHECK(parse_form(F, form_to_json(f).dump()) == f);
    }
  }
  CHECK(form_to_json(CarlitzForm::chain(Field::make(5), {2, 1, 3})).dump() ==
        R"({"a0":2,"kind":"chain","tail":[1,3],"v":1})");
}

TEST_CASE("permutation JSON") {
  const auto F5 = Field::make(5);
  const auto s = parse_permutation(F5, R"({"q":5,"images":[1,3,4,2,0]})");
  CHECK(s.images() == std::vector<Index>{1, 3, 4, 2, 0});
  CHECK(parse_permutation(F5, "[1,3,4,2,0]") == s);
  CHECK(permutation_to_json(s).dump() == R"({"images":[1,3,4,2,0],"q":5,"v":1})");
  CHECK(permutation_from_json(F5, permutation_to_json(s)) == s);
  CHECK(error_of([&] { parse_permutation(F5, R"({"q":7,"images":[0,1,2,3,4,5,6]})"); }) == Errc::kParse);
  CHECK(error_of([&] { parse_permutation(F5, R"({"q":5,"images":[0,0,1,2,3]})"); }) == Errc::kNotPermutation);
  CHECK(error_of([&] { parse_permutation(F5, R"({"q":5)"); }) == Errc::kParse);
}

TEST_CASE("cycle type text") {
  CHECK(parse_cycle_type("[1x5]") == CycleType({{1, 5}}));
  CHECK(parse_cycle_type("[2x2,1x1]") == CycleType({{1, 1}, {2, 2}}));
  CHECK(parse_cycle_type("[2x2,1x1]").to_string() == "[1x1,2x2]");
  CHECK(parse_cycle_type(" [3x3] ").points() == 9);
  CHECK(error_of([] { parse_cycle_type("1x5"); }) == Errc::kParse);
  CHECK(error_of([] { parse_cycle_type("[0x5]"); }) == Errc::kParse);
}

}  // namespace
}  // namespace carlitz
