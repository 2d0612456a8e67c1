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

#ifndef CARLITZ_IO_HPP_
#define CARLITZ_IO_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "carlitz/field.hpp"
#include "carlitz/form.hpp"
#include "carlitz/full_cycle.hpp"
#include "carlitz/permutation.hpp"
#include "json.hpp"

// Text and JSON formats. Elements are written as their integer index.
//
//   field:        p=7 | p=3,r=2 | p=3,r=2,mod=[1,0,1]
//   form:         lin:c,d | chain:a0;a1,...,a(n+1)
//   full cycle:   fc:a1,...,an;amid
//   general form: gf:c;a1,...,a(n+1)
//   cycle type:   [1x1,2x2]
//
// JSON documents carry "v": 1. All parse failures throw Error(kParse).
namespace carlitz {

inline constexpr int kJsonVersion = 1;

FieldPtr parse_field_spec(std::string_view text, std::uint64_t max_q = kDefaultMaxQ);
std::string format_field_spec(const Field& field);

Element parse_element(const FieldPtr& field, std::string_view text);
std::vector<Element> parse_element_list(const FieldPtr& field, std::string_view text);

// Any of the lin/chain/fc/gf forms, expanded to a Carlitz form.
CarlitzForm parse_form(const FieldPtr& field, std::string_view text);
FullCycleForm parse_full_cycle_form(const FieldPtr& field, std::string_view text);
GeneralForm parse_general_form(const FieldPtr& field, std::string_view text);

std::string format_form(const CarlitzForm& form);
std::string format_full_cycle_form(const FullCycleForm& form);
std::string format_general_form(const GeneralForm& form);

nlohmann::json form_to_json(const CarlitzForm& form);
CarlitzForm form_from_json(const FieldPtr& field, const nlohmann::json& doc);

nlohmann::json permutation_to_json(const Permutation& sigma);
Permutation permutation_from_json(const FieldPtr& field, const nlohmann::json& doc);
// Accepts the JSON object or a bare image array.
Permutation parse_permutation(const FieldPtr& field, std::string_view text);

CycleType parse_cycle_type(std::string_view text);

std::string format_indices(const std::vector<Index>& values);

}  // namespace carlitz

#endif  // CARLITZ_IO_HPP_
