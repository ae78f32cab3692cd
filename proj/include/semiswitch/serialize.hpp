/*
   Copyright 2026 The semiswitch Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file serialize.hpp
 * @brief JSON forms of fields, elements, polynomials and reports.
 *
 * Elements are written as their discrete log with respect to the recorded
 * generator, and zero as null. Key order is fixed so output is byte-stable.
 */

#ifndef SEMISWITCH_SERIALIZE_HPP
#define SEMISWITCH_SERIALIZE_HPP

#include <json.hpp>

#include "semiswitch/codes.hpp"
#include "semiswitch/digits.hpp"
#include "semiswitch/families.hpp"
#include "semiswitch/gf.hpp"
#include "semiswitch/hws.hpp"
#include "semiswitch/linpoly.hpp"
#include "semiswitch/presemifield.hpp"

namespace semiswitch {

using Json = nlohmann::ordered_json;

/// {p, m, n, modulus:[c_0..c_{mn}], generator_index}; generator_index is the F_p-vector code of γ.
Json field_to_json(const FieldCtx& field);
FieldPtr field_from_json(const Json& j, std::uint64_t cap = kDefaultFieldCap);

Json elem_to_json(Elem e);
/// Accepts null or a log in [0, q^n - 2].
Elem elem_from_json(const FieldCtx& field, const Json& j);

Json elems_to_json(std::span<const Elem> elems);
std::vector<Elem> elems_from_json(const FieldCtx& field, const Json& j);

Json poly_to_json(const LinearizedPoly& L);
LinearizedPoly poly_from_json(const FieldPtr& field, const Json& j);

/// {b:[...], xi}; the field is recorded separately.
Json spec_to_json(const SwitchSpec& spec);
SwitchSpec spec_from_json(const FieldPtr& field, const Json& j);

Json nuclei_to_json(const Nuclei& nuclei);
Json ganley_to_json(const GanleyResult& g);
Json classification_to_json(const Classification& c);
Json hws_to_json(const HwsReport& r);
Json coefficient_identity_to_json(const CoefficientIdentityResult& r);
Json monomial_report_to_json(const MonomialReport& r);
Json full_weight_to_json(const FullWeightSummary& s);
Json family_to_json(const FamilyInstance& inst);

}  // namespace semiswitch

#endif
