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

#include "semiswitch/serialize.hpp"

#include <string>

#include "semiswitch/errors.hpp"

namespace semiswitch {

namespace {

std::uint64_t get_u64(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_unsigned())
        throw InvalidArgument(std::string("expected a nonnegative integer \"") + key + "\"");
    return j.at(key).get<std::uint64_t>();
}

}  // namespace

Json field_to_json(const FieldCtx& F) {
    Json j;
    j["p"] = F.p();
    j["m"] = F.m();
    j["n"] = F.n();
    j["modulus"] = F.modulus();
    j["generator_index"] = F.generator_code();
    return j;
}

FieldPtr field_from_json(const Json& j, std::uint64_t cap) {
    if (!j.is_object()) throw InvalidArgument("field must be a JSON object");
    FieldSpec spec;
    spec.p = get_u64(j, "p");
    spec.m = j.contains("m") ? get_u64(j, "m") : 1;
    spec.n = get_u64(j, "n");
    std::optional<std::vector<std::uint64_t>> modulus;
    std::optional<std::uint64_t> generator;
    try {
        if (j.contains("modulus") && !j.at("modulus").is_null())
            modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
    } catch (const nlohmann::json::exception&) {
        throw InvalidArgument("modulus must be a list of nonnegative integers");
    }
    if (j.contains("generator_index") && !j.at("generator_index").is_null()) generator = get_u64(j, "generator_index");
    return FieldCtx::build(spec.p, spec.m, spec.n, std::move(modulus), generator, cap);
}

Json elem_to_json(Elem e) { return e.is_zero() ? Json(nullptr) : Json(e.log()); }

Elem elem_from_json(const FieldCtx& F, const Json& j) {
    if (j.is_null()) return Elem::zero();
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0))
        throw InvalidArgument("element must be null or a nonnegative discrete log");
    const auto k = j.get<std::uint64_t>();
    if (k >= F.group_order()) throw InvalidArgument("discrete log " + std::to_string(k) + " out of range");
    return Elem::from_log(static_cast<std::uint32_t>(k));
}

Json elems_to_json(std::span<const Elem> elems) {
    Json a = Json::array();
    for (Elem e : elems) a.push_back(elem_to_json(e));
    return a;
}

std::vector<Elem> elems_from_json(const FieldCtx& F, const Json& j) {
    if (!j.is_array()) throw InvalidArgument("expected a list of elements");
    std::vector<Elem> out;
    for (const auto& x : j) out.push_back(elem_from_json(F, x));
    return out;
}

Json poly_to_json(const LinearizedPoly& L) { return elems_to_json(L.coeffs()); }

LinearizedPoly poly_from_json(const FieldPtr& field, const Json& j) {
    return LinearizedPoly(field, elems_from_json(*field, j));
}

Json spec_to_json(const SwitchSpec& spec) {
    Json j;
    j["b"] = elems_to_json(spec.b);
    j["xi"] = elem_to_json(spec.xi);
    return j;
}

SwitchSpec spec_from_json(const FieldPtr& field, const Json& j) {
    if (!j.is_object() || !j.contains("b") || !j.contains("xi")) throw InvalidArgument("spec needs \"b\" and \"xi\"");
    SwitchSpec spec{field, elems_from_json(*field, j.at("b")), elem_from_json(*field, j.at("xi"))};
    if (spec.b.size() != field->n()) throw InvalidArgument("spec needs exactly n coefficients b_i");
    if (spec.xi.is_zero()) throw InvalidArgument("spec needs xi != 0");
    return spec;
}

Json nuclei_to_json(const Nuclei& nu) { return Json::array({nu.left, nu.middle, nu.right, nu.center}); }

Json ganley_to_json(const GanleyResult& g) {
    Json j;
    j["isotopic_to_commutative"] = g.isotopic_to_commutative;
    j["witness"] = g.witness ? elem_to_json(*g.witness) : Json(nullptr);
    return j;
}

Json classification_to_json(const Classification& c) {
    Json j;
    j["predicate"] = c.predicate;
    j["monomial"] = c.monomial;
    Json fam = Json::array();
    for (auto k : c.families) fam.push_back(std::string(family_name(k)));
    j["families"] = fam;
    j["spec"] = spec_to_json(c.spec);
    j["commutative"] = c.commutative;
    j["presemifield"] = c.presemifield ? Json(*c.presemifield) : Json(nullptr);
    j["ganley"] = c.ganley ? ganley_to_json(*c.ganley) : Json(nullptr);
    j["nuclei"] = c.nuclei ? nuclei_to_json(*c.nuclei) : Json(nullptr);
    return j;
}

Json hws_to_json(const HwsReport& r) {
    Json j;
    j["ell"] = r.ell;
    j["argmin_j"] = r.argmin_j;
    j["genus"] = r.genus;
    j["serre"] = r.serre;
    j["lower_bound"] = r.lower_bound;
    j["trace_zero"] = r.trace_zero;
    j["triggered_nonzero_trace"] = r.triggered_nonzero_trace;
    j["triggered_zero_trace"] = r.triggered_zero_trace;
    j["triggered"] = r.triggered();
    j["thresholds"] = Json::array({r.thresholds.case_nonzero_trace, r.thresholds.case_zero_trace});
    j["points"] = r.points;
    return j;
}

Json coefficient_identity_to_json(const CoefficientIdentityResult& r) {
    Json j;
    j["holds"] = r.holds;
    j["instances"] = r.instances;
    if (r.witness) {
        Json w;
        w["i"] = r.witness->i;
        w["t"] = r.witness->t;
        w["sum"] = elem_to_json(r.witness_sum);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json monomial_report_to_json(const MonomialReport& r) {
    Json j;
    j["p"] = r.p;
    j["n"] = r.n;
    j["bound"] = r.bound;
    j["bound_applies"] = r.bound_applies;
    j["exhaustive"] = r.exhaustive;
    if (!r.exhaustive) j["seed"] = r.seed;
    j["candidates"] = r.candidates;
    j["solutions"] = r.solutions;
    j["all_monomial"] = r.all_monomial;
    Json w = Json::array();
    for (const auto& L : r.witnesses) w.push_back(poly_to_json(L));
    j["witnesses"] = w;
    return j;
}

Json full_weight_to_json(const FullWeightSummary& s) {
    Json j;
    j["exhaustive"] = s.exhaustive;
    if (!s.exhaustive) j["seed"] = s.seed;
    j["total"] = s.total;
    j["full_weight_constant"] = s.full_weight_constant;
    j["full_weight_nonconstant"] = s.full_weight_nonconstant;
    Json w = Json::array();
    for (const auto& a : s.witnesses) w.push_back(elems_to_json(a));
    j["witnesses"] = w;
    return j;
}

Json family_to_json(const FamilyInstance& inst) {
    Json j;
    j["family"] = std::string(family_name(inst.kind));
    j["params"] = elems_to_json(inst.params);
    j["L"] = poly_to_json(inst.L);
    j["spec"] = spec_to_json(inst.spec);
    return j;
}

}  // namespace semiswitch
