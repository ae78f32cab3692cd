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

#include "semiswitch/families.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "semiswitch/errors.hpp"

namespace semiswitch {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 4> kNames{{
    {FamilyKind::N2, "N2"},
    {FamilyKind::N3, "N3"},
    {FamilyKind::N4, "N4"},
    {FamilyKind::N4_COMMUTATIVE, "N4_COMMUTATIVE"},
}};

void require_degree(const FieldCtx& F, std::uint64_t n, const char* what) {
    if (F.n() != n) throw InvalidArgument(std::string(what) + " needs n = " + std::to_string(n));
}

std::int64_t exp_i(std::uint64_t e) { return static_cast<std::int64_t>(e); }

LinearizedPoly poly(const FieldPtr& field, std::initializer_list<std::pair<std::size_t, Elem>> terms) {
    std::vector<Elem> c(field->n());
    for (auto [i, a] : terms) c[i] = a;
    return LinearizedPoly(field, std::move(c));
}

}  // namespace

std::string_view family_name(FamilyKind kind) noexcept {
    for (auto [k, name] : kNames)
        if (k == kind) return name;
    return "?";
}

std::optional<FamilyKind> family_from_name(std::string_view name) noexcept {
    for (auto [k, n] : kNames)
        if (n == name) return k;
    return std::nullopt;
}

bool n2_criterion(const FieldCtx& F, Elem a1, Elem a0) {
    require_degree(F, 2, "n2_criterion");
    const Elem b = F.trace(a0);
    const Elem c = F.norm(a1);
    int roots = 0;
    for (Elem x : F.base_field_elements())
        if (F.add(F.mul(x, F.add(x, b)), c).is_zero()) ++roots;
    return roots == 2;
}

std::vector<Elem> n2_quadratic_roots(const FieldCtx& F, Elem a1, Elem a0) {
    require_degree(F, 2, "n2_quadratic_roots");
    const Elem b = F.trace(a0);
    const Elem c = F.frobenius(a1, 1);
    std::vector<Elem> out;
    for (std::uint64_t r = 0; r < F.size(); ++r) {
        const Elem y = F.element(r);
        const Elem value = F.add(F.mul(y, F.add(F.mul(a1, y), b)), c);
        if (value.is_zero()) out.push_back(y);
    }
    return out;
}

bool n2_quadratic_predicate(const FieldCtx& F, Elem a1, Elem a0) {
    for (Elem y : n2_quadratic_roots(F, a1, a0))
        if (!y.is_zero() && y.log() % (F.q() - 1) == 0) return false;
    return true;
}

FamilyInstance n2_instance(const FieldPtr& field, Elem a1, Elem a0) {
    require_degree(*field, 2, "n2_instance");
    auto L = poly(field, {{0, a0}, {1, a1}});
    auto spec = switch_from_poly(L);
    return {FamilyKind::N2, {a1, a0}, std::move(L), std::move(spec)};
}

std::vector<Elem> n3_theta_set(const FieldCtx& F, Elem u, Elem v) {
    require_degree(F, 3, "n3_theta_set");
    const Elem w = F.mul(F.frobenius(u, 2), F.frobenius(v, 1));
    const Elem target = F.add(F.norm(u), F.norm(v));
    std::vector<Elem> out;
    for (std::uint64_t r = 0; r < F.size(); ++r) {
        const Elem x = F.element(r);
        if (F.trace(F.mul(w, x)) == target) out.push_back(x);
    }
    return out;
}

FamilyInstance n3_construct(const FieldPtr& field, Elem u, Elem v, Elem theta, Elem a) {
    const FieldCtx& F = *field;
    require_degree(F, 3, "n3_construct");
    if (u.is_zero() || v.is_zero() || a.is_zero()) throw InvalidArgument("n3_construct: u, v, a must be nonzero");
    if (F.norm(F.neg(F.div(v, u))) == F.one()) throw InvalidArgument("n3_construct: N(-v/u) = 1");
    const Elem w = F.mul(F.frobenius(u, 2), F.frobenius(v, 1));
    if (F.trace(F.mul(w, theta)) != F.add(F.norm(u), F.norm(v)))
        throw InvalidArgument("n3_construct: theta is not in the admissible set");
    const std::uint64_t q = F.q();
    const Elem c2 = F.mul(w, F.mul(u, F.pow(a, exp_i(q * q - 1))));
    const Elem c1 = F.mul(w, F.mul(v, F.pow(a, exp_i(q - 1))));
    const Elem c0 = F.mul(w, theta);
    auto L = poly(field, {{0, c0}, {1, c1}, {2, c2}});
    if (auto x = predicate_witness(L)) {
        throw ConsistencyFault("n3_construct produced L with Tr(L(x)/x) = 0",
                               "{\"u\":" + std::to_string(u.log()) + ",\"v\":" + std::to_string(v.log()) +
                                   ",\"theta\":" + (theta.is_zero() ? "null" : std::to_string(theta.log())) +
                                   ",\"a\":" + std::to_string(a.log()) + ",\"x\":" + std::to_string(x->log()) + "}");
    }
    auto spec = switch_from_poly(L);
    return {FamilyKind::N3, {u, v, theta, a}, std::move(L), std::move(spec)};
}

std::optional<std::vector<Elem>> n3_match(const LinearizedPoly& L) {
    const FieldCtx& F = L.field();
    if (F.n() != 3) return std::nullopt;
    const Elem a0 = L.coeff(0), a1 = L.coeff(1), a2 = L.coeff(2);
    if (a1.is_zero() || a2.is_zero()) return std::nullopt;
    const std::uint64_t q = F.q();
    const std::uint64_t reps = F.group_order() / (q - 1);
    const Elem ratio = F.div(a1, a2);
    const Elem tr0 = F.trace(a0);
    for (std::uint64_t r = 1; r < F.size(); ++r) {
        const Elem u = F.element(r);
        const Elem uq2 = F.frobenius(u, 2);
        for (std::uint64_t k = 0; k < reps; ++k) {
            const Elem a = Elem::from_log(static_cast<std::uint32_t>(k));
            const Elem v = F.mul(ratio, F.mul(u, F.pow(a, exp_i(q * q - q))));
            const Elem w = F.mul(uq2, F.frobenius(v, 1));
            if (F.mul(w, F.mul(u, F.pow(a, exp_i(q * q - 1)))) != a2) continue;
            if (F.norm(F.neg(F.div(v, u))) == F.one()) continue;
            if (tr0 != F.add(F.norm(u), F.norm(v))) continue;
            return std::vector<Elem>{u, v, F.div(a0, w), a};
        }
    }
    return std::nullopt;
}

bool n4_criterion(const FieldCtx& F, Elem a1, Elem a0) {
    require_degree(F, 4, "n4_criterion");
    if (F.p() == 2) throw InvalidArgument("n4_criterion needs odd characteristic");
    if (a1.is_zero()) throw InvalidArgument("n4_criterion needs a_1 != 0; a_1 = 0 is the scalar case");
    const auto j = F.base_log(F.pow(a1, exp_i(F.q() * F.q() + 1)));
    return j && *j % 2 == 0 && F.trace(a0).is_zero();
}

FamilyInstance n4_instance(const FieldPtr& field, Elem a1, Elem a0) {
    require_degree(*field, 4, "n4_instance");
    auto L = poly(field, {{0, a0}, {2, a1}});
    auto spec = switch_from_poly(L);
    return {FamilyKind::N4, {a1, a0}, std::move(L), std::move(spec)};
}

FamilyInstance n4_commutative_instance(const FieldPtr& field, Elem a1, Elem a0_tilde) {
    const FieldCtx& F = *field;
    require_degree(F, 4, "n4_commutative_instance");
    if (F.p() == 2) throw InvalidArgument("n4_commutative_instance needs odd characteristic");
    if (F.trace(a0_tilde) != F.minus_one()) throw InvalidArgument("n4_commutative_instance needs Tr(a0_tilde) = -1");
    const Elem alpha = trace_one_element(F);
    if (a1.is_zero() || !n4_criterion(F, a1, F.add(a0_tilde, alpha)))
        throw InvalidArgument("n4_commutative_instance needs a_1^{q^2+1} to be a nonzero square in F_q");
    auto L = poly(field, {{0, F.add(a0_tilde, alpha)}, {2, a1}});
    std::vector<Elem> b(4);
    b[0] = a0_tilde;
    b[2] = a1;
    return {FamilyKind::N4_COMMUTATIVE, {a1, a0_tilde}, std::move(L), SwitchSpec{field, std::move(b), F.one()}};
}

BinaryOp n4_commutative_construct(const FieldPtr& field, Elem a1, Elem a0_tilde) {
    const auto inst = n4_commutative_instance(field, a1, a0_tilde);
    BinaryOp op = build_switch(inst.spec);
    const auto check = check_presemifield(op);
    if (!check.presemifield) {
        const auto [x, a] = *check.zero_divisor;
        throw ConsistencyFault("criterion-true commutative instance has a zero divisor",
                               "{\"a1\":" + std::to_string(a1.log()) + ",\"x\":" + std::to_string(x.log()) +
                                   ",\"a\":" + std::to_string(a.log()) + "}");
    }
    op.verified_presemifield = true;
    return op;
}

FamilyInstance n4_commutative_reference(const FieldPtr& field) {
    return n4_commutative_instance(field, field->one(), trace_minus_one_element(*field));
}

Classification classify(const LinearizedPoly& L, std::uint64_t cap) {
    const FieldCtx& F = L.field();
    Classification out;
    out.predicate = switching_predicate(L);
    out.monomial = L.is_scalar();
    out.spec = switch_from_poly(L, F.one());

    const auto support = L.support();
    auto within = [&](std::initializer_list<std::size_t> allowed) {
        for (auto i : support)
            if (std::find(allowed.begin(), allowed.end(), i) == allowed.end()) return false;
        return true;
    };
    if (out.predicate) {
        if (F.n() == 2 && n2_criterion(F, L.coeff(1), L.coeff(0))) out.families.push_back(FamilyKind::N2);
        if (F.n() == 3 && F.size() <= cap && n3_match(L)) out.families.push_back(FamilyKind::N3);
        if (F.n() == 4 && F.p() != 2 && within({0, 2}) && !L.coeff(2).is_zero() &&
            n4_criterion(F, L.coeff(2), L.coeff(0))) {
            out.families.push_back(FamilyKind::N4);
        }
    }

    BinaryOp op = build_switch(out.spec);
    out.commutative = is_commutative(op);
    if (F.size() > cap) return out;
    const auto check = check_presemifield(op);
    out.presemifield = check.presemifield;
    if (!check.presemifield) return out;
    op.verified_presemifield = true;
    out.ganley = ganley_bierbrauer_test(out.spec);
    BinaryOp unital = unitalize(op);
    unital.cache_table();
    out.nuclei = nuclei(unital);
    return out;
}

}  // namespace semiswitch
