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
 * @file families.hpp
 * @brief Explicit switchings for n = 2, 3, 4 and a classifier for arbitrary L.
 *
 * Naming follows the shape of L: "a_1" is always the coefficient of the one
 * non-linear monomial (X^q for n = 2, X^{q^2} for n = 4), "a_0" the coefficient of X.
 */

#ifndef SEMISWITCH_FAMILIES_HPP
#define SEMISWITCH_FAMILIES_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "semiswitch/gf.hpp"
#include "semiswitch/linpoly.hpp"
#include "semiswitch/presemifield.hpp"

namespace semiswitch {

enum class FamilyKind { N2, N3, N4, N4_COMMUTATIVE };

std::string_view family_name(FamilyKind kind) noexcept;
std::optional<FamilyKind> family_from_name(std::string_view name) noexcept;

struct FamilyInstance {
    FamilyKind kind;
    /// (a_1, a_0) for N2/N4, (u, v, θ, a) for N3, (a_1, ã_0) for N4_COMMUTATIVE.
    std::vector<Elem> params;
    LinearizedPoly L;
    SwitchSpec spec;
};

/// X^2 + Tr(a_0)X + a_1^{q+1} has two distinct roots in F_q (root scan over F_q). n = 2.
bool n2_criterion(const FieldCtx& field, Elem a1, Elem a0);
/// All y in F_{q^2} with a_1 y^2 + Tr(a_0) y + a_1^q = 0, by scan.
std::vector<Elem> n2_quadratic_roots(const FieldCtx& field, Elem a1, Elem a0);
/// The predicate for a_1X^q + a_0X read off the roots: it fails iff some root is a (q-1)-th power of a nonzero element.
bool n2_quadratic_predicate(const FieldCtx& field, Elem a1, Elem a0);
FamilyInstance n2_instance(const FieldPtr& field, Elem a1, Elem a0);

/// {x : Tr(u^{q^2} v^q x) = N(u) + N(v)} in γ-power order (zero first). n = 3.
std::vector<Elem> n3_theta_set(const FieldCtx& field, Elem u, Elem v);
/// L = u^{q^2}v^q(u a^{q^2-1}X^{q^2} + v a^{q-1}X^q + θX). Throws on violated preconditions,
/// ConsistencyFault if the result fails the predicate.
FamilyInstance n3_construct(const FieldPtr& field, Elem u, Elem v, Elem theta, Elem a);

/// a_1^{q^2+1} is a square in F_q^* and Tr(a_0) = 0. Requires n = 4, p odd, a_1 != 0.
bool n4_criterion(const FieldCtx& field, Elem a1, Elem a0);
FamilyInstance n4_instance(const FieldPtr& field, Elem a1, Elem a0);

/// b_0 = ã_0, b_2 = a_1, ξ = 1, i.e. x*y = xy + Tr(a_1 x y^{q^2} + ã_0 x y). Preconditions checked.
FamilyInstance n4_commutative_instance(const FieldPtr& field, Elem a1, Elem a0_tilde);
/// The operation of n4_commutative_instance, verified to be a presemifield.
BinaryOp n4_commutative_construct(const FieldPtr& field, Elem a1, Elem a0_tilde);

/// The documented q = 3 instance: a_1 = 1 and ã_0 the first element of trace -1.
FamilyInstance n4_commutative_reference(const FieldPtr& field);

/// Parameters (u, v, θ, a) reproducing L, found by scanning u and a (v is then forced).
std::optional<std::vector<Elem>> n3_match(const LinearizedPoly& L);

inline constexpr std::uint64_t kClassifyCap = std::uint64_t{1} << 12;

struct Classification {
    bool predicate = false;
    bool monomial = false;
    std::vector<FamilyKind> families;
    SwitchSpec spec;
    bool commutative = false;
    /// Heavy checks, skipped above kClassifyCap elements.
    std::optional<bool> presemifield;
    std::optional<GanleyResult> ganley;
    std::optional<Nuclei> nuclei;
};

/// Reports on L through the switching with ξ = 1 (b = L - αX).
Classification classify(const LinearizedPoly& L, std::uint64_t cap = kClassifyCap);

}  // namespace semiswitch

#endif
