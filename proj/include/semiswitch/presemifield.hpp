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
 * @file presemifield.hpp
 * @brief Switched multiplications x*y = xy + B(x,y)ξ and the (pre)semifield checks run on them.
 *
 * Every operation handled here is biadditive, and those built from a switching
 * are F_q-bilinear. The axiom, nucleus, commutativity and isotopy checks use
 * that: identities in x and y are only tested on a basis (over F_q when the op
 * is F_q-bilinear, over F_p otherwise), while quantifiers over a single
 * distinguished element stay exhaustive.
 */

#ifndef SEMISWITCH_PRESEMIFIELD_HPP
#define SEMISWITCH_PRESEMIFIELD_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "semiswitch/gf.hpp"
#include "semiswitch/linpoly.hpp"

namespace semiswitch {

/// b_0..b_{n-1} and ξ defining B(x,y) = Tr(Σ b_i x y^{q^i}) and x*y = xy + B(x,y)ξ.
struct SwitchSpec {
    FieldPtr field;
    std::vector<Elem> b;
    Elem xi;
};

/// The first element in γ-power order with trace 1.
Elem trace_one_element(const FieldCtx& field);
/// The first element in γ-power order with trace -1.
Elem trace_minus_one_element(const FieldCtx& field);

/// M(X) = ξ Σ b_i X^{q^i}.
LinearizedPoly switch_polynomial(const SwitchSpec& spec);
/// L(X) = M(X) + αX with α = trace_one_element; the switch is a presemifield iff L satisfies the predicate.
LinearizedPoly predicate_polynomial(const SwitchSpec& spec);
/// The inverse direction: b = (L - αX)/ξ, so predicate_polynomial(switch_from_poly(L, ξ)) == L.
SwitchSpec switch_from_poly(const LinearizedPoly& L, std::optional<Elem> xi = std::nullopt);

inline constexpr std::uint64_t kDefaultTableBudget = std::uint64_t{1} << 24;

/// A total binary operation on F_{q^n}, closed form or table backed.
class BinaryOp {
   public:
    using Fn = std::function<Elem(Elem, Elem)>;

    BinaryOp(FieldPtr field, Fn fn, bool base_bilinear);

    Elem operator()(Elem x, Elem y) const {
        if (table_) return (*table_)[std::uint64_t{x.raw()} * field_->size() + y.raw()];
        return fn_(x, y);
    }

    const FieldCtx& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    /// True when the op is F_q-bilinear (not just biadditive).
    bool base_bilinear() const noexcept { return base_bilinear_; }
    /// The basis the bilinear reductions run over.
    std::span<const Elem> basis() const noexcept {
        return base_bilinear_ ? field_->base_basis() : field_->prime_basis();
    }

    /// Materializes the full q^{2n} table if it fits the budget; returns whether a table is in place.
    bool cache_table(std::uint64_t budget = kDefaultTableBudget);
    bool has_table() const noexcept { return table_ != nullptr; }

    /// Set once a presemifield check has run (by check_presemifield's callers or unitalize).
    std::optional<bool> verified_presemifield;
    bool unital = false;

   private:
    FieldPtr field_;
    Fn fn_;
    bool base_bilinear_;
    std::shared_ptr<const std::vector<Elem>> table_;
};

BinaryOp field_multiplication(const FieldPtr& field);

/// x*y = xy + Tr(Σ b_i x y^{q^i})ξ. Throws if ξ = 0 or b has the wrong length.
BinaryOp build_switch(const SwitchSpec& spec);

struct PresemifieldCheck {
    bool presemifield = false;
    /// A nonzero pair (x, a) with x*a = 0 or a*x = 0 (first a in γ-power order).
    std::optional<std::pair<Elem, Elem>> zero_divisor;
};

/// Left and right multiplication by every a != 0 must be bijective (trivial kernel via F_p rank).
PresemifieldCheck check_presemifield(const BinaryOp& op);
bool verify_presemifield(const BinaryOp& op);

/// ∀ a != 0: Tr(M(a)/a) != -1.
bool switch_condition(const SwitchSpec& spec);
/// verify_presemifield(build_switch(spec)) == switch_condition(spec); expected always true.
bool predicate_equivalence_check(const SwitchSpec& spec);

/// Bierbrauer's unital isotope x⋆y = B^{-1}(B_1(x)*y) with B(x) = 1*x and B_1(x)*1 = 1*x.
BinaryOp unitalize(const BinaryOp& op);

struct Nuclei {
    std::uint64_t left = 0, middle = 0, right = 0, center = 0;
    friend bool operator==(const Nuclei&, const Nuclei&) = default;
};

struct NucleusMembers {
    std::vector<Elem> left, middle, right, center;
};

/// Nucleus members of a unital op; throws InvalidArgument if 1 is not a two-sided identity.
NucleusMembers nucleus_members(const BinaryOp& op);
/// Cardinalities; each is checked to be a power of p dividing q^n.
Nuclei nuclei(const BinaryOp& op);

bool is_commutative(const BinaryOp& op);
/// B(y,x) = Tr(Σ b_{n-i}^{q^i} x y^{q^i}), so the switch is commutative iff b_i = b_{n-i}^{q^i} for 1 <= i < n.
/// The subfield condition b_i in F_{q^{gcd(i,n)}} is this condition only when b_i = b_{n-i}.
bool commutative_criterion(const SwitchSpec& spec);

/// The closed form A(x) = x + Tr(s x)ξ, s = -t/(1 + Tr(tξ)), t = Σ b_i, solving A(x)*1 = x.
class UnitalMap {
   public:
    explicit UnitalMap(const SwitchSpec& spec);
    Elem operator()(Elem x) const;

   private:
    FieldPtr field_;
    Elem s_, xi_;
};

UnitalMap unital_A(const SwitchSpec& spec);

struct GanleyResult {
    bool isotopic_to_commutative = false;
    std::optional<Elem> witness;
};

/// Scans v != 0 in γ-power order for A(v*x)*y = A(v*y)*x on all basis pairs; A inverts u -> u*1 by table.
GanleyResult ganley_bierbrauer_test(const BinaryOp& op);
/// Same scan with the closed-form A of a switching.
GanleyResult ganley_bierbrauer_test(const SwitchSpec& spec);
/// Whether v is a witness for the switching (no scan).
bool ganley_witness(const SwitchSpec& spec, Elem v);

/// x∘y = xy + (a_1 y^{q^2} + ã_0 y) Tr(x); n must be 4.
BinaryOp dual_spread_op(const FieldPtr& field, Elem a1, Elem a0_tilde);

}  // namespace semiswitch

#endif
