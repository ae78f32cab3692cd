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
 * @file gf.hpp
 * @brief Table-driven arithmetic in the tower F_p ⊂ F_q ⊂ F_{q^n}, q = p^m.
 *
 * Every element of F_{q^n} is stored by its discrete logarithm with respect to a
 * fixed primitive element γ (Elem::raw() is 0 for zero and k+1 for γ^k), so
 * multiplication, inversion, powers and the q-Frobenius are integer arithmetic
 * modulo q^n-1. Addition goes through a Zech logarithm table. The coefficient
 * vector over F_p (the second half of the dual representation) is available
 * through FieldCtx::vector / vector_code and round-trips through the log tables.
 *
 * A FieldCtx is immutable after construction and may be shared between threads.
 */

#ifndef SEMISWITCH_GF_HPP
#define SEMISWITCH_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace semiswitch {

/// Default cap on p^{mn}; larger fields are refused instead of degrading.
inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 22;
/// Hard ceiling of the 32-bit table layout.
inline constexpr std::uint64_t kMaxFieldCap = std::uint64_t{1} << 31;

/// An element of F_{q^n} in discrete-log form. Ordering is γ-power order with zero first.
class Elem {
   public:
    constexpr Elem() noexcept = default;

    static constexpr Elem zero() noexcept { return Elem{}; }
    static constexpr Elem from_log(std::uint32_t k) noexcept { return from_raw(k + 1); }
    static constexpr Elem from_raw(std::uint32_t r) noexcept {
        Elem e;
        e.raw_ = r;
        return e;
    }

    constexpr bool is_zero() const noexcept { return raw_ == 0; }
    /// Discrete log; only meaningful for nonzero elements.
    constexpr std::uint32_t log() const noexcept { return raw_ - 1; }
    constexpr std::uint32_t raw() const noexcept { return raw_; }

    friend constexpr auto operator<=>(Elem, Elem) noexcept = default;

   private:
    std::uint32_t raw_ = 0;
};

/// The reproducibility record of a field: enough to rebuild the identical context.
struct FieldSpec {
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::vector<std::uint64_t> modulus;  ///< c_0..c_{mn}, monic
    std::uint64_t generator = 0;         ///< coefficient-vector code Σ c_i p^i of γ

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

class FieldCtx {
   public:
    /**
     * Builds F_{q^n}, q = p^m, as F_p[X]/(modulus).
     *
     * Without a modulus the smallest monic irreducible of degree mn is taken, with
     * polynomials ordered by the code Σ_{i<mn} c_i p^i. Without a generator the
     * primitive element with the smallest coefficient code is taken.
     */
    static FieldPtr build(std::uint64_t p, std::uint64_t m, std::uint64_t n,
                          std::optional<std::vector<std::uint64_t>> modulus = std::nullopt,
                          std::optional<std::uint64_t> generator = std::nullopt,
                          std::uint64_t cap = kDefaultFieldCap);
    static FieldPtr build(const FieldSpec& spec, std::uint64_t cap = kDefaultFieldCap);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t m() const noexcept { return m_; }
    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t q() const noexcept { return q_; }
    /// mn, the degree over the prime field.
    std::uint64_t degree() const noexcept { return m_ * n_; }
    /// q^n, the number of elements.
    std::uint64_t size() const noexcept { return size_; }
    /// q^n - 1, the order of the multiplicative group.
    std::uint64_t group_order() const noexcept { return size_ - 1; }

    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    std::uint64_t generator_code() const noexcept { return generator_code_; }
    FieldSpec spec() const { return {p_, m_, n_, modulus_, generator_code_}; }

    /// The element with raw encoding r (0 <= r < size()); iterating r enumerates the field.
    Elem element(std::uint64_t r) const noexcept { return Elem::from_raw(static_cast<std::uint32_t>(r)); }
    Elem one() const noexcept { return Elem::from_log(0); }
    Elem gamma() const noexcept { return Elem::from_log(size_ == 2 ? 0 : 1); }
    Elem minus_one() const noexcept { return minus_one_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::uint32_t d = b.log() >= a.log() ? b.log() - a.log() : b.log() + group_order_u32() - a.log();
        const std::uint32_t z = zech_[d];
        if (z == 0) return Elem::zero();
        return Elem::from_log(mod_order(std::uint64_t{a.log()} + (z - 1)));
    }
    Elem neg(Elem a) const noexcept { return mul(a, minus_one_); }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a.is_zero() || b.is_zero()) return Elem::zero();
        return Elem::from_log(mod_order(std::uint64_t{a.log()} + b.log()));
    }
    /// a / b; b must be nonzero.
    Elem div(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    /// a^e for any integer e; negative e requires a != 0. 0^0 = 1.
    Elem pow(Elem a, std::int64_t e) const;
    /// a^{q^k}; k is reduced mod n.
    Elem frobenius(Elem a, std::uint64_t k = 1) const noexcept {
        if (a.is_zero()) return a;
        return Elem::from_log(mulmod_order(a.log(), q_pow_mod_[k % n_]));
    }
    /// a^{p^k}; k is reduced mod mn.
    Elem frobenius_p(Elem a, std::uint64_t k = 1) const noexcept;
    /// a^e for a nonnegative exponent already reduced mod q^n - 1 (hot-path helper).
    Elem pow_reduced(Elem a, std::uint64_t e) const noexcept {
        if (a.is_zero()) return e == 0 ? one() : a;
        return Elem::from_log(mulmod_order(a.log(), e));
    }

    /// Tr_{q^n/q}(a), an element of F_q.
    Elem trace(Elem a) const noexcept { return Elem::from_raw(trace_[a.raw()]); }
    /// N_{q^n/q}(a) = a^{(q^n-1)/(q-1)}; N(0) = 0.
    Elem norm(Elem a) const noexcept {
        if (a.is_zero()) return a;
        return Elem::from_log(mulmod_order(a.log(), base_step_));
    }

    /// True iff a lies in F_{q^d}; d must divide n.
    bool in_subfield(Elem a, std::uint64_t d) const;
    bool in_base_field(Elem a) const noexcept {
        return a.is_zero() || a.log() % base_step_ == 0;
    }
    /// δ = γ^{(q^n-1)/(q-1)}, the primitive element of F_q used for its canonical enumeration.
    Elem base_primitive() const noexcept { return Elem::from_log(static_cast<std::uint32_t>(base_step_ % group_order())); }
    /// For a in F_q^*: the j with a = δ^j. Empty for zero or elements outside F_q.
    std::optional<std::uint64_t> base_log(Elem a) const noexcept;
    /// F_q in canonical order: 0, δ^0, δ^1, ..., δ^{q-2}.
    std::vector<Elem> base_field_elements() const;
    /// The constant c of F_p (c reduced mod p).
    Elem from_prime_field(std::uint64_t c) const;

    /// Coefficient vector over F_p (length mn, constant term first).
    std::vector<std::uint32_t> vector(Elem a) const;
    std::uint64_t vector_code(Elem a) const noexcept {
        return a.is_zero() ? 0 : exp_code_[a.log()];
    }
    /// Inverse of vector_code; throws for codes >= size().
    Elem from_code(std::uint64_t code) const;
    Elem from_vector(std::span<const std::uint32_t> digits) const;

    /// Polynomial basis {1, X, ..., X^{mn-1}} of F_{q^n} over F_p.
    std::span<const Elem> prime_basis() const noexcept { return prime_basis_; }
    /// {1, γ, ..., γ^{n-1}}, a basis of F_{q^n} over F_q.
    std::span<const Elem> base_basis() const noexcept { return base_basis_; }
    /// Rank over F_p of the given elements viewed as vectors.
    std::size_t prime_rank(std::span<const Elem> elems) const;

   private:
    FieldCtx() = default;
    void build_tables();

    std::uint32_t group_order_u32() const noexcept { return static_cast<std::uint32_t>(size_ - 1); }
    std::uint32_t mod_order(std::uint64_t v) const noexcept {
        const std::uint64_t n = size_ - 1;
        return static_cast<std::uint32_t>(v >= n ? v - n : v);
    }
    std::uint32_t mulmod_order(std::uint64_t a, std::uint64_t b) const noexcept {
        return static_cast<std::uint32_t>((a * b) % (size_ - 1));
    }

    std::uint64_t p_ = 0, m_ = 0, n_ = 0, q_ = 0, size_ = 0;
    std::uint64_t base_step_ = 1;  // (q^n-1)/(q-1)
    std::vector<std::uint64_t> modulus_;
    std::uint64_t generator_code_ = 0;
    Elem minus_one_;

    std::vector<std::uint64_t> q_pow_mod_;   // q^k mod (q^n-1), k < n
    std::vector<std::uint64_t> p_pow_mod_;   // p^k mod (q^n-1), k < mn
    std::vector<std::uint64_t> digit_place_; // p^i, i <= mn
    std::vector<std::uint32_t> exp_code_;    // γ^k -> vector code
    std::vector<std::uint32_t> log_raw_;     // vector code -> raw
    std::vector<std::uint32_t> zech_;        // k -> raw(1 + γ^k)
    std::vector<std::uint32_t> trace_;       // raw -> raw(Tr)
    std::vector<Elem> prime_basis_;
    std::vector<Elem> base_basis_;
};

/// Convenience wrapper for FieldCtx::build.
inline FieldPtr field_build(std::uint64_t p, std::uint64_t m, std::uint64_t n,
                            std::optional<std::vector<std::uint64_t>> modulus = std::nullopt,
                            std::uint64_t cap = kDefaultFieldCap) {
    return FieldCtx::build(p, m, n, std::move(modulus), std::nullopt, cap);
}

namespace gf {

bool is_prime(std::uint64_t v) noexcept;
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);
/// Rabin's irreducibility test over F_p; coeffs are c_0..c_d with c_d != 0.
bool is_irreducible(std::span<const std::uint64_t> coeffs, std::uint64_t p);
/// The first monic irreducible of degree d in code order.
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, std::uint64_t d);
/// p^e, or nullopt on overflow past `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint64_t e, std::uint64_t limit);

}  // namespace gf

}  // namespace semiswitch

#endif
