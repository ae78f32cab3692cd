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
 * @file digits.hpp
 * @brief Base-q digit combinatorics behind the (q-1)-th power expansion of Tr(L(x)/x).
 *
 * Ω = {0..q^n-1}, Ω₀ = {0..M} with M = (q^n-1)/(q-1). Exponents of the expanded
 * power are reduced modulo X^{q^n} - X, which keeps 0 and q^n - 1 apart.
 */

#ifndef SEMISWITCH_DIGITS_HPP
#define SEMISWITCH_DIGITS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "semiswitch/gf.hpp"
#include "semiswitch/linpoly.hpp"

namespace semiswitch {

using DigitVector = std::vector<std::uint64_t>;

/// ψ: the n base-q digits of value, least significant first.
DigitVector to_digits(std::uint64_t value, std::uint64_t q, std::uint64_t n);
/// (d_0, ..., d_{n-1})_q = Σ d_i q^i.
std::uint64_t from_digits(const DigitVector& digits, std::uint64_t q);

/// M = (q^n - 1)/(q - 1), the top of Ω₀.
std::uint64_t omega0_top(std::uint64_t q, std::uint64_t n);

/// α ⊕ β on Ω₀: 0 only for 0 ⊕ 0, M for any other sum ≡ 0 (mod M).
std::uint64_t oplus(std::uint64_t alpha, std::uint64_t beta, std::uint64_t q, std::uint64_t n);

/// i ones starting at digit j, wrapping modulo n; i = 0 gives the zero vector.
DigitVector s_digits(std::uint64_t j, std::uint64_t i, std::uint64_t n);
std::uint64_t s_value(std::uint64_t j, std::uint64_t i, std::uint64_t q, std::uint64_t n);

struct AscDes {
    std::vector<std::size_t> asc;  ///< ascending positions with multiplicity, sorted
    std::vector<std::size_t> des;
    std::size_t count = 0;         ///< |Asc| = |Des|
};

/// Positions i (mod n) with d_i > d_{i-1} (Asc) or d_i < d_{i-1} (Des), repeated |d_i - d_{i-1}| times.
AscDes asc_des(const DigitVector& digits);

inline constexpr std::uint64_t kDefaultTupleBudget = std::uint64_t{1} << 24;

/// C(α): Σ a_{i_1}^{q^{j_1}} ⋯ a_{i_{q-1}}^{q^{j_{q-1}}} over ordered tuples with
/// s(j_1,i_1) ⊕ ⋯ ⊕ s(j_{q-1},i_{q-1}) = α. Throws BudgetExceeded past (n^2)^{q-1} > budget.
Elem c_alpha(const LinearizedPoly& L, std::uint64_t alpha, std::uint64_t budget = kDefaultTupleBudget);
/// C(α) for every α in Ω₀ from one pass over the tuples.
std::vector<Elem> c_alpha_all(const LinearizedPoly& L, std::uint64_t budget = kDefaultTupleBudget);

/// Coefficients (indexed by exponent 0..q^n-1) of [Σ_{i,j} a_i^{q^j} X^{q^j(q^i-1)}]^{q-1}
/// reduced mod X^{q^n} - X: a nonzero exponent e becomes 1 + ((e-1) mod (q^n-1)).
std::vector<Elem> expansion_oracle(const LinearizedPoly& L);

struct CongruenceCheck {
    bool holds = false;
    std::optional<std::uint64_t> offending_exponent;
};

/// Compares expansion_oracle with Tr(a_0)^{q-1} + [1 - Tr(a_0)^{q-1}] X^{q^n-1}.
CongruenceCheck expansion_congruence(const LinearizedPoly& L);

struct CoefficientIdentityInstance {
    std::vector<std::size_t> i;  ///< 1 <= i_1 < ... < i_{p-1}
    std::vector<std::size_t> t;  ///< t_1 >= ... >= t_{p-2} >= 0
};

struct CoefficientIdentityResult {
    bool holds = true;
    std::uint64_t instances = 0;
    std::optional<CoefficientIdentityInstance> witness;
    Elem witness_sum;
};

/**
 * Checks, for q = p prime and predicate-true L, that every admissible
 * (i_1 < ... < i_{p-1}, t_1 >= ... >= t_{p-2} >= 0, i_{p-1} + t_1 <= n-2) gives
 * Σ_τ Π_k a_{i_k + τ(k)}^{p^{i_{p-1} - i_k}} = 0, τ running over all (p-1)!
 * arrangements of (t_1, ..., t_{p-2}, 0). For p = 2 the statement is a_i = 0, 1 <= i <= n-2.
 * Throws InvalidArgument if q is not prime or L fails the predicate.
 */
CoefficientIdentityResult coefficient_identity_check(const LinearizedPoly& L);

/// ½(p-1)(p^2-p+4).
std::uint64_t monomial_bound(std::uint64_t p);

struct MonomialReport {
    std::uint64_t p = 0, n = 0;
    std::uint64_t bound = 0;
    bool bound_applies = false;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::uint64_t candidates = 0;
    std::uint64_t solutions = 0;
    bool all_monomial = true;
    std::vector<LinearizedPoly> witnesses;  ///< non-monomial solutions, at most 16
};

/// Searches predicate-true L over F_{p^n} (exhaustive within budget, else seeded sampling if a seed is given).
MonomialReport monomial_harness(std::uint64_t p, std::uint64_t n, std::uint64_t budget = kDefaultSearchBudget,
                                        std::optional<std::uint64_t> sample_seed = std::nullopt);

}  // namespace semiswitch

#endif
