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

#ifndef SEMISWITCH_LINPOLY_HPP
#define SEMISWITCH_LINPOLY_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "semiswitch/gf.hpp"

namespace semiswitch {

/// L(X) = Σ_{i<n} a_i X^{q^i} over F_{q^n}.
class LinearizedPoly {
   public:
    LinearizedPoly(FieldPtr field, std::vector<Elem> coeffs);
    static LinearizedPoly zero(FieldPtr field);
    /// a·X^{q^i}
    static LinearizedPoly monomial(FieldPtr field, std::size_t i, Elem a);

    const FieldCtx& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::span<const Elem> coeffs() const noexcept { return coeffs_; }
    Elem coeff(std::size_t i) const { return coeffs_.at(i); }

    /// True when a_i = 0 for every i >= 1, i.e. L = a_0 X.
    bool is_scalar() const noexcept;
    /// Indices i with a_i != 0.
    std::vector<std::size_t> support() const;

    friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) noexcept {
        return a.coeffs_ == b.coeffs_;
    }

   private:
    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

Elem lp_eval(const LinearizedPoly& L, Elem x);

/// Tr(a_0 + Σ_{i>=1} a_i x^{q^i-1}); equals Tr(L(x)/x) for x != 0 and Tr(a_0) at x = 0.
Elem trace_quotient(const LinearizedPoly& L, Elem x);

/// True iff Tr(L(x)/x) != 0 for every x in F_{q^n}^*, by full enumeration.
bool switching_predicate(const LinearizedPoly& L);

/// The first x != 0 (γ-power order) with Tr(L(x)/x) = 0, if any.
std::optional<Elem> predicate_witness(const LinearizedPoly& L);

/// True iff x -> L(x) has trivial kernel.
bool is_permutation(const LinearizedPoly& L);

/**
 * Hot-path form of the predicate used by the searches.
 *
 * Tr(L(x)/x) only depends on x modulo F_q^*, so the evaluator walks the
 * (q^n-1)/(q-1) coset representatives γ^k with precomputed exponents k(q^i-1).
 */
class QuotientEvaluator {
   public:
    explicit QuotientEvaluator(const FieldCtx& field);
    /// Same answer as switching_predicate for the polynomial with these coefficients.
    bool holds(std::span<const Elem> coeffs) const;

   private:
    const FieldCtx* field_;
    std::uint64_t reps_ = 0;
    std::vector<std::uint32_t> exponents_;  // [k * (n-1) + (i-1)] = k(q^i-1) mod (q^n-1)
};

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 25;

enum class SearchMode { exhaustive, random };

struct SearchOptions {
    std::vector<std::size_t> support;  ///< coefficient indices allowed to be nonzero
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t seed = 0;                          ///< random mode only
    std::uint64_t budget = kDefaultSearchBudget;     ///< max candidates (exhaustive) or draws (random)
};

struct SearchResult {
    SearchOptions options;
    std::uint64_t candidates = 0;
    std::vector<LinearizedPoly> found;
};

std::vector<std::size_t> full_support(std::size_t n);

/**
 * All (exhaustive) or some (random) L supported on options.support that satisfy
 * the switching predicate.
 *
 * Exhaustive order is lexicographic in (a_{s_k}, ..., a_{s_0}) by γ-power order,
 * highest support index most significant; the work is partitioned on that
 * coefficient. Random mode draws `budget` candidates from a seeded mt19937_64 and
 * reports each distinct hit once, in draw order. Throws BudgetExceeded when the
 * exhaustive space is larger than the budget.
 */
SearchResult search(const FieldPtr& field, const SearchOptions& options);

/// Uniform draw in [0, bound) by rejection; identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// A uniformly random element of F_{q^n}.
Elem random_element(const FieldCtx& field, std::mt19937_64& rng);
/// A uniformly random nonzero element.
Elem random_nonzero(const FieldCtx& field, std::mt19937_64& rng);

}  // namespace semiswitch

#endif
