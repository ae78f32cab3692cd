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
 * @file codes.hpp
 * @brief The cyclic code of length q^n - 1 whose words are x -> Tr(a_0 + Σ a_i x^{q^i-1}).
 *
 * The code is only handled through this evaluation form; generator polynomials
 * are never built, and the dimension comes from counting cyclotomic cosets.
 */

#ifndef SEMISWITCH_CODES_HPP
#define SEMISWITCH_CODES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiswitch/gf.hpp"
#include "semiswitch/linpoly.hpp"

namespace semiswitch {

struct CyclotomicCoset {
    std::uint64_t base = 0;
    std::uint64_t modulus = 0;
    std::uint64_t representative = 0;  ///< smallest member
    std::vector<std::uint64_t> members;  ///< sorted
};

/// {e·base^u mod N : u >= 0}.
CyclotomicCoset coset(std::uint64_t base, std::uint64_t N, std::uint64_t e);

/// True iff the exponents lie in pairwise distinct q-cyclotomic cosets mod q^n - 1 (duplicates fail).
bool basic_zero_set_check(std::span<const std::uint64_t> exponents, std::uint64_t q, std::uint64_t n);

/// {0, q-1, q^2-1, ..., q^{n-1}-1}.
std::vector<std::uint64_t> defining_exponents(std::uint64_t q, std::uint64_t n);

/// |union of the cosets of defining_exponents|; throws ConsistencyFault unless it is n^2 - n + 1.
std::uint64_t code_dimension(std::uint64_t q, std::uint64_t n);

struct Codeword {
    std::vector<Elem> values;  ///< values[k] = Tr(a_0 + Σ a_i γ^{k(q^i-1)}), in F_q
    std::vector<Elem> source;  ///< a_0..a_{n-1}
    std::uint64_t weight = 0;
    bool constant = false;     ///< all positions equal
};

Codeword delsarte_codeword(const FieldCtx& field, std::span<const Elem> coeffs);

/// One CSV row: positions as F_q ordinals (0 for zero, 1 + j for δ^j).
std::string codeword_csv_row(const FieldCtx& field, const Codeword& word);

struct FullWeightSummary {
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::uint64_t total = 0;                 ///< coefficient tuples examined
    std::uint64_t full_weight_constant = 0;
    std::uint64_t full_weight_nonconstant = 0;
    std::vector<std::vector<Elem>> witnesses;  ///< non-constant full-weight sources, at most 16
};

/// Every (or `budget` sampled, if a seed is given) coefficient tuple whose word has weight q^n - 1.
FullWeightSummary full_weight_search(const FieldPtr& field, std::uint64_t budget = kDefaultSearchBudget,
                                     std::optional<std::uint64_t> sample_seed = std::nullopt);

}  // namespace semiswitch

#endif
