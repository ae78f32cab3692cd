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
 * @file hws.hpp
 * @brief Necessary conditions on L from the Hasse-Weil-Serre bound for y^q - y = a_0 + Σ a_i x^{q^i-1}.
 *
 * All quantities are integers; ⌊2q^{n/2}⌋ is computed as isqrt(4q^n).
 */

#ifndef SEMISWITCH_HWS_HPP
#define SEMISWITCH_HWS_HPP

#include <cstdint>
#include <vector>

#include "semiswitch/linpoly.hpp"

namespace semiswitch {

/// j mod (q^n - 1) in {0..q^n-2}.
std::uint64_t res(std::int64_t j, std::uint64_t q, std::uint64_t n);

/// Smallest member of the p-cyclotomic coset of j modulo p^{mn} - 1.
std::uint64_t lead(std::uint64_t j, std::uint64_t p, std::uint64_t mn);

/// lead() for every residue at once.
class LeadTable {
   public:
    LeadTable(std::uint64_t p, std::uint64_t mn);
    std::uint64_t operator()(std::uint64_t j) const { return table_.at(j); }
    std::uint64_t modulus() const noexcept { return table_.size(); }

   private:
    std::vector<std::uint32_t> table_;
};

struct EllResult {
    std::uint64_t ell = 0;
    std::uint64_t argmin_j = 0;  ///< smallest j attaining the minimum
};

/// min over j coprime to q^n - 1 of max{Lead(Res(j(q^i-1))) : i >= 1, a_i != 0}.
/// Throws InvalidArgument when a_1 = ... = a_{n-1} = 0.
EllResult ell(const LinearizedPoly& L);

/// ⌊2q^{n/2}⌋ = isqrt(4q^n).
std::uint64_t serre_term(std::uint64_t q, std::uint64_t n);

struct Thresholds {
    std::uint64_t case_nonzero_trace = 0;  ///< 1 + ⌈2q^n / ((q-1)S)⌉
    std::uint64_t case_zero_trace = 0;     ///< 1 + ⌈2(q^n-q) / ((q-1)S)⌉
};

Thresholds ell_thresholds(std::uint64_t q, std::uint64_t n);

/// 1 + q·#{x in F_{q^n} : Tr(a_0 + Σ a_i x^{q^i-1}) = 0}, with the x = 0 term read as Tr(a_0).
std::uint64_t point_count(const LinearizedPoly& L);

struct HwsReport {
    std::uint64_t q = 0, n = 0;
    std::uint64_t ell = 0, argmin_j = 0;
    std::uint64_t genus = 0;       ///< (q-1)(ℓ-1)/2
    std::uint64_t serre = 0;       ///< ⌊2q^{n/2}⌋
    std::int64_t lower_bound = 0;  ///< q^n + 1 - genus·serre
    bool trace_zero = false;       ///< Tr(a_0) = 0
    bool triggered_nonzero_trace = false;  ///< lower_bound > 1
    bool triggered_zero_trace = false;     ///< lower_bound > q + 1
    Thresholds thresholds;
    std::uint64_t points = 0;

    /// The verdict of the case selected by Tr(a_0): true means no such L can satisfy the predicate.
    bool triggered() const noexcept { return trace_zero ? triggered_zero_trace : triggered_nonzero_trace; }
    /// The threshold of the case selected by Tr(a_0).
    std::uint64_t threshold() const noexcept {
        return trace_zero ? thresholds.case_zero_trace : thresholds.case_nonzero_trace;
    }
};

HwsReport verdicts(const LinearizedPoly& L);

}  // namespace semiswitch

#endif
