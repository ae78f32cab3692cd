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

#include "semiswitch/hws.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "semiswitch/errors.hpp"
#include "semiswitch/parallel.hpp"

namespace semiswitch {

namespace {

std::uint64_t size_of(std::uint64_t q, std::uint64_t n) {
    auto v = gf::checked_pow(q, n, std::uint64_t{1} << 40);
    if (!v) throw InvalidArgument("q^n too large");
    return *v;
}

std::uint64_t isqrt(std::uint64_t v) {
    std::uint64_t r = 0;
    for (std::uint64_t bit = std::uint64_t{1} << 31; bit; bit >>= 1)
        if ((r + bit) * (r + bit) <= v) r += bit;
    return r;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

std::uint64_t res(std::int64_t j, std::uint64_t q, std::uint64_t n) {
    const auto N = static_cast<std::int64_t>(size_of(q, n) - 1);
    const std::int64_t r = j % N;
    return static_cast<std::uint64_t>(r < 0 ? r + N : r);
}

std::uint64_t lead(std::uint64_t j, std::uint64_t p, std::uint64_t mn) {
    const std::uint64_t N = size_of(p, mn) - 1;
    if (j >= N) throw InvalidArgument("lead needs 0 <= j <= p^{mn} - 2");
    std::uint64_t best = j, x = j;
    do {
        x = static_cast<std::uint64_t>((unsigned __int128)x * p % N);
        best = std::min(best, x);
    } while (x != j);
    return best;
}

LeadTable::LeadTable(std::uint64_t p, std::uint64_t mn) {
    const std::uint64_t N = size_of(p, mn) - 1;
    constexpr std::uint32_t kUnset = ~std::uint32_t{0};
    table_.assign(N, kUnset);
    for (std::uint64_t e = 0; e < N; ++e) {
        if (table_[e] != kUnset) continue;
        // e is the first unvisited member of its coset, hence its minimum
        std::uint64_t x = e;
        do {
            table_[x] = static_cast<std::uint32_t>(e);
            x = static_cast<std::uint64_t>((unsigned __int128)x * p % N);
        } while (x != e);
    }
}

EllResult ell(const LinearizedPoly& L) {
    const FieldCtx& F = L.field();
    std::vector<std::uint64_t> steps;
    std::uint64_t qi = 1;
    const std::uint64_t N = F.group_order();
    for (std::size_t i = 1; i < F.n(); ++i) {
        qi *= F.q();
        if (!L.coeff(i).is_zero()) steps.push_back((qi - 1) % N);
    }
    if (steps.empty()) throw InvalidArgument("ell needs some a_i != 0 with i >= 1");
    const LeadTable table(F.p(), F.degree());

    constexpr std::uint64_t kChunks = 64;
    const std::uint64_t chunk = (N + kChunks - 1) / kChunks;
    std::vector<EllResult> partial(kChunks, EllResult{~std::uint64_t{0}, 0});
    parallel_for(kChunks, [&](std::uint64_t c) {
        const std::uint64_t begin = std::max<std::uint64_t>(1, c * chunk);
        const std::uint64_t end = std::min(N, (c + 1) * chunk);
        auto& best = partial[c];
        for (std::uint64_t j = begin; j < end; ++j) {
            if (std::gcd(j, N) != 1) continue;
            std::uint64_t lj = 0;
            for (auto s : steps) lj = std::max(lj, table(static_cast<std::uint64_t>((unsigned __int128)j * s % N)));
            if (lj < best.ell) best = {lj, j};
        }
    });
    EllResult out = partial.front();
    for (const auto& r : partial)
        if (r.ell < out.ell) out = r;
    if (out.argmin_j == 0) {
        // only N = 1 (q^n = 2) has no admissible j
        throw InvalidArgument("ell: no j in 1..q^n-2 coprime to q^n-1");
    }
    return out;
}

std::uint64_t serre_term(std::uint64_t q, std::uint64_t n) { return isqrt(4 * size_of(q, n)); }

Thresholds ell_thresholds(std::uint64_t q, std::uint64_t n) {
    const std::uint64_t Q = size_of(q, n);
    const std::uint64_t denom = (q - 1) * serre_term(q, n);
    return {1 + ceil_div(2 * Q, denom), 1 + ceil_div(2 * (Q - q), denom)};
}

std::uint64_t point_count(const LinearizedPoly& L) {
    const FieldCtx& F = L.field();
    std::uint64_t zeros = 0;
    for (std::uint64_t r = 0; r < F.size(); ++r)
        if (trace_quotient(L, F.element(r)).is_zero()) ++zeros;
    return 1 + F.q() * zeros;
}

HwsReport verdicts(const LinearizedPoly& L) {
    const FieldCtx& F = L.field();
    HwsReport r;
    r.q = F.q();
    r.n = F.n();
    const auto e = ell(L);
    r.ell = e.ell;
    r.argmin_j = e.argmin_j;
    if ((r.q - 1) * (r.ell - 1) % 2 != 0) throw ConsistencyFault("genus (q-1)(l-1)/2 is not an integer");
    r.genus = (r.q - 1) * (r.ell - 1) / 2;
    r.serre = serre_term(r.q, r.n);
    r.lower_bound = static_cast<std::int64_t>(F.size() + 1) - static_cast<std::int64_t>(r.genus * r.serre);
    r.trace_zero = F.trace(L.coeff(0)).is_zero();
    r.triggered_nonzero_trace = r.lower_bound > 1;
    r.triggered_zero_trace = r.lower_bound > static_cast<std::int64_t>(r.q + 1);
    r.thresholds = ell_thresholds(r.q, r.n);
    r.points = point_count(L);
    return r;
}

}  // namespace semiswitch
