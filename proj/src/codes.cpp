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

#include "semiswitch/codes.hpp"

#include <algorithm>
#include <set>

#include "semiswitch/errors.hpp"
#include "semiswitch/parallel.hpp"

namespace semiswitch {

namespace {

std::uint64_t group_order_of(std::uint64_t q, std::uint64_t n) {
    auto v = gf::checked_pow(q, n, std::uint64_t{1} << 40);
    if (!v) throw InvalidArgument("q^n too large for coset enumeration");
    return *v - 1;
}

/// Fills values for one tuple; returns false (early) once a zero position appears.
bool full_weight_word(const FieldCtx& F, std::span<const Elem> a, std::vector<Elem>& values) {
    const std::uint64_t N = F.group_order();
    const std::size_t n = a.size();
    std::vector<std::uint64_t> step(n), exp(n, 0);
    std::uint64_t qi = 1;
    for (std::size_t i = 0; i < n; ++i, qi *= F.q()) step[i] = (qi - 1) % N;
    for (std::uint64_t k = 0; k < N; ++k) {
        Elem acc = a[0];
        for (std::size_t i = 1; i < n; ++i) {
            if (!a[i].is_zero()) acc = F.add(acc, F.mul(a[i], Elem::from_log(static_cast<std::uint32_t>(exp[i]))));
            exp[i] += step[i];
            if (exp[i] >= N) exp[i] -= N;
        }
        values[k] = F.trace(acc);
        if (values[k].is_zero()) return false;
    }
    return true;
}

}  // namespace

CyclotomicCoset coset(std::uint64_t base, std::uint64_t N, std::uint64_t e) {
    if (N == 0 || e >= N) throw InvalidArgument("coset needs 0 <= e < N");
    CyclotomicCoset c{base, N, e, {}};
    std::uint64_t x = e;
    do {
        c.members.push_back(x);
        x = static_cast<std::uint64_t>((unsigned __int128)x * base % N);
    } while (x != e);
    std::sort(c.members.begin(), c.members.end());
    c.representative = c.members.front();
    return c;
}

bool basic_zero_set_check(std::span<const std::uint64_t> exponents, std::uint64_t q, std::uint64_t n) {
    const std::uint64_t N = group_order_of(q, n);
    std::set<std::uint64_t> reps;
    for (auto e : exponents)
        if (!reps.insert(coset(q, N, e % N).representative).second) return false;
    return true;
}

std::vector<std::uint64_t> defining_exponents(std::uint64_t q, std::uint64_t n) {
    std::vector<std::uint64_t> out;
    std::uint64_t qi = 1;
    for (std::uint64_t i = 0; i < n; ++i, qi *= q) out.push_back(qi - 1);
    return out;
}

std::uint64_t code_dimension(std::uint64_t q, std::uint64_t n) {
    const std::uint64_t N = group_order_of(q, n);
    std::set<std::uint64_t> all;
    for (auto e : defining_exponents(q, n))
        for (auto x : coset(q, N, e % N).members) all.insert(x);
    const std::uint64_t dim = all.size();
    if (dim != n * n - n + 1) {
        throw ConsistencyFault("code dimension " + std::to_string(dim) + " differs from n^2 - n + 1",
                               "{\"q\":" + std::to_string(q) + ",\"n\":" + std::to_string(n) + "}");
    }
    return dim;
}

Codeword delsarte_codeword(const FieldCtx& F, std::span<const Elem> coeffs) {
    if (coeffs.size() != F.n()) throw InvalidArgument("codeword needs exactly n coefficients");
    const std::uint64_t N = F.group_order();
    Codeword w;
    w.source.assign(coeffs.begin(), coeffs.end());
    w.values.resize(N);
    std::vector<std::uint64_t> step(F.n());
    std::uint64_t qi = 1;
    for (std::size_t i = 0; i < F.n(); ++i, qi *= F.q()) step[i] = (qi - 1) % N;
    parallel_for(N, [&](std::uint64_t k) {
        Elem acc = coeffs[0];
        for (std::size_t i = 1; i < coeffs.size(); ++i) {
            const auto e = static_cast<std::uint32_t>((unsigned __int128)k * step[i] % N);
            acc = F.add(acc, F.mul(coeffs[i], Elem::from_log(e)));
        }
        w.values[k] = F.trace(acc);
    });
    w.weight = static_cast<std::uint64_t>(std::count_if(w.values.begin(), w.values.end(), [](Elem e) { return !e.is_zero(); }));
    w.constant = std::all_of(w.values.begin(), w.values.end(), [&](Elem e) { return e == w.values.front(); });
    return w;
}

std::string codeword_csv_row(const FieldCtx& F, const Codeword& word) {
    std::string row;
    for (std::size_t k = 0; k < word.values.size(); ++k) {
        if (k) row += ',';
        const Elem v = word.values[k];
        row += v.is_zero() ? "0" : std::to_string(1 + F.base_log(v).value());
    }
    return row;
}

FullWeightSummary full_weight_search(const FieldPtr& field, std::uint64_t budget,
                                     std::optional<std::uint64_t> sample_seed) {
    const FieldCtx& F = *field;
    const std::uint64_t Q = F.size(), n = F.n(), N = F.group_order();
    FullWeightSummary out;
    const auto space = gf::checked_pow(Q, n, budget);

    struct Bucket {
        std::uint64_t constant = 0, nonconstant = 0;
        std::vector<std::vector<Elem>> witnesses;
    };
    auto record = [&](Bucket& b, const std::vector<Elem>& a, const std::vector<Elem>& values) {
        const bool constant = std::all_of(values.begin(), values.end(), [&](Elem e) { return e == values.front(); });
        if (constant) {
            ++b.constant;
        } else {
            ++b.nonconstant;
            if (b.witnesses.size() < 16) b.witnesses.push_back(a);
        }
    };
    auto merge = [&](Bucket& b) {
        out.full_weight_constant += b.constant;
        out.full_weight_nonconstant += b.nonconstant;
        for (auto& w : b.witnesses)
            if (out.witnesses.size() < 16) out.witnesses.push_back(std::move(w));
    };

    if (space) {
        out.total = *space;
        std::vector<Bucket> buckets(Q);
        parallel_for(Q, [&](std::uint64_t top) {
            std::vector<Elem> a(n), values(N);
            a[n - 1] = F.element(top);
            const std::uint64_t inner = *space / Q;
            for (std::uint64_t code = 0; code < inner; ++code) {
                std::uint64_t c = code;
                for (std::size_t i = 0; i + 1 < n; ++i) {
                    a[i] = F.element(c % Q);
                    c /= Q;
                }
                if (full_weight_word(F, a, values)) record(buckets[top], a, values);
            }
        });
        for (auto& b : buckets) merge(b);
        return out;
    }
    if (!sample_seed) {
        throw BudgetExceeded("full-weight search over " + std::to_string(Q) + "^" + std::to_string(n) +
                             " tuples exceeds budget " + std::to_string(budget));
    }
    out.exhaustive = false;
    out.seed = *sample_seed;
    out.total = budget;
    std::mt19937_64 rng(*sample_seed);
    Bucket b;
    std::vector<Elem> a(n), values(N);
    for (std::uint64_t draw = 0; draw < budget; ++draw) {
        for (auto& x : a) x = random_element(F, rng);
        if (full_weight_word(F, a, values)) record(b, a, values);
    }
    merge(b);
    return out;
}

}  // namespace semiswitch
