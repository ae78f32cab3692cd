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

#include "semiswitch/digits.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "semiswitch/errors.hpp"

namespace semiswitch {

namespace {

std::uint64_t power(std::uint64_t q, std::uint64_t n) {
    auto v = gf::checked_pow(q, n, std::uint64_t{1} << 62);
    if (!v) throw InvalidArgument("q^n overflows");
    return *v;
}

/// Exponent reduction mod X^{q^n} - X.
std::uint64_t reduce_exponent(std::uint64_t e, std::uint64_t order) { return e == 0 ? 0 : 1 + (e - 1) % order; }

}  // namespace

DigitVector to_digits(std::uint64_t value, std::uint64_t q, std::uint64_t n) {
    if (q < 2) throw InvalidArgument("digit base must be >= 2");
    if (value >= power(q, n)) throw InvalidArgument("value " + std::to_string(value) + " has more than n digits");
    DigitVector d(n);
    for (auto& x : d) {
        x = value % q;
        value /= q;
    }
    return d;
}

std::uint64_t from_digits(const DigitVector& digits, std::uint64_t q) {
    std::uint64_t v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * q + *it;
    return v;
}

std::uint64_t omega0_top(std::uint64_t q, std::uint64_t n) { return (power(q, n) - 1) / (q - 1); }

std::uint64_t oplus(std::uint64_t alpha, std::uint64_t beta, std::uint64_t q, std::uint64_t n) {
    const std::uint64_t M = omega0_top(q, n);
    if (alpha > M || beta > M) throw InvalidArgument("oplus operand outside Omega_0");
    if (alpha == 0 && beta == 0) return 0;
    const std::uint64_t r = (alpha + beta) % M;
    return r == 0 ? M : r;
}

DigitVector s_digits(std::uint64_t j, std::uint64_t i, std::uint64_t n) {
    if (i > n) throw InvalidArgument("s(j,i) needs i <= n");
    DigitVector d(n, 0);
    for (std::uint64_t k = 0; k < i; ++k) d[(j + k) % n] = 1;
    return d;
}

std::uint64_t s_value(std::uint64_t j, std::uint64_t i, std::uint64_t q, std::uint64_t n) {
    return from_digits(s_digits(j, i, n), q);
}

AscDes asc_des(const DigitVector& d) {
    AscDes out;
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t cur = d[i], prev = d[(i + n - 1) % n];
        if (cur > prev) out.asc.insert(out.asc.end(), cur - prev, i);
        if (cur < prev) out.des.insert(out.des.end(), prev - cur, i);
    }
    out.count = out.asc.size();
    return out;
}

std::vector<Elem> c_alpha_all(const LinearizedPoly& L, std::uint64_t budget) {
    const FieldCtx& F = L.field();
    const std::uint64_t q = F.q(), n = F.n();
    const std::uint64_t k = q - 1;
    const std::uint64_t pairs = n * n;
    std::uint64_t total = 1;
    for (std::uint64_t t = 0; t < k; ++t) {
        if (total > budget / pairs) throw BudgetExceeded("c_alpha: (n^2)^(q-1) tuples exceed the budget");
        total *= pairs;
    }

    // pair index r = j*n + i: value s(j,i) and factor a_i^{q^j}
    std::vector<std::uint64_t> s(pairs);
    std::vector<Elem> factor(pairs);
    for (std::uint64_t j = 0; j < n; ++j) {
        for (std::uint64_t i = 0; i < n; ++i) {
            s[j * n + i] = s_value(j, i, q, n);
            factor[j * n + i] = F.frobenius(L.coeff(i), j);
        }
    }
    std::vector<Elem> C(omega0_top(q, n) + 1);
    std::vector<std::uint64_t> idx(k, 0);
    for (std::uint64_t done = 0; done < total; ++done) {
        std::uint64_t alpha = 0;
        Elem prod = F.one();
        for (std::uint64_t t = 0; t < k; ++t) {
            alpha = oplus(alpha, s[idx[t]], q, n);
            prod = F.mul(prod, factor[idx[t]]);
        }
        C[alpha] = F.add(C[alpha], prod);
        for (std::uint64_t t = 0; t < k && ++idx[t] == pairs; ++t) idx[t] = 0;
    }
    return C;
}

Elem c_alpha(const LinearizedPoly& L, std::uint64_t alpha, std::uint64_t budget) {
    const FieldCtx& F = L.field();
    if (alpha > omega0_top(F.q(), F.n())) throw InvalidArgument("alpha outside Omega_0");
    return c_alpha_all(L, budget)[alpha];
}

std::vector<Elem> expansion_oracle(const LinearizedPoly& L) {
    const FieldCtx& F = L.field();
    const std::uint64_t q = F.q(), n = F.n();
    const std::uint64_t order = F.group_order();

    std::vector<std::pair<std::uint64_t, Elem>> base;
    std::uint64_t qj = 1;
    for (std::uint64_t j = 0; j < n; ++j, qj *= q) {
        std::uint64_t qi = 1;
        for (std::uint64_t i = 0; i < n; ++i, qi *= q) {
            const Elem c = F.frobenius(L.coeff(i), j);
            if (c.is_zero()) continue;
            base.emplace_back(reduce_exponent(qj * (qi - 1), order), c);
        }
    }

    std::vector<Elem> acc(F.size());
    acc[0] = F.one();
    for (std::uint64_t round = 0; round + 1 < q; ++round) {
        std::vector<Elem> next(F.size());
        for (std::uint64_t e = 0; e < acc.size(); ++e) {
            if (acc[e].is_zero()) continue;
            for (auto [f, c] : base) {
                const std::uint64_t g = reduce_exponent(e + f, order);
                next[g] = F.add(next[g], F.mul(acc[e], c));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

CongruenceCheck expansion_congruence(const LinearizedPoly& L) {
    const FieldCtx& F = L.field();
    const auto coeffs = expansion_oracle(L);
    const Elem t = F.pow(F.trace(L.coeff(0)), static_cast<std::int64_t>(F.q() - 1));
    std::vector<Elem> expected(F.size());
    expected[0] = t;
    expected[F.group_order()] = F.sub(F.one(), t);
    for (std::uint64_t e = 0; e < coeffs.size(); ++e)
        if (coeffs[e] != expected[e]) return {false, e};
    return {true, std::nullopt};
}

CoefficientIdentityResult coefficient_identity_check(const LinearizedPoly& L) {
    const FieldCtx& F = L.field();
    if (F.m() != 1) throw InvalidArgument("coefficient_identity_check needs q prime");
    if (!switching_predicate(L)) throw InvalidArgument("coefficient_identity_check needs a predicate-true L");
    const std::uint64_t p = F.p();
    const std::size_t n = F.n();
    CoefficientIdentityResult out;
    if (n < 3) return out;
    const std::size_t k = p - 1;

    auto evaluate = [&](const std::vector<std::size_t>& i, const std::vector<std::size_t>& t) {
        std::vector<std::size_t> vals(t.begin(), t.end());
        vals.push_back(0);
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        Elem sum;
        do {
            Elem prod = F.one();
            for (std::size_t c = 0; c < k && !prod.is_zero(); ++c) {
                const Elem a = L.coeff(i[c] + vals[perm[c]]);
                prod = F.mul(prod, F.frobenius(a, i[k - 1] - i[c]));
            }
            sum = F.add(sum, prod);
        } while (std::next_permutation(perm.begin(), perm.end()));
        ++out.instances;
        if (!sum.is_zero() && out.holds) {
            out.holds = false;
            out.witness = CoefficientIdentityInstance{i, t};
            out.witness_sum = sum;
        }
    };

    std::vector<std::size_t> i, t;
    std::function<void(std::size_t)> pick_t = [&](std::size_t max_t) {
        if (t.size() == k - 1) {
            evaluate(i, t);
            return;
        }
        for (std::size_t v = 0; v <= max_t; ++v) {
            t.push_back(v);
            pick_t(v);
            t.pop_back();
        }
    };
    std::function<void(std::size_t)> pick_i = [&](std::size_t from) {
        if (i.size() == k) {
            pick_t(n - 2 - i.back());
            return;
        }
        for (std::size_t v = from; v + (k - i.size() - 1) <= n - 2; ++v) {
            i.push_back(v);
            pick_i(v + 1);
            i.pop_back();
        }
    };
    pick_i(1);
    return out;
}

std::uint64_t monomial_bound(std::uint64_t p) { return (p - 1) * (p * p - p + 4) / 2; }

MonomialReport monomial_harness(std::uint64_t p, std::uint64_t n, std::uint64_t budget,
                                        std::optional<std::uint64_t> sample_seed) {
    if (!gf::is_prime(p)) throw InvalidArgument("monomial harness needs p prime");
    const auto field = FieldCtx::build(p, 1, n);
    MonomialReport report;
    report.p = p;
    report.n = n;
    report.bound = monomial_bound(p);
    report.bound_applies = n >= report.bound;

    SearchOptions options;
    options.support = full_support(n);
    options.budget = budget;
    const auto space = gf::checked_pow(field->size(), n, budget);
    report.exhaustive = space.has_value();
    if (!report.exhaustive) {
        if (!sample_seed) {
            throw BudgetExceeded("exhaustive search over (p^n)^n candidates exceeds budget " + std::to_string(budget) +
                                 " and no sampling seed was given");
        }
        options.mode = SearchMode::random;
        options.seed = *sample_seed;
        report.seed = *sample_seed;
    }
    const auto result = search(field, options);
    report.candidates = result.candidates;
    report.solutions = result.found.size();
    for (const auto& L : result.found) {
        if (L.is_scalar()) continue;
        report.all_monomial = false;
        if (report.witnesses.size() < 16) report.witnesses.push_back(L);
    }
    return report;
}

}  // namespace semiswitch
