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

#include "semiswitch/linpoly.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "semiswitch/errors.hpp"
#include "semiswitch/parallel.hpp"

namespace semiswitch {

LinearizedPoly::LinearizedPoly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw InvalidArgument("linearized polynomial without a field");
    if (coeffs_.size() != field_->n()) {
        throw InvalidArgument("linearized polynomial needs exactly n = " + std::to_string(field_->n()) +
                              " coefficients, got " + std::to_string(coeffs_.size()));
    }
    for (Elem a : coeffs_)
        if (a.raw() >= field_->size()) throw InvalidArgument("coefficient outside the field");
}

LinearizedPoly LinearizedPoly::zero(FieldPtr field) {
    const auto n = field->n();
    return LinearizedPoly(std::move(field), std::vector<Elem>(n));
}

LinearizedPoly LinearizedPoly::monomial(FieldPtr field, std::size_t i, Elem a) {
    std::vector<Elem> c(field->n());
    c.at(i) = a;
    return LinearizedPoly(std::move(field), std::move(c));
}

bool LinearizedPoly::is_scalar() const noexcept {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](Elem a) { return a.is_zero(); });
}

std::vector<std::size_t> LinearizedPoly::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) out.push_back(i);
    return out;
}

Elem lp_eval(const LinearizedPoly& L, Elem x) {
    const auto& F = L.field();
    Elem acc;
    for (std::size_t i = 0; i < L.coeffs().size(); ++i) acc = F.add(acc, F.mul(L.coeffs()[i], F.frobenius(x, i)));
    return acc;
}

Elem trace_quotient(const LinearizedPoly& L, Elem x) {
    const auto& F = L.field();
    Elem acc = L.coeffs()[0];
    if (!x.is_zero()) {
        std::uint64_t qi = 1;
        for (std::size_t i = 1; i < L.coeffs().size(); ++i) {
            qi *= F.q();
            acc = F.add(acc, F.mul(L.coeffs()[i], F.pow(x, static_cast<std::int64_t>(qi - 1))));
        }
    }
    return F.trace(acc);
}

std::optional<Elem> predicate_witness(const LinearizedPoly& L) {
    const auto& F = L.field();
    for (std::uint64_t r = 1; r < F.size(); ++r) {
        const Elem x = F.element(r);
        if (trace_quotient(L, x).is_zero()) return x;
    }
    return std::nullopt;
}

bool switching_predicate(const LinearizedPoly& L) { return !predicate_witness(L).has_value(); }

bool is_permutation(const LinearizedPoly& L) {
    const auto& F = L.field();
    std::vector<Elem> images;
    for (Elem e : F.prime_basis()) images.push_back(lp_eval(L, e));
    return F.prime_rank(images) == F.degree();
}

QuotientEvaluator::QuotientEvaluator(const FieldCtx& field) : field_(&field) {
    const std::uint64_t order = field.group_order();
    const std::uint64_t n = field.n();
    reps_ = order / (field.q() - 1);
    exponents_.resize(reps_ * (n - 1));
    std::vector<std::uint64_t> q_minus_1(n);
    std::uint64_t qi = 1 % order;
    for (std::uint64_t i = 1; i < n; ++i) {
        qi = static_cast<std::uint64_t>((unsigned __int128)qi * field.q() % order);
        q_minus_1[i] = (qi + order - 1) % order;
    }
    for (std::uint64_t k = 0; k < reps_; ++k)
        for (std::uint64_t i = 1; i < n; ++i)
            exponents_[k * (n - 1) + (i - 1)] =
                static_cast<std::uint32_t>((unsigned __int128)k * q_minus_1[i] % order);
}

bool QuotientEvaluator::holds(std::span<const Elem> coeffs) const {
    const FieldCtx& F = *field_;
    const std::size_t n = coeffs.size();
    std::size_t active[64];
    std::size_t count = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (!coeffs[i].is_zero()) active[count++] = i;
    if (count == 0) return !F.trace(coeffs[0]).is_zero();
    const std::uint64_t order = F.group_order();
    for (std::uint64_t k = 0; k < reps_; ++k) {
        const std::uint32_t* e = &exponents_[k * (n - 1)];
        Elem acc = coeffs[0];
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t i = active[t];
            std::uint64_t lg = std::uint64_t{coeffs[i].log()} + e[i - 1];
            if (lg >= order) lg -= order;
            acc = F.add(acc, Elem::from_log(static_cast<std::uint32_t>(lg)));
        }
        if (F.trace(acc).is_zero()) return false;
    }
    return true;
}

std::vector<std::size_t> full_support(std::size_t n) {
    std::vector<std::size_t> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = i;
    return s;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

Elem random_element(const FieldCtx& field, std::mt19937_64& rng) {
    return field.element(uniform_below(rng, field.size()));
}

Elem random_nonzero(const FieldCtx& field, std::mt19937_64& rng) {
    return field.element(1 + uniform_below(rng, field.size() - 1));
}

namespace {

std::vector<std::size_t> normalized_support(const FieldCtx& F, std::vector<std::size_t> support) {
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    for (auto i : support)
        if (i >= F.n()) throw InvalidArgument("support index " + std::to_string(i) + " >= n");
    return support;
}

SearchResult search_exhaustive(const FieldPtr& field, SearchOptions options) {
    const FieldCtx& F = *field;
    SearchResult result;
    result.options = options;
    const auto& support = options.support;
    if (support.empty()) return result;

    const std::uint64_t Q = F.size();
    std::uint64_t total = 1;
    for (std::size_t t = 0; t < support.size(); ++t) {
        if (total > options.budget / Q) {
            throw BudgetExceeded("exhaustive search over " + std::to_string(Q) + "^" +
                                 std::to_string(support.size()) + " candidates exceeds budget " +
                                 std::to_string(options.budget));
        }
        total *= Q;
    }
    result.candidates = total;

    const QuotientEvaluator eval(F);
    const std::size_t top = support.back();
    const std::size_t inner = support.size() - 1;
    std::vector<std::vector<std::vector<Elem>>> buckets(Q);
    parallel_for(Q, [&](std::uint64_t top_raw) {
        std::vector<Elem> coeffs(F.n());
        coeffs[top] = F.element(top_raw);
        std::vector<std::uint64_t> digits(inner, 0);
        auto& out = buckets[top_raw];
        for (;;) {
            if (eval.holds(coeffs)) out.push_back(coeffs);
            std::size_t t = 0;
            while (t < inner) {
                if (++digits[t] < Q) {
                    coeffs[support[t]] = F.element(digits[t]);
                    break;
                }
                digits[t] = 0;
                coeffs[support[t]] = Elem::zero();
                ++t;
            }
            if (t == inner) break;
        }
    });
    for (auto& bucket : buckets)
        for (auto& c : bucket) result.found.emplace_back(field, std::move(c));
    return result;
}

SearchResult search_random(const FieldPtr& field, SearchOptions options) {
    const FieldCtx& F = *field;
    SearchResult result;
    result.options = options;
    result.candidates = options.budget;
    if (options.support.empty()) return result;

    const QuotientEvaluator eval(F);
    std::mt19937_64 rng(options.seed);
    std::set<std::vector<Elem>> seen;
    constexpr std::uint64_t kBlock = 1 << 16;
    std::vector<std::vector<Elem>> block;
    std::vector<char> hit;
    for (std::uint64_t done = 0; done < options.budget;) {
        const std::uint64_t len = std::min(kBlock, options.budget - done);
        block.assign(len, std::vector<Elem>(F.n()));
        for (auto& c : block)
            for (auto i : options.support) c[i] = random_element(F, rng);
        hit.assign(len, 0);
        parallel_for(len, [&](std::uint64_t t) { hit[t] = eval.holds(block[t]) ? 1 : 0; });
        for (std::uint64_t t = 0; t < len; ++t)
            if (hit[t] && seen.insert(block[t]).second) result.found.emplace_back(field, block[t]);
        done += len;
    }
    return result;
}

}  // namespace

SearchResult search(const FieldPtr& field, const SearchOptions& options) {
    SearchOptions normalized = options;
    normalized.support = normalized_support(*field, options.support);
    if (normalized.mode == SearchMode::exhaustive) return search_exhaustive(field, std::move(normalized));
    return search_random(field, std::move(normalized));
}

}  // namespace semiswitch
