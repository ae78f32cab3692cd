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

#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "semiswitch/errors.hpp"
#include "semiswitch/gf.hpp"

using namespace semiswitch;

namespace {

const std::vector<std::uint64_t> kF64Modulus{1, 1, 0, 1, 1, 0, 1};  // X^6+X^4+X^3+X+1

std::vector<FieldPtr> small_fields() {
    return {FieldCtx::build(2, 1, 2), FieldCtx::build(2, 1, 3), FieldCtx::build(3, 1, 2),
            FieldCtx::build(2, 2, 2), FieldCtx::build(3, 1, 3), FieldCtx::build(5, 1, 2),
            FieldCtx::build(2, 2, 3, kF64Modulus), FieldCtx::build(7, 1, 2)};
}

}  // namespace

TEST_CASE("table arithmetic matches schoolbook polynomial arithmetic") {
    for (const auto& field : small_fields()) {
        const FieldCtx& F = *field;
        const oracle::PolyField P(F);
        CAPTURE(F.p());
        CAPTURE(F.size());
        for (std::uint64_t r = 0; r < F.size(); ++r) {
            const Elem a = F.element(r);
            for (std::uint64_t s = 0; s < F.size(); ++s) {
                const Elem b = F.element(s);
                REQUIRE(F.vector(F.add(a, b)) == P.add(F.vector(a), F.vector(b)));
                REQUIRE(F.vector(F.mul(a, b)) == P.mul(F.vector(a), F.vector(b)));
                REQUIRE(F.vector(F.sub(a, b)) == P.sub(F.vector(a), F.vector(b)));
            }
            if (!a.is_zero()) REQUIRE(F.vector(F.inv(a)) == P.inv(F.vector(a)));
        }
    }
}

TEST_CASE("generator powers are the powers of the recorded generator vector") {
    for (const auto& field : small_fields()) {
        const FieldCtx& F = *field;
        const oracle::PolyField P(F);
        const auto g = P.from_code(F.generator_code());
        auto x = P.one();
        std::set<std::uint64_t> seen;
        for (std::uint32_t k = 0; k < F.group_order(); ++k) {
            REQUIRE(F.vector(Elem::from_log(k)) == x);
            seen.insert(P.code(x));
            x = P.mul(x, g);
        }
        CHECK(seen.size() == F.group_order());
        CHECK(x == P.one());
    }
}

TEST_CASE("F_4 with X^2+X+1") {
    const auto F = FieldCtx::build(2, 1, 2, std::vector<std::uint64_t>{1, 1, 1});
    const Elem w = F->gamma();
    CHECK(F->vector(w) == std::vector<std::uint32_t>{0, 1});
    CHECK(F->mul(w, w) == F->add(w, F->one()));
    CHECK(F->trace(w) == F->one());
    CHECK(F->mul(w, F->one()) == w);
}

TEST_CASE("F_9 with X^2+1") {
    const auto F = FieldCtx::build(3, 1, 2, std::vector<std::uint64_t>{1, 0, 1});
    const Elem i = F->from_vector(std::vector<std::uint32_t>{0, 1});
    const Elem two = F->from_prime_field(2);
    CHECK(F->mul(i, i) == two);
    CHECK(F->frobenius(i, 1) == F->mul(two, i));
    CHECK(F->norm(i) == F->one());
    CHECK(F->frobenius(i, 2) == i);
}

TEST_CASE("default modulus is the first irreducible in code order") {
    // F_9: X^2+1 is the first monic quadratic over F_3 without a root
    CHECK(FieldCtx::build(3, 1, 2)->modulus() == std::vector<std::uint64_t>{1, 0, 1});
    for (auto [p, d] : {std::pair{2, 4}, {3, 3}, {5, 2}, {2, 6}}) {
        const auto got = gf::smallest_irreducible(p, d);
        // brute-force: irreducible iff no factor of degree <= d/2, tested by trial division
        auto irreducible = [&](const std::vector<std::uint64_t>& f) {
            for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(d) / 2; ++k) {
                std::uint64_t count = 1;
                for (std::uint64_t t = 0; t < k; ++t) count *= p;
                for (std::uint64_t code = 0; code < count; ++code) {
                    std::vector<std::uint64_t> g(k + 1);
                    std::uint64_t c = code;
                    for (std::uint64_t t = 0; t < k; ++t, c /= p) g[t] = c % p;
                    g[k] = 1;
                    auto r = f;  // r mod g
                    for (std::size_t top = r.size(); top-- > k;) {
                        const std::uint64_t lead = r[top];
                        for (std::size_t t = 0; t <= k; ++t) r[top - k + t] = (r[top - k + t] + (p - lead) * g[t]) % p;
                    }
                    bool zero = true;
                    for (std::size_t t = 0; t < k; ++t) zero = zero && r[t] == 0;
                    if (zero) return false;
                }
            }
            return true;
        };
        CHECK(irreducible(got));
        std::uint64_t count = 1;
        for (int t = 0; t < d; ++t) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<std::uint64_t> f(d + 1);
            std::uint64_t c = code;
            for (int t = 0; t < d; ++t, c /= p) f[t] = c % p;
            f[d] = 1;
            if (f == got) break;
            CHECK_FALSE(irreducible(f));
        }
    }
}

TEST_CASE("F_64 as F_{4^3} with X^6+X^4+X^3+X+1") {
    const auto F = FieldCtx::build(2, 2, 3, kF64Modulus);
    CHECK(F->q() == 4);
    CHECK(F->generator_code() == 2);  // the root ξ itself is primitive
    const Elem xi21 = Elem::from_log(21);
    CHECK(F->in_subfield(xi21, 1));
    CHECK(F->in_base_field(xi21));
    CHECK_FALSE(F->in_subfield(F->gamma(), 1));
    CHECK(F->in_subfield(F->gamma(), 3));
    CHECK(F->in_subfield(Elem::zero(), 1));
    CHECK(F->in_subfield(F->one(), 1));
    CHECK_THROWS_AS(F->in_subfield(F->one(), 2), InvalidArgument);
}

TEST_CASE("trace is additive, F_q-linear and matches Σ x^{q^i}") {
    for (const auto& field : {FieldCtx::build(2, 2, 3, kF64Modulus), FieldCtx::build(3, 1, 4), FieldCtx::build(2, 3, 2),
                              FieldCtx::build(2, 1, 12), FieldCtx::build(3, 1, 7), FieldCtx::build(3, 2, 3)}) {
        const FieldCtx& F = *field;
        CAPTURE(F.size());
        const auto base = F.base_field_elements();
        REQUIRE(base.size() == F.q());
        bool additive = true, linear = true, in_base = true;
        for (std::uint64_t r = 0; r < F.size(); ++r) {
            const Elem x = F.element(r);
            in_base = in_base && F.in_base_field(F.trace(x));
            for (std::uint64_t s = 0; s < F.size(); ++s) {
                const Elem y = F.element(s);
                additive = additive && F.trace(F.add(x, y)) == F.add(F.trace(x), F.trace(y));
            }
            for (Elem c : base) linear = linear && F.trace(F.mul(c, x)) == F.mul(c, F.trace(x));
        }
        CHECK(additive);
        CHECK(linear);
        CHECK(in_base);
        if (F.size() <= 729) {
            const oracle::PolyField P(F);
            for (std::uint64_t r = 0; r < F.size(); ++r)
                REQUIRE(F.vector(F.trace(F.element(r))) == P.trace(F.vector(F.element(r))));
        }
        for (Elem c : base) CHECK(F.trace(c) == F.mul(F.from_prime_field(F.n()), c));
    }
}

TEST_CASE("norm is multiplicative and lands in F_q") {
    std::mt19937_64 rng(11);
    for (const auto& field : {FieldCtx::build(3, 1, 4), FieldCtx::build(2, 2, 3, kF64Modulus), FieldCtx::build(5, 1, 3)}) {
        const FieldCtx& F = *field;
        const oracle::PolyField P(F);
        for (int t = 0; t < 10000; ++t) {
            const Elem x = random_nonzero(F, rng), y = random_nonzero(F, rng);
            REQUIRE(F.norm(F.mul(x, y)) == F.mul(F.norm(x), F.norm(y)));
            REQUIRE(F.in_base_field(F.norm(x)));
        }
        for (std::uint32_t k = 0; k < 50; ++k) {
            const Elem x = Elem::from_log(k);
            CHECK(F.vector(F.norm(x)) == P.pow(F.vector(x), (F.size() - 1) / (F.q() - 1)));
        }
        CHECK(F.norm(Elem::zero()).is_zero());
    }
}

TEST_CASE("Frobenius is an automorphism fixing exactly F_q") {
    for (const auto& field : small_fields()) {
        const FieldCtx& F = *field;
        const oracle::PolyField P(F);
        std::uint64_t fixed = 0;
        for (std::uint64_t r = 0; r < F.size(); ++r) {
            const Elem x = F.element(r);
            REQUIRE(F.vector(F.frobenius(x)) == P.pow(F.vector(x), F.q()));
            REQUIRE(F.frobenius(x, F.n()) == x);
            if (F.frobenius(x) == x) {
                ++fixed;
                CHECK(F.in_base_field(x));
            }
            for (std::uint64_t s = 0; s < F.size(); s += 3) {
                const Elem y = F.element(s);
                REQUIRE(F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y)));
                REQUIRE(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
            }
        }
        CHECK(fixed == F.q());
    }
}

TEST_CASE("vector and log forms round-trip") {
    for (const auto& field : small_fields()) {
        const FieldCtx& F = *field;
        for (std::uint64_t r = 0; r < F.size(); ++r) {
            const Elem x = F.element(r);
            REQUIRE(F.from_vector(F.vector(x)) == x);
            REQUIRE(F.from_code(F.vector_code(x)) == x);
        }
        CHECK(F.vector(Elem::zero()) == std::vector<std::uint32_t>(F.degree(), 0));
    }
}

TEST_CASE("pow, div and the canonical F_q enumeration") {
    const auto F = FieldCtx::build(3, 1, 4);
    const Elem g = F->gamma();
    CHECK(F->pow(g, 80) == F->one());
    CHECK(F->pow(g, -1) == F->inv(g));
    CHECK(F->mul(F->div(g, F->pow(g, 7)), F->pow(g, 6)) == F->one());
    CHECK(F->pow(Elem::zero(), 0) == F->one());
    CHECK_THROWS_AS(F->inv(Elem::zero()), InvalidArgument);
    CHECK_THROWS_AS(F->pow(Elem::zero(), -2), InvalidArgument);
    const auto base = F->base_field_elements();
    CHECK(base[0].is_zero());
    CHECK(base[1] == F->one());
    CHECK(base[2] == F->base_primitive());
    CHECK(F->base_log(F->minus_one()) == 1u);
    CHECK_FALSE(F->base_log(g).has_value());
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(FieldCtx::build(4, 1, 2), InvalidArgument);
    CHECK_THROWS_AS(FieldCtx::build(2, 1, 0), InvalidArgument);
    CHECK_THROWS_AS(FieldCtx::build(2, 1, 2, std::vector<std::uint64_t>{1, 0, 1}), InvalidArgument);  // (X+1)^2
    CHECK_THROWS_AS(FieldCtx::build(2, 1, 2, std::vector<std::uint64_t>{1, 1, 0}), InvalidArgument);  // not monic
    CHECK_THROWS_AS(FieldCtx::build(2, 1, 23), BudgetExceeded);
    CHECK_NOTHROW(FieldCtx::build(2, 1, 23, std::nullopt, std::nullopt, std::uint64_t{1} << 23));
    // X is not primitive modulo X^4+X^3+X^2+X+1 (order 5)
    CHECK_THROWS_AS(FieldCtx::build(2, 1, 4, std::vector<std::uint64_t>{1, 1, 1, 1, 1}, 2), InvalidArgument);
    CHECK_NOTHROW(FieldCtx::build(2, 1, 4, std::vector<std::uint64_t>{1, 1, 1, 1, 1}));
}

TEST_CASE("rebuilding from the recorded spec gives the same field") {
    const auto F = FieldCtx::build(2, 1, 4, std::vector<std::uint64_t>{1, 1, 1, 1, 1});
    const auto G = FieldCtx::build(F->spec());
    CHECK(G->spec() == F->spec());
    for (std::uint32_t k = 0; k < F->group_order(); ++k)
        CHECK(F->vector(Elem::from_log(k)) == G->vector(Elem::from_log(k)));
}
