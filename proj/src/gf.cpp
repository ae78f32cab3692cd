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

#include "semiswitch/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "semiswitch/errors.hpp"
#include "semiswitch/parallel.hpp"

namespace semiswitch {

unsigned worker_count() {
    static const unsigned count = [] {
        if (const char* env = std::getenv("SEMISWITCH_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v > 0) return static_cast<unsigned>(v);
        }
        return std::max(1u, std::thread::hardware_concurrency());
    }();
    return count;
}

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients over F_p, constant term first

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    b %= mod;
    while (e) {
        if (e & 1) r = static_cast<std::uint64_t>((unsigned __int128)r * b % mod);
        b = static_cast<std::uint64_t>((unsigned __int128)b * b % mod);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) { return powmod_u64(a, p - 2, p); }

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic.
Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    const std::size_t df = f.size() - 1;
    trim(a);
    while (a.size() > df) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly r = poly_mod(Poly{1}, f, p);
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        e >>= 1;
        if (e) base = poly_mulmod(base, base, f, p);
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        const std::uint64_t li = inv_mod_prime(b.back(), p);
        Poly monic = b;
        for (auto& c : monic) c = c * li % p;
        Poly r = poly_mod(a, monic, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

bool is_primitive_poly_element(const Poly& g, const Poly& f, std::uint64_t p, std::uint64_t order,
                               const std::vector<std::uint64_t>& factors) {
    Poly one = poly_mod(Poly{1}, f, p);
    Poly gm = poly_mod(g, f, p);
    if (gm.empty()) return false;
    if (poly_powmod(gm, order, f, p) != one) return false;
    for (std::uint64_t r : factors) {
        if (poly_powmod(gm, order / r, f, p) == one) return false;
    }
    return true;
}

}  // namespace

namespace gf {

bool is_prime(std::uint64_t v) noexcept {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint64_t e, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > limit / p) return std::nullopt;
        r *= p;
    }
    if (r > limit) return std::nullopt;
    return r;
}

bool is_irreducible(std::span<const std::uint64_t> coeffs, std::uint64_t p) {
    Poly f(coeffs.begin(), coeffs.end());
    for (auto& c : f) c %= p;
    trim(f);
    if (f.size() < 2) return false;
    const std::uint64_t d = f.size() - 1;
    const std::uint64_t li = inv_mod_prime(f.back(), p);
    for (auto& c : f) c = c * li % p;
    if (d == 1) return true;

    const Poly x = poly_mod(Poly{0, 1}, f, p);
    // frob[k] = X^{p^k} mod f
    std::vector<Poly> frob{x};
    for (std::uint64_t k = 1; k <= d; ++k) frob.push_back(poly_powmod(frob.back(), p, f, p));
    if (frob[d] != x) return false;
    for (std::uint64_t r : prime_factors(d)) {
        Poly g = poly_gcd(f, poly_sub(frob[d / r], x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, std::uint64_t d) {
    const auto count = checked_pow(p, d, kMaxFieldCap);
    if (!count) throw BudgetExceeded("modulus scan: p^d too large");
    for (std::uint64_t code = 0; code < *count; ++code) {
        std::vector<std::uint64_t> f(d + 1, 0);
        std::uint64_t c = code;
        for (std::uint64_t i = 0; i < d; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[d] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw ConsistencyFault("no irreducible polynomial of degree " + std::to_string(d) + " over F_" +
                           std::to_string(p));
}

}  // namespace gf

FieldPtr FieldCtx::build(const FieldSpec& spec, std::uint64_t cap) {
    return build(spec.p, spec.m, spec.n, spec.modulus, spec.generator, cap);
}

FieldPtr FieldCtx::build(std::uint64_t p, std::uint64_t m, std::uint64_t n,
                         std::optional<std::vector<std::uint64_t>> modulus,
                         std::optional<std::uint64_t> generator, std::uint64_t cap) {
    if (!gf::is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
    if (m == 0 || n == 0) throw InvalidArgument("m and n must be positive");
    cap = std::min(cap, kMaxFieldCap);
    const auto size = gf::checked_pow(p, m * n, cap);
    if (!size) {
        throw BudgetExceeded("field of size " + std::to_string(p) + "^" + std::to_string(m * n) +
                             " exceeds the table cap " + std::to_string(cap));
    }
    const std::uint64_t d = m * n;

    std::shared_ptr<FieldCtx> ctx(new FieldCtx());
    ctx->p_ = p;
    ctx->m_ = m;
    ctx->n_ = n;
    ctx->q_ = *gf::checked_pow(p, m, cap);
    ctx->size_ = *size;

    if (modulus) {
        if (modulus->size() != d + 1) {
            throw InvalidArgument("modulus must have " + std::to_string(d + 1) + " coefficients");
        }
        for (auto c : *modulus)
            if (c >= p) throw InvalidArgument("modulus coefficient out of range");
        if (modulus->back() != 1) throw InvalidArgument("modulus must be monic");
        if (!gf::is_irreducible(*modulus, p)) throw InvalidArgument("modulus is reducible over F_p");
        ctx->modulus_ = *modulus;
    } else {
        ctx->modulus_ = gf::smallest_irreducible(p, d);
    }

    const std::uint64_t order = ctx->size_ - 1;
    const auto factors = gf::prime_factors(order);
    auto decode = [&](std::uint64_t code) {
        Poly g(d, 0);
        for (std::uint64_t i = 0; i < d; ++i) {
            g[i] = code % p;
            code /= p;
        }
        return g;
    };
    if (generator) {
        if (*generator == 0 || *generator >= ctx->size_ ||
            !is_primitive_poly_element(decode(*generator), ctx->modulus_, p, order, factors)) {
            throw InvalidArgument("generator " + std::to_string(*generator) + " is not primitive");
        }
        ctx->generator_code_ = *generator;
    } else {
        std::uint64_t code = 1;
        for (; code < ctx->size_; ++code) {
            if (is_primitive_poly_element(decode(code), ctx->modulus_, p, order, factors)) break;
        }
        if (code == ctx->size_) throw ConsistencyFault("no primitive element found");
        ctx->generator_code_ = code;
    }
    ctx->build_tables();
    return ctx;
}

void FieldCtx::build_tables() {
    const std::uint64_t d = degree();
    const std::uint64_t order = size_ - 1;

    digit_place_.resize(d + 1);
    digit_place_[0] = 1;
    for (std::uint64_t i = 1; i <= d; ++i) digit_place_[i] = digit_place_[i - 1] * p_;

    std::vector<std::uint64_t> g(d, 0);
    {
        std::uint64_t code = generator_code_;
        for (std::uint64_t i = 0; i < d; ++i) {
            g[i] = code % p_;
            code /= p_;
        }
    }
    std::size_t g_len = d;
    while (g_len > 0 && g[g_len - 1] == 0) --g_len;

    exp_code_.assign(order, 0);
    log_raw_.assign(size_, 0);
    std::vector<std::uint64_t> cur(d, 0), acc(d), shifted(d);
    cur[0] = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
        std::uint64_t code = 0;
        for (std::uint64_t i = 0; i < d; ++i) code += cur[i] * digit_place_[i];
        if (code == 0 || log_raw_[code] != 0) throw ConsistencyFault("generator does not have full order");
        exp_code_[k] = static_cast<std::uint32_t>(code);
        log_raw_[code] = static_cast<std::uint32_t>(k + 1);

        // cur <- cur * g mod modulus, accumulating g_t * X^t * cur
        std::fill(acc.begin(), acc.end(), 0);
        shifted = cur;
        for (std::size_t t = 0; t < g_len; ++t) {
            if (g[t] != 0)
                for (std::uint64_t i = 0; i < d; ++i) acc[i] = (acc[i] + g[t] * shifted[i]) % p_;
            if (t + 1 < g_len) {
                const std::uint64_t top = shifted[d - 1];
                for (std::uint64_t i = d - 1; i > 0; --i) shifted[i] = shifted[i - 1];
                shifted[0] = 0;
                if (top != 0)
                    for (std::uint64_t i = 0; i < d; ++i)
                        shifted[i] = (shifted[i] + (p_ - top) * modulus_[i]) % p_;
            }
        }
        cur = acc;
    }
    if (cur[0] != 1 || std::any_of(cur.begin() + 1, cur.end(), [](auto c) { return c != 0; })) {
        throw ConsistencyFault("generator power table does not close");
    }

    minus_one_ = (p_ == 2) ? one() : Elem::from_log(static_cast<std::uint32_t>(order / 2));

    zech_.assign(order, 0);
    for (std::uint64_t k = 0; k < order; ++k) {
        const std::uint64_t code = exp_code_[k];
        const std::uint64_t c0 = code % p_;
        zech_[k] = log_raw_[code - c0 + (c0 + 1) % p_];
    }

    q_pow_mod_.resize(n_);
    std::uint64_t v = 1 % order;
    for (std::uint64_t k = 0; k < n_; ++k) {
        q_pow_mod_[k] = v;
        v = static_cast<std::uint64_t>((unsigned __int128)v * q_ % order);
    }
    p_pow_mod_.resize(d);
    v = 1 % order;
    for (std::uint64_t k = 0; k < d; ++k) {
        p_pow_mod_[k] = v;
        v = static_cast<std::uint64_t>((unsigned __int128)v * p_ % order);
    }
    base_step_ = order / (q_ - 1);

    trace_.assign(size_, 0);
    for (std::uint64_t r = 1; r < size_; ++r) {
        const Elem x = element(r);
        Elem t = x;
        for (std::uint64_t i = 1; i < n_; ++i) t = add(t, frobenius(x, i));
        trace_[r] = t.raw();
    }

    prime_basis_.clear();
    for (std::uint64_t i = 0; i < d; ++i) prime_basis_.push_back(from_code(digit_place_[i]));
    base_basis_.clear();
    for (std::uint64_t i = 0; i < n_; ++i)
        base_basis_.push_back(Elem::from_log(static_cast<std::uint32_t>(i % order)));
}

Elem FieldCtx::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem FieldCtx::inv(Elem a) const {
    if (a.is_zero()) throw InvalidArgument("inversion of zero");
    return Elem::from_log(a.log() == 0 ? 0 : static_cast<std::uint32_t>(group_order() - a.log()));
}

Elem FieldCtx::pow(Elem a, std::int64_t e) const {
    if (e == 0) return one();
    if (a.is_zero()) {
        if (e < 0) throw InvalidArgument("negative power of zero");
        return a;
    }
    const auto order = static_cast<std::int64_t>(group_order());
    std::int64_t r = e % order;
    if (r < 0) r += order;
    return Elem::from_log(mulmod_order(a.log(), static_cast<std::uint64_t>(r)));
}

Elem FieldCtx::frobenius_p(Elem a, std::uint64_t k) const noexcept {
    if (a.is_zero()) return a;
    return Elem::from_log(mulmod_order(a.log(), p_pow_mod_[k % degree()]));
}

bool FieldCtx::in_subfield(Elem a, std::uint64_t d) const {
    if (d == 0 || n_ % d != 0) {
        throw InvalidArgument("subfield degree " + std::to_string(d) + " does not divide n = " +
                              std::to_string(n_));
    }
    return frobenius(a, d) == a;
}

std::optional<std::uint64_t> FieldCtx::base_log(Elem a) const noexcept {
    if (a.is_zero() || a.log() % base_step_ != 0) return std::nullopt;
    return a.log() / base_step_;
}

std::vector<Elem> FieldCtx::base_field_elements() const {
    std::vector<Elem> out{Elem::zero()};
    for (std::uint64_t j = 0; j + 1 < q_; ++j)
        out.push_back(Elem::from_log(static_cast<std::uint32_t>((j * base_step_) % group_order())));
    return out;
}

Elem FieldCtx::from_prime_field(std::uint64_t c) const { return from_code(c % p_); }

std::vector<std::uint32_t> FieldCtx::vector(Elem a) const {
    std::vector<std::uint32_t> out(degree(), 0);
    std::uint64_t code = vector_code(a);
    for (auto& digit : out) {
        digit = static_cast<std::uint32_t>(code % p_);
        code /= p_;
    }
    return out;
}

Elem FieldCtx::from_code(std::uint64_t code) const {
    if (code >= size_) throw InvalidArgument("element code " + std::to_string(code) + " out of range");
    return Elem::from_raw(log_raw_[code]);
}

Elem FieldCtx::from_vector(std::span<const std::uint32_t> digits) const {
    if (digits.size() != degree()) throw InvalidArgument("coefficient vector has wrong length");
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= p_) throw InvalidArgument("coefficient out of range");
        code += digits[i] * digit_place_[i];
    }
    return from_code(code);
}

std::size_t FieldCtx::prime_rank(std::span<const Elem> elems) const {
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(elems.size());
    for (Elem e : elems) {
        auto v = vector(e);
        rows.emplace_back(v.begin(), v.end());
    }
    const std::size_t cols = degree();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        const std::uint64_t li = inv_mod_prime(rows[rank][c], p_);
        for (auto& x : rows[rank]) x = x * li % p_;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const std::uint64_t f = rows[r][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] = (rows[r][k] + (p_ - f) * rows[rank][k]) % p_;
        }
        ++rank;
    }
    return rank;
}

}  // namespace semiswitch
