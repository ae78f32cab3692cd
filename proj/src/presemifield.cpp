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

#include "semiswitch/presemifield.hpp"

#include <numeric>
#include <string>

#include "semiswitch/errors.hpp"
#include "semiswitch/parallel.hpp"

namespace semiswitch {

namespace {

void require_spec(const SwitchSpec& spec) {
    if (!spec.field) throw InvalidArgument("switch spec without a field");
    if (spec.b.size() != spec.field->n()) throw InvalidArgument("switch spec needs n coefficients b_i");
    if (spec.xi.is_zero()) throw InvalidArgument("switch spec needs xi != 0");
}

Elem first_with_trace(const FieldCtx& F, Elem target) {
    for (std::uint64_t r = 1; r < F.size(); ++r)
        if (F.trace(F.element(r)) == target) return F.element(r);
    throw ConsistencyFault("trace map is not onto F_q");
}

bool is_power_of(std::uint64_t v, std::uint64_t p) {
    if (v == 0) return false;
    while (v % p == 0) v /= p;
    return v == 1;
}

}  // namespace

Elem trace_one_element(const FieldCtx& field) { return first_with_trace(field, field.one()); }
Elem trace_minus_one_element(const FieldCtx& field) { return first_with_trace(field, field.minus_one()); }

LinearizedPoly switch_polynomial(const SwitchSpec& spec) {
    require_spec(spec);
    const auto& F = *spec.field;
    std::vector<Elem> c(F.n());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.mul(spec.xi, spec.b[i]);
    return LinearizedPoly(spec.field, std::move(c));
}

LinearizedPoly predicate_polynomial(const SwitchSpec& spec) {
    auto M = switch_polynomial(spec);
    std::vector<Elem> c(M.coeffs().begin(), M.coeffs().end());
    c[0] = spec.field->add(c[0], trace_one_element(*spec.field));
    return LinearizedPoly(spec.field, std::move(c));
}

SwitchSpec switch_from_poly(const LinearizedPoly& L, std::optional<Elem> xi) {
    const auto& F = L.field();
    const Elem x = xi.value_or(F.one());
    if (x.is_zero()) throw InvalidArgument("xi must be nonzero");
    std::vector<Elem> b(L.coeffs().begin(), L.coeffs().end());
    b[0] = F.sub(b[0], trace_one_element(F));
    for (auto& c : b) c = F.div(c, x);
    return SwitchSpec{L.field_ptr(), std::move(b), x};
}

BinaryOp::BinaryOp(FieldPtr field, Fn fn, bool base_bilinear)
    : field_(std::move(field)), fn_(std::move(fn)), base_bilinear_(base_bilinear) {
    if (!field_) throw InvalidArgument("binary op without a field");
}

bool BinaryOp::cache_table(std::uint64_t budget) {
    if (table_) return true;
    const std::uint64_t Q = field_->size();
    if (Q > budget / Q) return false;
    auto table = std::make_shared<std::vector<Elem>>(Q * Q);
    parallel_for(Q, [&](std::uint64_t x) {
        for (std::uint64_t y = 0; y < Q; ++y) (*table)[x * Q + y] = fn_(field_->element(x), field_->element(y));
    });
    table_ = std::move(table);
    return true;
}

BinaryOp field_multiplication(const FieldPtr& field) {
    const FieldCtx* F = field.get();
    BinaryOp op(field, [F](Elem x, Elem y) { return F->mul(x, y); }, true);
    op.verified_presemifield = true;
    op.unital = true;
    return op;
}

BinaryOp build_switch(const SwitchSpec& spec) {
    require_spec(spec);
    const FieldCtx* F = spec.field.get();
    auto fn = [F, b = spec.b, xi = spec.xi](Elem x, Elem y) {
        Elem inner;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i].is_zero()) continue;
            inner = F->add(inner, F->mul(b[i], F->frobenius(y, i)));
        }
        const Elem bxy = F->trace(F->mul(x, inner));
        return F->add(F->mul(x, y), F->mul(bxy, xi));
    };
    return BinaryOp(spec.field, std::move(fn), true);
}

PresemifieldCheck check_presemifield(const BinaryOp& op) {
    const auto& F = op.field();
    const auto basis = F.prime_basis();
    const std::uint64_t Q = F.size();
    auto defective = [&](std::uint64_t r) {
        const Elem a = F.element(r + 1);
        std::vector<Elem> left, right;
        left.reserve(basis.size());
        right.reserve(basis.size());
        for (Elem e : basis) {
            left.push_back(op(e, a));
            right.push_back(op(a, e));
        }
        return F.prime_rank(left) != F.degree() || F.prime_rank(right) != F.degree();
    };
    const std::uint64_t first = parallel_find_first(Q - 1, defective);
    PresemifieldCheck out;
    if (first == Q - 1) {
        out.presemifield = true;
        return out;
    }
    const Elem a = F.element(first + 1);
    for (std::uint64_t r = 1; r < Q; ++r) {
        const Elem x = F.element(r);
        if (op(x, a).is_zero() || op(a, x).is_zero()) {
            out.zero_divisor = std::make_pair(x, a);
            break;
        }
    }
    if (!out.zero_divisor) throw ConsistencyFault("rank deficiency without a zero divisor");
    return out;
}

bool verify_presemifield(const BinaryOp& op) { return check_presemifield(op).presemifield; }

bool switch_condition(const SwitchSpec& spec) {
    const auto M = switch_polynomial(spec);
    const auto& F = *spec.field;
    for (std::uint64_t r = 1; r < F.size(); ++r)
        if (trace_quotient(M, F.element(r)) == F.minus_one()) return false;
    return true;
}

bool predicate_equivalence_check(const SwitchSpec& spec) {
    return verify_presemifield(build_switch(spec)) == switch_condition(spec);
}

BinaryOp unitalize(const BinaryOp& op) {
    const auto& F = op.field();
    const std::uint64_t Q = F.size();
    const Elem one = F.one();
    const Elem none = Elem::from_raw(static_cast<std::uint32_t>(Q));  // sentinel: unset
    auto inverse_table = [&](auto&& map, const char* what) {
        std::vector<Elem> inv(Q, none);
        for (std::uint64_t r = 0; r < Q; ++r) {
            const Elem img = map(F.element(r));
            if (inv[img.raw()] != none) throw InvalidArgument(std::string("unitalize: ") + what + " is not bijective");
            inv[img.raw()] = F.element(r);
        }
        return inv;
    };
    auto b_inv = std::make_shared<std::vector<Elem>>(inverse_table([&](Elem x) { return op(one, x); }, "x -> 1*x"));
    const auto r_inv = inverse_table([&](Elem u) { return op(u, one); }, "u -> u*1");
    auto b1 = std::make_shared<std::vector<Elem>>(Q);
    for (std::uint64_t r = 0; r < Q; ++r) (*b1)[r] = r_inv[op(one, F.element(r)).raw()];

    BinaryOp base = op;
    BinaryOp out(
        op.field_ptr(),
        [base = std::move(base), b_inv, b1](Elem x, Elem y) { return (*b_inv)[base((*b1)[x.raw()], y).raw()]; },
        op.base_bilinear());
    out.verified_presemifield = op.verified_presemifield;
    out.unital = true;
    return out;
}

NucleusMembers nucleus_members(const BinaryOp& op) {
    const auto& F = op.field();
    const auto basis = op.basis();
    const Elem one = F.one();
    for (Elem e : basis)
        if (op(one, e) != e || op(e, one) != e) throw InvalidArgument("nuclei: operation is not unital");

    const std::uint64_t Q = F.size();
    std::vector<unsigned char> flags(Q, 0);
    parallel_for(Q, [&](std::uint64_t r) {
        const Elem a = F.element(r);
        bool left = true, middle = true, right = true, comm = true;
        for (Elem x : basis) {
            if (comm && op(a, x) != op(x, a)) comm = false;
            for (Elem y : basis) {
                if (left && op(op(a, x), y) != op(a, op(x, y))) left = false;
                if (middle && op(op(x, a), y) != op(x, op(a, y))) middle = false;
                if (right && op(op(x, y), a) != op(x, op(y, a))) right = false;
            }
        }
        flags[r] = static_cast<unsigned char>(left | (middle << 1) | (right << 2) | (comm << 3));
    });
    NucleusMembers out;
    for (std::uint64_t r = 0; r < Q; ++r) {
        const Elem a = F.element(r);
        const unsigned f = flags[r];
        if (f & 1) out.left.push_back(a);
        if (f & 2) out.middle.push_back(a);
        if (f & 4) out.right.push_back(a);
        if ((f & 15) == 15) out.center.push_back(a);
    }
    return out;
}

Nuclei nuclei(const BinaryOp& op) {
    const auto members = nucleus_members(op);
    const auto& F = op.field();
    Nuclei out{members.left.size(), members.middle.size(), members.right.size(), members.center.size()};
    for (std::uint64_t v : {out.left, out.middle, out.right, out.center}) {
        if (!is_power_of(v, F.p()) || F.size() % v != 0) {
            throw ConsistencyFault("nucleus of size " + std::to_string(v) + " is not a subfield of F_" +
                                   std::to_string(F.size()));
        }
    }
    return out;
}

bool is_commutative(const BinaryOp& op) {
    const auto basis = op.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (op(basis[i], basis[j]) != op(basis[j], basis[i])) return false;
    return true;
}

bool commutative_criterion(const SwitchSpec& spec) {
    require_spec(spec);
    const auto& F = *spec.field;
    const std::size_t n = spec.b.size();
    for (std::size_t i = 1; i < n; ++i)
        if (spec.b[i] != F.frobenius(spec.b[n - i], i)) return false;
    return true;
}

UnitalMap::UnitalMap(const SwitchSpec& spec) : field_(spec.field), xi_(spec.xi) {
    require_spec(spec);
    const auto& F = *field_;
    Elem t;
    for (Elem b : spec.b) t = F.add(t, b);
    const Elem denom = F.add(F.one(), F.trace(F.mul(t, xi_)));
    if (denom.is_zero()) throw InvalidArgument("unital map: 1 + Tr(t xi) = 0, so 1*1 = 0");
    s_ = F.neg(F.div(t, denom));
}

Elem UnitalMap::operator()(Elem x) const {
    const auto& F = *field_;
    return F.add(x, F.mul(F.trace(F.mul(s_, x)), xi_));
}

UnitalMap unital_A(const SwitchSpec& spec) { return UnitalMap(spec); }

namespace {

template <class AMap>
bool ganley_identity(const BinaryOp& op, const AMap& A, Elem v) {
    const auto basis = op.basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Elem avx = A(op(v, basis[i]));
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (op(avx, basis[j]) != op(A(op(v, basis[j])), basis[i])) return false;
        }
    }
    return true;
}

template <class AMap>
GanleyResult ganley_scan(const BinaryOp& op, const AMap& A) {
    const auto& F = op.field();
    const std::uint64_t count = F.size() - 1;
    const std::uint64_t first = parallel_find_first(count, [&](std::uint64_t r) {
        return ganley_identity(op, A, F.element(r + 1));
    });
    GanleyResult out;
    if (first < count) {
        out.isotopic_to_commutative = true;
        out.witness = F.element(first + 1);
    }
    return out;
}

}  // namespace

GanleyResult ganley_bierbrauer_test(const BinaryOp& op) {
    const auto& F = op.field();
    const std::uint64_t Q = F.size();
    const Elem none = Elem::from_raw(static_cast<std::uint32_t>(Q));
    std::vector<Elem> a_table(Q, none);
    for (std::uint64_t r = 0; r < Q; ++r) {
        const Elem img = op(F.element(r), F.one());
        if (a_table[img.raw()] != none) throw InvalidArgument("ganley test: u -> u*1 is not bijective");
        a_table[img.raw()] = F.element(r);
    }
    return ganley_scan(op, [&](Elem x) { return a_table[x.raw()]; });
}

GanleyResult ganley_bierbrauer_test(const SwitchSpec& spec) {
    const auto op = build_switch(spec);
    const UnitalMap A(spec);
    return ganley_scan(op, A);
}

bool ganley_witness(const SwitchSpec& spec, Elem v) {
    if (v.is_zero()) return false;
    const auto op = build_switch(spec);
    return ganley_identity(op, UnitalMap(spec), v);
}

BinaryOp dual_spread_op(const FieldPtr& field, Elem a1, Elem a0_tilde) {
    if (field->n() != 4) throw InvalidArgument("dual spread operation needs n = 4");
    const FieldCtx* F = field.get();
    auto fn = [F, a1, a0_tilde](Elem x, Elem y) {
        const Elem lin = F->add(F->mul(a1, F->frobenius(y, 2)), F->mul(a0_tilde, y));
        return F->add(F->mul(x, y), F->mul(lin, F->trace(x)));
    };
    return BinaryOp(field, std::move(fn), true);
}

}  // namespace semiswitch
