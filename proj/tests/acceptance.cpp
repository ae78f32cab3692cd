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

// Acceptance gate. Each criterion prints one PASS/FAIL line with its runtime
// and writes its results as JSON lines under <outdir>/run1. Criterion 10
// reruns 1-9 into <outdir>/run2 and compares the files byte for byte.
//
//   acceptance [outdir]        (default: ./acceptance_results)
//   SEMISWITCH_ACCEPT_FULL=1   also runs the 2^25-candidate search at p=2, n=5

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "semiswitch/codes.hpp"
#include "semiswitch/digits.hpp"
#include "semiswitch/families.hpp"
#include "semiswitch/hws.hpp"
#include "semiswitch/presemifield.hpp"
#include "semiswitch/serialize.hpp"

namespace fs = std::filesystem;
using namespace semiswitch;

namespace {

const std::vector<std::uint64_t> kF64Modulus{1, 1, 0, 1, 1, 0, 1};

bool full_run() {
    const char* v = std::getenv("SEMISWITCH_ACCEPT_FULL");
    return v && std::string(v) == "1";
}

/// Collects result lines for one criterion and the failures found along the way.
class Record {
   public:
    void line(const Json& j) { text_ += j.dump() + "\n"; }
    void fail(const std::string& why) {
        if (failures_.size() < 5) failures_.push_back(why);
        ++failure_count_;
    }
    bool ok() const { return failure_count_ == 0; }
    std::string summary() const {
        std::string s = std::to_string(failure_count_) + " violation(s)";
        for (const auto& f : failures_) s += "; " + f;
        return s;
    }
    const std::string& text() const { return text_; }

   private:
    std::string text_;
    std::vector<std::string> failures_;
    std::uint64_t failure_count_ = 0;
};

/// Predicate-true L shared between criteria 2, 3, 5 and 9.
struct Shared {
    std::vector<LinearizedPoly> c2, c3, c5;
};

// 1: presemifield ⇔ ∀a≠0 Tr(M(a)/a) ≠ -1, over every spec (b, ξ).
void criterion1(Record& rec, Shared&) {
    for (auto [p, n] : {std::pair{2u, 3u}, {3u, 2u}}) {
        const auto F = FieldCtx::build(p, 1, n);
        std::uint64_t specs = 0, presemifields = 0, mismatches = 0;
        std::vector<Elem> b(n);
        std::vector<std::uint64_t> idx(n, 0);
        const std::uint64_t tuples = [&] {
            std::uint64_t t = 1;
            for (unsigned i = 0; i < n; ++i) t *= F->size();
            return t;
        }();
        for (std::uint64_t code = 0; code < tuples; ++code) {
            std::uint64_t c = code;
            for (unsigned i = 0; i < n; ++i, c /= F->size()) b[i] = F->element(c % F->size());
            for (std::uint32_t k = 0; k < F->group_order(); ++k) {
                const SwitchSpec spec{F, b, Elem::from_log(k)};
                const bool ps = verify_presemifield(build_switch(spec));
                const bool cond = switch_condition(spec);
                ++specs;
                presemifields += ps;
                if (ps != cond) {
                    ++mismatches;
                    rec.fail("q=" + std::to_string(p) + " spec " + spec_to_json(spec).dump());
                }
            }
        }
        rec.line({{"q", p}, {"n", n}, {"specs", specs}, {"presemifields", presemifields}, {"mismatches", mismatches}});
    }
}

// 2: n2_criterion = predicate on all 6561 pairs at q = 9, n = 2.
void criterion2(Record& rec, Shared& shared) {
    const auto F = FieldCtx::build(3, 2, 2);
    std::uint64_t pairs = 0, true_count = 0;
    for (std::uint64_t r = 0; r < F->size(); ++r)
        for (std::uint64_t s = 0; s < F->size(); ++s) {
            const Elem a1 = F->element(r), a0 = F->element(s);
            const auto L = n2_instance(F, a1, a0).L;
            const bool pred = switching_predicate(L), crit = n2_criterion(*F, a1, a0);
            ++pairs;
            if (pred != crit) rec.fail("a1=" + elem_to_json(a1).dump() + " a0=" + elem_to_json(a0).dump());
            if (pred) {
                ++true_count;
                shared.c2.push_back(L);
            }
        }
    rec.line({{"pairs", pairs}, {"predicate_true", true_count}});
}

// 3: q=3, n=4: criterion-true ⇒ predicate-true (exhaustive); 2000 criterion-false ⇒ predicate-false.
void criterion3(Record& rec, Shared& shared) {
    const auto F = FieldCtx::build(3, 1, 4);
    std::vector<Elem> hyperplane;
    for (std::uint64_t r = 0; r < F->size(); ++r)
        if (F->trace(F->element(r)).is_zero()) hyperplane.push_back(F->element(r));
    if (hyperplane.size() != 27) rec.fail("trace-zero hyperplane has " + std::to_string(hyperplane.size()) + " elements");
    std::uint64_t criterion_true = 0;
    for (std::uint32_t k = 0; k < F->group_order(); ++k) {
        const Elem a1 = Elem::from_log(k);
        for (Elem a0 : hyperplane) {
            if (!n4_criterion(*F, a1, a0)) continue;
            ++criterion_true;
            const auto L = n4_instance(F, a1, a0).L;
            if (!switching_predicate(L)) rec.fail("criterion-true " + poly_to_json(L).dump() + " fails the predicate");
            shared.c3.push_back(L);
        }
    }
    std::mt19937_64 rng(20260);
    std::uint64_t sampled = 0;
    while (sampled < 2000) {
        const Elem a1 = random_nonzero(*F, rng), a0 = random_element(*F, rng);
        if (n4_criterion(*F, a1, a0)) continue;
        ++sampled;
        const auto L = n4_instance(F, a1, a0).L;
        if (switching_predicate(L)) rec.fail("criterion-false " + poly_to_json(L).dump() + " satisfies the predicate");
    }
    rec.line({{"criterion_true", criterion_true}, {"criterion_false_sampled", sampled}, {"seed", 20260}});
}

// 4: q=3 commutative instance: Ganley-true, nuclei (3, 9, 3).
void criterion4(Record& rec, Shared&) {
    const auto F = FieldCtx::build(3, 1, 4);
    const auto inst = n4_commutative_reference(F);
    auto op = n4_commutative_construct(F, inst.params[0], inst.params[1]);
    op.cache_table();
    const auto g = ganley_bierbrauer_test(op);
    const auto nu = nuclei(unitalize(op));
    if (!g.isotopic_to_commutative) rec.fail("Ganley test is false");
    if (nu.left != 3 || nu.middle != 9 || nu.right != 3)
        rec.fail("nuclei " + nuclei_to_json(nu).dump() + " differ from (3, 9, 3)");
    rec.line({{"field", field_to_json(*F)}, {"instance", family_to_json(inst)}, {"ganley", ganley_to_json(g)},
              {"nuclei", nuclei_to_json(nu)}});
}

// 5: q=4, n=3 instance: predicate-true, presemifield-true, Ganley-false.
void criterion5(Record& rec, Shared& shared) {
    const auto F = FieldCtx::build(2, 2, 3, kF64Modulus);
    const Elem u = Elem::from_log(5), v = Elem::from_log(1), theta = Elem::from_log(62);
    const auto thetas = n3_theta_set(*F, u, v);
    if (std::find(thetas.begin(), thetas.end(), theta) == thetas.end()) {
        rec.fail("theta is not in the admissible set");
        return;
    }
    const auto inst = n3_construct(F, u, v, theta, F->one());
    const bool pred = switching_predicate(inst.L);
    auto op = build_switch(inst.spec);
    op.cache_table();
    const bool ps = verify_presemifield(op);
    const auto g = ganley_bierbrauer_test(op);
    if (!pred) rec.fail("predicate is false");
    if (!ps) rec.fail("not a presemifield");
    if (g.isotopic_to_commutative) rec.fail("Ganley test found witness " + elem_to_json(*g.witness).dump());
    if (pred) shared.c5.push_back(inst.L);
    rec.line({{"field", field_to_json(*F)}, {"instance", family_to_json(inst)}, {"predicate", pred},
              {"presemifield", ps}, {"ganley", ganley_to_json(g)}});
}

// 6: p=2: every predicate-true L is a trace-one monomial.
void criterion6(Record& rec, Shared&) {
    std::vector<unsigned> degrees{3, 4};
    if (full_run()) degrees.push_back(5);
    for (unsigned n : degrees) {
        const auto F = FieldCtx::build(2, 1, n);
        SearchOptions o;
        o.support = full_support(n);
        const auto start = std::chrono::steady_clock::now();
        const auto r = search(F, o);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const double limit = n == 3 ? 1.0 : n == 4 ? 10.0 : 600.0;
        if (secs > limit) rec.fail("n=" + std::to_string(n) + " search exceeded " + std::to_string(limit) + " s");
        std::uint64_t good = 0;
        for (const auto& L : r.found)
            if (L.is_scalar() && F->trace(L.coeff(0)) == F->one()) ++good;
        const std::uint64_t expected = std::uint64_t{1} << (n - 1);
        if (good != expected || r.found.size() != expected)
            rec.fail("n=" + std::to_string(n) + ": " + std::to_string(r.found.size()) + " found");
        Json found = Json::array();
        for (const auto& L : r.found) found.push_back(poly_to_json(L));
        rec.line({{"p", 2}, {"n", n}, {"candidates", r.candidates}, {"found", found}});
    }
}

// 7: digit machinery and C(α) against the expansion oracle.
void criterion7(Record& rec, Shared&) {
    const auto ad = asc_des({2, 0, 1, 1, 3, 0});
    if (ad.asc != std::vector<std::size_t>{0, 0, 2, 4, 4} || ad.des != std::vector<std::size_t>{1, 1, 5, 5, 5} || ad.count != 5)
        rec.fail("asc_des worked example");
    if (s_digits(1, 3, 4) != DigitVector{0, 1, 1, 1}) rec.fail("s(1,3)");
    if (s_digits(3, 2, 4) != DigitVector{1, 0, 0, 1}) rec.fail("s(3,2)");
    for (auto [p, n] : {std::pair{2u, 4u}, {3u, 3u}}) {
        const auto F = FieldCtx::build(p, 1, n);
        std::mt19937_64 rng(7000 + p);
        std::uint64_t compared = 0, mismatches = 0;
        for (int t = 0; t < 100; ++t) {
            std::vector<Elem> a(n);
            for (auto& e : a) e = random_element(*F, rng);
            const LinearizedPoly L(F, a);
            const auto coeffs = expansion_oracle(L);
            const auto all = c_alpha_all(L);
            for (std::uint64_t alpha = 0; alpha < all.size(); ++alpha) {
                ++compared;
                if (all[alpha] != coeffs[alpha * (F->q() - 1)]) {
                    ++mismatches;
                    rec.fail("q=" + std::to_string(p) + " L=" + poly_to_json(L).dump() + " alpha=" + std::to_string(alpha));
                }
            }
        }
        rec.line({{"q", p}, {"n", n}, {"seed", 7000 + p}, {"compared", compared}, {"mismatches", mismatches}});
    }
}

// 8: code dimension and full-weight non-constant words versus the polynomial search.
void criterion8(Record& rec, Shared&) {
    for (auto [q, n] : {std::pair{2u, 3u}, {3u, 2u}, {3u, 3u}, {4u, 2u}}) {
        const auto d = code_dimension(q, n);
        if (d != n * n - n + 1) rec.fail("dimension at q=" + std::to_string(q));
        rec.line({{"q", q}, {"n", n}, {"dimension", d}});
    }
    struct Case {
        std::uint64_t p, m, n;
        bool expect;
    };
    for (const auto& c : {Case{3, 1, 2, true}, Case{2, 2, 3, true}, Case{2, 1, 3, false}}) {
        const auto F = c.m == 2 && c.n == 3 ? FieldCtx::build(c.p, c.m, c.n, kF64Modulus) : FieldCtx::build(c.p, c.m, c.n);
        const auto fw = full_weight_search(F);
        SearchOptions o;
        o.support = full_support(c.n);
        const auto r = search(F, o);
        std::uint64_t non_monomial = 0;
        for (const auto& L : r.found) non_monomial += !L.is_scalar();
        const bool codes_say = fw.full_weight_nonconstant > 0, search_says = non_monomial > 0;
        if (codes_say != c.expect || search_says != c.expect)
            rec.fail("q=" + std::to_string(F->q()) + " n=" + std::to_string(c.n) + " disagrees");
        if (fw.full_weight_constant + fw.full_weight_nonconstant != r.found.size())
            rec.fail("q=" + std::to_string(F->q()) + " full-weight count differs from the search count");
        rec.line({{"q", F->q()}, {"n", c.n}, {"full_weight", full_weight_to_json(fw)}, {"search_found", r.found.size()},
                  {"search_non_monomial", non_monomial}});
    }
}

// 9: point-count conditions on every predicate-true L of 2, 3, 5; Serre band on random L.
void criterion9(Record& rec, Shared& shared) {
    auto check_set = [&](const char* name, const std::vector<LinearizedPoly>& set) {
        std::uint64_t checked = 0, with_curve = 0;
        for (const auto& L : set) {
            const FieldCtx& F = L.field();
            ++checked;
            const bool tz = F.trace(L.coeff(0)).is_zero();
            const auto points = point_count(L);
            if (points != (tz ? F.q() + 1 : 1)) rec.fail(std::string(name) + " points " + poly_to_json(L).dump());
            if (L.is_scalar()) continue;
            ++with_curve;
            const auto h = verdicts(L);
            if (h.triggered()) rec.fail(std::string(name) + " triggered " + poly_to_json(L).dump());
            if (h.ell < h.threshold()) rec.fail(std::string(name) + " below threshold " + poly_to_json(L).dump());
        }
        rec.line({{"set", name}, {"checked", checked}, {"non_scalar", with_curve}});
    };
    check_set("criterion2", shared.c2);
    check_set("criterion3", shared.c3);
    check_set("criterion5", shared.c5);

    const auto F34 = FieldCtx::build(3, 1, 4);
    const auto x9 = verdicts(LinearizedPoly::monomial(F34, 2, F34->one()));
    if (x9.ell != 8 || x9.thresholds.case_zero_trace != 6) rec.fail("support {2} at (3,4): ell/threshold");
    rec.line({{"example", "q=3 n=4 support {2}"}, {"hws", hws_to_json(x9)}});

    const auto F = FieldCtx::build(3, 1, 2);
    std::mt19937_64 rng(9009);
    std::uint64_t sampled = 0;
    while (sampled < 500) {
        const LinearizedPoly L(F, {random_element(*F, rng), random_element(*F, rng)});
        if (L.is_scalar()) continue;
        ++sampled;
        const auto h = verdicts(L);
        const auto dev = static_cast<std::int64_t>(h.points) - static_cast<std::int64_t>(F->size() + 1);
        if (static_cast<std::uint64_t>(dev < 0 ? -dev : dev) > h.genus * h.serre)
            rec.fail("Serre band " + poly_to_json(L).dump());
    }
    rec.line({{"serre_band_sampled", sampled}, {"seed", 9009}});
}

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Record&, Shared&)> run;
};

std::vector<Criterion> criteria() {
    return {
        {1, "presemifield iff trace condition over all specs at (2,3), (3,2)", 60, criterion1},
        {2, "n=2 criterion equals the predicate on all 6561 pairs at q=9", 5, criterion2},
        {3, "n=4 criterion: all true pairs hold, 2000 false pairs fail (q=3)", 120, criterion3},
        {4, "q=3 commutative instance: Ganley true, nuclei (3,9,3)", 60, criterion4},
        {5, "q=4 n=3 instance: predicate, presemifield, not Ganley", 120, criterion5},
        {6, std::string("p=2 survivors are the 2^{n-1} trace-one monomials (n=3,4") + (full_run() ? ",5)" : ")"),
         full_run() ? 600.0 : 10.0, criterion6},
        {7, "digit machinery and C(alpha) = expansion coefficients", 60, criterion7},
        {8, "code dimension and full-weight words match the search", 120, criterion8},
        {9, "point-count verdicts, thresholds and Serre band", 120, criterion9},
    };
}

struct Outcome {
    bool pass;
    double seconds;
    std::string detail;
};

Outcome run_one(const Criterion& c, Shared& shared, const fs::path& dir) {
    Record rec;
    const auto start = std::chrono::steady_clock::now();
    try {
        c.run(rec, shared);
    } catch (const std::exception& e) {
        rec.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ofstream(dir / ("criterion" + std::to_string(c.id) + ".jsonl"), std::ios::binary) << rec.text();
    bool pass = rec.ok();
    std::string detail = rec.ok() ? "" : rec.summary();
    if (secs > c.limit_seconds) {
        pass = false;
        detail += (detail.empty() ? "" : "; ") + std::string("runtime limit exceeded");
    }
    return {pass, secs, detail};
}

std::string read_file(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

void report(int id, const std::string& title, const Outcome& o, double limit) {
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << "  (" << o.seconds << " s";
    if (limit > 0) line << ", limit " << limit << " s";
    line << ")";
    if (!o.detail.empty()) line << "  -- " << o.detail;
    std::cout << line.str() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
    const fs::path out = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_results");
    const fs::path run1 = out / "run1", run2 = out / "run2";
    fs::create_directories(run1);
    fs::create_directories(run2);

    bool all = true;
    Shared shared;
    for (const auto& c : criteria()) {
        const auto o = run_one(c, shared, run1);
        report(c.id, c.title, o, c.limit_seconds);
        all = all && o.pass;
    }

    // 10: rerun with identical seeds and compare every result file
    const auto start = std::chrono::steady_clock::now();
    Shared again;
    std::string diffs;
    for (const auto& c : criteria()) {
        run_one(c, again, run2);
        const std::string name = "criterion" + std::to_string(c.id) + ".jsonl";
        if (read_file(run1 / name) != read_file(run2 / name) || read_file(run1 / name).empty())
            diffs += (diffs.empty() ? "" : ", ") + name;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Outcome o10{diffs.empty(), secs, diffs.empty() ? "" : "differing or empty: " + diffs};
    report(10, "rerun of criteria 1-9 gives byte-identical result files", o10, 0);
    all = all && o10.pass;

    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILED") << std::endl;
    return all ? 0 : 1;
}
