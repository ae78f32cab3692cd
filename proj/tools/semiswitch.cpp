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

// semiswitch: search, verify and report on switchings x*y = xy + B(x,y)ξ of F_{q^n}.
//
// Every command writes JSON lines (or a CSV view with --format csv): a "run"
// header echoing the configuration, one record per result, and a summary.
// Exit status: 0 ok, 2 invalid input, 3 budget exceeded, 4 consistency fault.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "semiswitch/codes.hpp"
#include "semiswitch/digits.hpp"
#include "semiswitch/errors.hpp"
#include "semiswitch/families.hpp"
#include "semiswitch/hws.hpp"
#include "semiswitch/linpoly.hpp"
#include "semiswitch/presemifield.hpp"
#include "semiswitch/serialize.hpp"

namespace {

using namespace semiswitch;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitFault = 4;

/// "123", "10^6", "2^25" or "1e6".
std::uint64_t parse_count(const std::string& text) {
    auto number = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidArgument("cannot parse count \"" + text + "\"");
        return std::stoull(s);
    };
    if (auto pos = text.find('^'); pos != std::string::npos) {
        auto v = gf::checked_pow(number(text.substr(0, pos)), number(text.substr(pos + 1)), ~std::uint64_t{0} >> 1);
        if (!v) throw InvalidArgument("count \"" + text + "\" overflows");
        return *v;
    }
    if (auto pos = text.find_first_of("eE"); pos != std::string::npos) {
        auto v = gf::checked_pow(10, number(text.substr(pos + 1)), ~std::uint64_t{0} >> 1);
        if (!v) throw InvalidArgument("count \"" + text + "\" overflows");
        return number(text.substr(0, pos)) * *v;
    }
    return number(text);
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split(text)) out.push_back(parse_count(item));
    return out;
}

/// Discrete logs, with "null", "-" or "z" for zero.
std::vector<Elem> parse_elems(const FieldCtx& F, const std::string& text) {
    std::vector<Elem> out;
    for (const auto& item : split(text)) {
        if (item == "null" || item == "-" || item == "z") {
            out.push_back(Elem::zero());
            continue;
        }
        out.push_back(elem_from_json(F, Json(parse_count(item))));
    }
    return out;
}

std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    if (const char* v = std::getenv(name); v && *v) return parse_count(v);
    return fallback;
}

std::uint64_t isqrt(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

struct Common {
    std::uint64_t p = 0, m = 1, n = 0;
    std::string modulus;
    std::optional<std::uint64_t> generator;
    std::string table_cap_text;
    std::string out;
    std::string format = "jsonl";

    std::uint64_t table_cap() const {
        return table_cap_text.empty() ? env_or("SEMISWITCH_TABLE_CAP", kDefaultTableBudget) : parse_count(table_cap_text);
    }
    FieldPtr field() const {
        if (p == 0 || n == 0) throw InvalidArgument("--p and --n are required");
        std::optional<std::vector<std::uint64_t>> mod;
        if (!modulus.empty()) mod = parse_u64_list(modulus);
        return FieldCtx::build(p, m, n, mod, generator);
    }
};

void add_field_options(CLI::App* cmd, Common& c, bool required) {
    auto* p = cmd->add_option("--p", c.p, "characteristic");
    auto* n = cmd->add_option("--n", c.n, "extension degree over F_q");
    if (required) {
        p->required();
        n->required();
    }
    cmd->add_option("--m", c.m, "q = p^m")->capture_default_str();
    cmd->add_option("--modulus", c.modulus, "monic irreducible c_0,...,c_{mn} over F_p (default: smallest)");
    cmd->add_option("--generator", c.generator, "F_p-vector code of the primitive element (default: smallest)");
}

void add_output_options(CLI::App* cmd, Common& c) {
    cmd->add_option("--out", c.out, "output file (default: stdout)");
    cmd->add_option("--format", c.format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
    cmd->add_option("--table-cap", c.table_cap_text,
                    "max multiplication-table entries; heavy checks need q^{2n} within it (env SEMISWITCH_TABLE_CAP)");
}

class Output {
   public:
    void line(const Json& j) { text_ += j.dump() + "\n"; }
    void raw(const std::string& s) { text_ += s + "\n"; }
    void flush(const std::string& path) const {
        if (path.empty()) {
            std::cout << text_ << std::flush;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw InvalidArgument("cannot open output file " + path);
        f << text_;
    }

   private:
    std::string text_;
};

Json run_header(const std::string& command, const FieldCtx* field, Json extra) {
    Json config;
    config["command"] = command;
    if (field) config["field"] = field_to_json(*field);
    for (auto& [k, v] : extra.items()) config[k] = v;
    Json j;
    j["type"] = "run";
    j["config"] = config;
    return j;
}

std::string csv_elem(Elem e) { return e.is_zero() ? "" : std::to_string(e.log()); }

std::string csv_opt(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

// --------------------------------------------------------------------- search

struct SearchArgs {
    Common common;
    std::string mask;
    bool exhaustive = false, random = false;
    std::uint64_t seed = 0;
    std::string budget;
};

int cmd_search(const SearchArgs& a) {
    const auto field = a.common.field();
    const FieldCtx& F = *field;
    SearchOptions opt;
    opt.support = a.mask.empty() ? full_support(F.n()) : [&] {
        std::vector<std::size_t> s;
        for (auto v : parse_u64_list(a.mask)) s.push_back(v);
        return s;
    }();
    opt.mode = a.random ? SearchMode::random : SearchMode::exhaustive;
    opt.seed = a.seed;
    opt.budget = a.budget.empty() ? env_or("SEMISWITCH_SEARCH_BUDGET", kDefaultSearchBudget) : parse_count(a.budget);
    const std::uint64_t table_cap = a.common.table_cap();
    const std::uint64_t heavy_cap = isqrt(table_cap);

    Json extra;
    extra["mask"] = opt.support;
    extra["mode"] = a.random ? "random" : "exhaustive";
    extra["seed"] = opt.seed;
    extra["budget"] = opt.budget;
    extra["table_cap"] = table_cap;

    const auto result = search(field, opt);
    Output out;
    std::uint64_t monomials = 0;
    Json family_counts = Json::object();
    for (auto k : {FamilyKind::N2, FamilyKind::N3, FamilyKind::N4}) family_counts[std::string(family_name(k))] = 0;

    if (a.common.format == "csv") {
        std::string head = "index";
        for (std::size_t i = 0; i < F.n(); ++i) head += ",a_" + std::to_string(i);
        out.raw(head + ",monomial,families,commutative,presemifield,ganley,nuclei_l,nuclei_m,nuclei_r,center");
    } else {
        out.line(run_header("search", &F, extra));
    }
    for (std::size_t idx = 0; idx < result.found.size(); ++idx) {
        const auto& L = result.found[idx];
        if (!is_permutation(L)) {
            throw ConsistencyFault("predicate-true L is not a permutation",
                                   Json{{"field", field_to_json(F)}, {"L", poly_to_json(L)}}.dump());
        }
        const auto c = classify(L, heavy_cap);
        if (c.monomial) ++monomials;
        for (auto k : c.families) family_counts[std::string(family_name(k))] = family_counts[std::string(family_name(k))].get<std::uint64_t>() + 1;
        if (a.common.format == "csv") {
            std::string row = std::to_string(idx);
            for (Elem e : L.coeffs()) row += "," + csv_elem(e);
            std::string fams;
            for (auto k : c.families) fams += (fams.empty() ? "" : ";") + std::string(family_name(k));
            row += std::string(",") + (c.monomial ? "true" : "false") + "," + fams + "," +
                   (c.commutative ? "true" : "false") + "," + csv_opt(c.presemifield) + "," +
                   csv_opt(c.ganley ? std::optional<bool>(c.ganley->isotopic_to_commutative) : std::nullopt);
            if (c.nuclei) {
                row += "," + std::to_string(c.nuclei->left) + "," + std::to_string(c.nuclei->middle) + "," +
                       std::to_string(c.nuclei->right) + "," + std::to_string(c.nuclei->center);
            } else {
                row += ",,,,";
            }
            out.raw(row);
        } else {
            Json j;
            j["type"] = "result";
            j["index"] = idx;
            j["L"] = poly_to_json(L);
            j["classification"] = classification_to_json(c);
            out.line(j);
        }
    }
    if (a.common.format != "csv") {
        Json s;
        s["type"] = "summary";
        s["candidates"] = result.candidates;
        s["found"] = result.found.size();
        s["monomial"] = monomials;
        s["non_monomial"] = result.found.size() - monomials;
        s["families"] = family_counts;
        out.line(s);
    }
    out.flush(a.common.out);
    return kExitOk;
}

// ------------------------------------------------------------ input handling

struct InputItem {
    FieldPtr field;
    LinearizedPoly L;
    Json origin;  // family tag and params when the item came from a family line
    std::optional<LinearizedPoly> family_L;  // rebuilt from family+params when the line also carries L
    std::optional<bool> recorded_predicate;  // "predicate" or "classification.predicate" from an earlier run
};

/// JSON lines; a line with "field" (or "config.field") sets the current field,
/// lines with "L" or "family"+"params" produce polynomials. Recorded predicates
/// and family parameters on an L line are kept so verify can re-check them.
std::vector<InputItem> read_items(const std::string& path, FieldPtr current) {
    std::ifstream f(path);
    if (!f) throw InvalidArgument("cannot open input file " + path);
    std::vector<InputItem> items;
    std::string text;
    for (std::size_t lineno = 1; std::getline(f, text); ++lineno) {
        if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidArgument(path + ":" + std::to_string(lineno) + ": malformed JSON: " + e.what());
        }
        if (!j.is_object()) throw InvalidArgument(path + ":" + std::to_string(lineno) + ": expected an object");
        try {
            if (j.contains("field")) current = field_from_json(j.at("field"));
            else if (j.contains("config") && j.at("config").contains("field"))
                current = field_from_json(j.at("config").at("field"));
            Json origin;
            std::optional<LinearizedPoly> L, family_L;
            if (j.contains("L")) {
                if (!current) throw InvalidArgument("polynomial given before any field");
                L = poly_from_json(current, j.at("L"));
            }
            if (j.contains("family") && j.contains("params")) {
                if (!current) throw InvalidArgument("family instance given before any field");
                const auto kind = family_from_name(j.at("family").get<std::string>());
                if (!kind) throw InvalidArgument("unknown family " + j.at("family").dump());
                const auto ps = elems_from_json(*current, j.at("params"));
                auto need = [&](std::size_t k) {
                    if (ps.size() != k) throw InvalidArgument("family needs " + std::to_string(k) + " params");
                };
                switch (*kind) {
                    case FamilyKind::N2: need(2); family_L = n2_instance(current, ps[0], ps[1]).L; break;
                    case FamilyKind::N3: need(4); family_L = n3_construct(current, ps[0], ps[1], ps[2], ps[3]).L; break;
                    case FamilyKind::N4: need(2); family_L = n4_instance(current, ps[0], ps[1]).L; break;
                    case FamilyKind::N4_COMMUTATIVE: need(2); family_L = n4_commutative_instance(current, ps[0], ps[1]).L; break;
                }
            }
            if (j.contains("family")) {
                origin["family"] = j.at("family");
                if (j.contains("params")) origin["params"] = j.at("params");
            }
            std::optional<bool> recorded;
            if (j.contains("predicate") && j.at("predicate").is_boolean()) recorded = j.at("predicate").get<bool>();
            else if (j.contains("classification") && j.at("classification").contains("predicate"))
                recorded = j.at("classification").at("predicate").get<bool>();
            if (L) items.push_back({current, std::move(*L), origin, std::move(family_L), recorded});
            else if (family_L) items.push_back({current, std::move(*family_L), origin, std::nullopt, recorded});
        } catch (const InvalidArgument& e) {
            throw InvalidArgument(path + ":" + std::to_string(lineno) + ": " + e.what());
        } catch (const nlohmann::json::exception& e) {
            throw InvalidArgument(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return items;
}

std::vector<InputItem> gather_items(const Common& common, const std::string& in, const std::string& inline_L) {
    FieldPtr field;
    if (common.p != 0) field = common.field();
    std::vector<InputItem> items;
    if (!in.empty()) items = read_items(in, field);
    if (!inline_L.empty()) {
        if (!field) throw InvalidArgument("--L needs --p and --n");
        items.push_back({field, LinearizedPoly(field, parse_elems(*field, inline_L)), Json(), std::nullopt, std::nullopt});
    }
    if (items.empty()) throw InvalidArgument("no polynomials given (use --in or --L)");
    return items;
}

// --------------------------------------------------------------------- verify

struct VerifyArgs {
    Common common;
    std::string in;
    std::string L;
};

int cmd_verify(const VerifyArgs& a) {
    const auto items = gather_items(a.common, a.in, a.L);
    const std::uint64_t table_cap = a.common.table_cap();
    const std::uint64_t heavy_cap = isqrt(table_cap);
    Output out;
    Json extra;
    extra["table_cap"] = table_cap;
    out.line(run_header("verify", a.common.p ? a.common.field().get() : nullptr, extra));
    std::vector<Json> faults;
    std::uint64_t predicate_true = 0;

    for (std::size_t idx = 0; idx < items.size(); ++idx) {
        const auto& item = items[idx];
        const FieldCtx& F = *item.field;
        const auto& L = item.L;
        Json rec;
        rec["type"] = "verify";
        rec["index"] = idx;
        rec["field"] = field_to_json(F);
        if (!item.origin.is_null()) rec["origin"] = item.origin;
        rec["L"] = poly_to_json(L);
        auto fault = [&](const std::string& what) {
            Json w;
            w["type"] = "fault";
            w["index"] = idx;
            w["what"] = what;
            w["field"] = field_to_json(F);
            w["L"] = poly_to_json(L);
            faults.push_back(w);
        };

        const auto witness = predicate_witness(L);
        const bool predicate = !witness;
        predicate_true += predicate;
        rec["predicate"] = predicate;
        rec["predicate_witness"] = witness ? elem_to_json(*witness) : Json(nullptr);
        rec["permutation"] = is_permutation(L);
        if (predicate && !rec["permutation"].get<bool>()) fault("predicate-true L is not a permutation");
        if (item.recorded_predicate && *item.recorded_predicate != predicate) fault("recorded predicate disagrees with recomputation");
        if (item.family_L && *item.family_L != L) fault("L differs from the polynomial of its family parameters");

        const auto c = classify(L, heavy_cap);
        const auto op = build_switch(c.spec);
        rec["commutative"] = c.commutative;
        rec["commutative_criterion"] = commutative_criterion(c.spec);
        if (c.commutative != rec["commutative_criterion"].get<bool>()) fault("commutativity check disagrees with the coefficient criterion");
        rec["spec"] = spec_to_json(c.spec);
        rec["monomial"] = c.monomial;
        Json fam = Json::array();
        for (auto k : c.families) fam.push_back(std::string(family_name(k)));
        rec["families"] = fam;
        if (F.size() <= heavy_cap) {
            const auto check = check_presemifield(op);
            rec["presemifield"] = check.presemifield;
            rec["zero_divisor"] = check.zero_divisor
                                      ? Json::array({elem_to_json(check.zero_divisor->first), elem_to_json(check.zero_divisor->second)})
                                      : Json(nullptr);
            if (check.presemifield != predicate) fault("presemifield check disagrees with the trace predicate");
        } else {
            rec["presemifield"] = nullptr;
            rec["zero_divisor"] = nullptr;
        }
        rec["ganley"] = c.ganley ? ganley_to_json(*c.ganley) : Json(nullptr);
        rec["nuclei"] = c.nuclei ? nuclei_to_json(*c.nuclei) : Json(nullptr);

        if (!L.is_scalar()) {
            const auto h = verdicts(L);
            rec["hws"] = hws_to_json(h);
            if (predicate && h.triggered()) fault("predicate-true L triggers the point-count bound");
            if (predicate && h.points != (h.trace_zero ? F.q() + 1 : 1)) fault("predicate-true L has an unexpected point count");
            if (predicate && h.ell < h.threshold()) fault("predicate-true L misses the Lead threshold");
        } else {
            rec["hws"] = nullptr;
        }
        if (F.m() == 1 && predicate) {
            const auto r = coefficient_identity_check(L);
            rec["coefficient_identity"] = coefficient_identity_to_json(r);
            if (!r.holds) fault("coefficient identity for prime q fails");
        } else {
            rec["coefficient_identity"] = nullptr;
        }
        out.line(rec);
    }
    Json s;
    s["type"] = "summary";
    s["checked"] = items.size();
    s["predicate_true"] = predicate_true;
    s["faults"] = faults.size();
    out.line(s);
    out.flush(a.common.out);
    if (!faults.empty()) {
        for (const auto& f : faults) std::cerr << f.dump() << "\n";
        return kExitFault;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------- codes

struct CodesArgs {
    Common common;
    std::string budget;
    std::optional<std::uint64_t> seed;
};

int cmd_codes(const CodesArgs& a) {
    const auto field = a.common.field();
    const FieldCtx& F = *field;
    const std::uint64_t budget =
        a.budget.empty() ? env_or("SEMISWITCH_SEARCH_BUDGET", kDefaultSearchBudget) : parse_count(a.budget);
    const auto exps = defining_exponents(F.q(), F.n());
    const auto dim = code_dimension(F.q(), F.n());
    const auto summary = full_weight_search(field, budget, a.seed);

    Output out;
    if (a.common.format == "csv") {
        for (const auto& src : summary.witnesses) out.raw(codeword_csv_row(F, delsarte_codeword(F, src)));
        out.flush(a.common.out);
        return kExitOk;
    }
    Json extra;
    extra["budget"] = budget;
    extra["seed"] = a.seed ? Json(*a.seed) : Json(nullptr);
    out.line(run_header("codes", &F, extra));
    Json rec;
    rec["type"] = "codes";
    rec["q"] = F.q();
    rec["n"] = F.n();
    rec["length"] = F.group_order();
    rec["defining_exponents"] = exps;
    rec["basic_zero_set"] = basic_zero_set_check(exps, F.q(), F.n());
    Json reps = Json::array();
    for (auto e : exps) reps.push_back(coset(F.q(), F.group_order(), e % F.group_order()).members);
    rec["cosets"] = reps;
    rec["dimension"] = dim;
    rec["full_weight"] = full_weight_to_json(summary);
    rec["nonconstant_full_weight"] = summary.full_weight_nonconstant > 0;
    out.line(rec);
    out.flush(a.common.out);
    return kExitOk;
}

// ------------------------------------------------------------------------ hws

struct HwsArgs {
    Common common;
    std::string in;
    std::string L;
};

int cmd_hws(const HwsArgs& a) {
    const auto items = gather_items(a.common, a.in, a.L);
    Output out;
    if (a.common.format == "csv") {
        out.raw("index,ell,argmin_j,genus,serre,lower_bound,trace_zero,triggered,threshold,points");
    } else {
        out.line(run_header("hws", a.common.p ? a.common.field().get() : nullptr, Json::object()));
    }
    for (std::size_t idx = 0; idx < items.size(); ++idx) {
        const auto& L = items[idx].L;
        const auto h = verdicts(L);
        if (a.common.format == "csv") {
            out.raw(std::to_string(idx) + "," + std::to_string(h.ell) + "," + std::to_string(h.argmin_j) + "," +
                    std::to_string(h.genus) + "," + std::to_string(h.serre) + "," + std::to_string(h.lower_bound) +
                    "," + (h.trace_zero ? "true" : "false") + "," + (h.triggered() ? "true" : "false") + "," +
                    std::to_string(h.threshold()) + "," + std::to_string(h.points));
            continue;
        }
        Json rec;
        rec["type"] = "hws";
        rec["index"] = idx;
        rec["field"] = field_to_json(L.field());
        rec["L"] = poly_to_json(L);
        const Json body = hws_to_json(h);
        for (const auto& [k, v] : body.items()) rec[k] = v;
        out.line(rec);
    }
    out.flush(a.common.out);
    return kExitOk;
}

// --------------------------------------------------------------------- family

struct FamilyArgs {
    Common common;
    std::string kind;
    std::string params;
    bool reference = false;
};

int cmd_family(const FamilyArgs& a) {
    const auto field = a.common.field();
    const auto kind = family_from_name(a.kind);
    if (!kind) throw InvalidArgument("unknown family " + a.kind);
    std::optional<FamilyInstance> inst;
    if (a.reference) {
        if (*kind != FamilyKind::N4_COMMUTATIVE) throw InvalidArgument("--reference is only defined for N4_COMMUTATIVE");
        inst = n4_commutative_reference(field);
    } else {
        const auto ps = parse_elems(*field, a.params);
        auto need = [&](std::size_t k) {
            if (ps.size() != k) throw InvalidArgument(a.kind + " needs " + std::to_string(k) + " params");
        };
        switch (*kind) {
            case FamilyKind::N2: need(2); inst = n2_instance(field, ps[0], ps[1]); break;
            case FamilyKind::N3: need(4); inst = n3_construct(field, ps[0], ps[1], ps[2], ps[3]); break;
            case FamilyKind::N4: need(2); inst = n4_instance(field, ps[0], ps[1]); break;
            case FamilyKind::N4_COMMUTATIVE: need(2); inst = n4_commutative_instance(field, ps[0], ps[1]); break;
        }
    }
    Json rec;
    rec["type"] = "instance";
    rec["field"] = field_to_json(*field);
    const Json body = family_to_json(*inst);
    for (const auto& [k, v] : body.items()) rec[k] = v;
    Output out;
    out.line(rec);
    out.flush(a.common.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semiswitch: switchings of finite-field multiplication into presemifields"};
    app.require_subcommand(1);

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand("search", "enumerate L satisfying Tr(L(x)/x) != 0 on a coefficient support");
    add_field_options(search_cmd, search_args.common, true);
    add_output_options(search_cmd, search_args.common);
    search_cmd->add_option("--mask", search_args.mask, "support indices, e.g. 0,2 (default: all)");
    auto* ex = search_cmd->add_flag("--exhaustive", search_args.exhaustive, "enumerate every candidate (default)");
    auto* rnd = search_cmd->add_flag("--random", search_args.random, "draw --budget seeded candidates");
    ex->excludes(rnd);
    search_cmd->add_option("--seed", search_args.seed, "mt19937_64 seed for --random")->capture_default_str();
    search_cmd->add_option("--budget", search_args.budget,
                           "candidate cap, e.g. 2^25 or 1e6 (env SEMISWITCH_SEARCH_BUDGET)");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run every check on the polynomials of an instance file");
    add_field_options(verify_cmd, verify_args.common, false);
    add_output_options(verify_cmd, verify_args.common);
    verify_cmd->add_option("--in,input", verify_args.in, "JSON-lines file with \"field\" and \"L\" entries");
    verify_cmd->add_option("--L", verify_args.L, "inline coefficients a_0,...,a_{n-1} as logs (null for zero)");

    CodesArgs codes_args;
    auto* codes_cmd = app.add_subcommand("codes", "dimension and full-weight words of the trace code");
    add_field_options(codes_cmd, codes_args.common, true);
    add_output_options(codes_cmd, codes_args.common);
    codes_cmd->add_option("--budget", codes_args.budget, "coefficient-tuple cap (env SEMISWITCH_SEARCH_BUDGET)");
    codes_cmd->add_option("--seed", codes_args.seed, "sample --budget tuples instead of failing past the cap");

    HwsArgs hws_args;
    auto* hws_cmd = app.add_subcommand("hws", "genus, Serre-bound verdicts and point counts per polynomial");
    add_field_options(hws_cmd, hws_args.common, false);
    add_output_options(hws_cmd, hws_args.common);
    hws_cmd->add_option("--in,input", hws_args.in, "JSON-lines file with \"field\" and \"L\" entries");
    hws_cmd->add_option("--L", hws_args.L, "inline coefficients a_0,...,a_{n-1} as logs (null for zero)");

    FamilyArgs family_args;
    auto* family_cmd = app.add_subcommand("family", "emit an instance line for one of the explicit families");
    add_field_options(family_cmd, family_args.common, true);
    add_output_options(family_cmd, family_args.common);
    family_cmd->add_option("--kind", family_args.kind, "N2, N3, N4 or N4_COMMUTATIVE")->required();
    family_cmd->add_option("--params", family_args.params, "parameter logs: a1,a0 | u,v,theta,a | a1,a0_tilde");
    family_cmd->add_flag("--reference", family_args.reference, "N4_COMMUTATIVE with a_1 = 1 and the first trace -1 element");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*search_cmd) return cmd_search(search_args);
        if (*verify_cmd) return cmd_verify(verify_args);
        if (*codes_cmd) return cmd_codes(codes_args);
        if (*hws_cmd) return cmd_hws(hws_args);
        if (*family_cmd) return cmd_family(family_args);
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const ConsistencyFault& e) {
        std::cerr << "consistency fault: " << e.what() << "\n";
        std::cerr << (e.witness().empty() ? "{}" : e.witness()) << "\n";
        return kExitFault;
    }
    return kExitInvalid;
}
