/*
   Copyright 2026 The verlinde authors

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
 * @file acceptance.hpp
 * @brief The acceptance criteria as timed checks.
 */

#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "verlinde/gradedalg.hpp"
#include "verlinde/homogquot.hpp"
#include "verlinde/ver4plus.hpp"
#include "verlinde/verp.hpp"

namespace verlinde {

struct AcceptanceOptions {
    bool corrupt_fusion = false;  ///< negative control: perturb one expected fusion entry
};

struct CriterionOutcome {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string group;
    std::string title;
    double limit_seconds;
    std::function<CriterionOutcome(const AcceptanceOptions&)> run;
};

struct CriterionResult {
    int id = 0;
    std::string group;
    std::string title;
    bool ok = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;

    bool in_time() const { return seconds <= limit_seconds; }
    bool passed() const { return ok && in_time(); }
};

namespace acceptance {

inline std::string pair_name(Scalar p, std::size_t i, std::size_t j) {
    return "p=" + std::to_string(p) + " L" + std::to_string(i) + "⊗L" + std::to_string(j);
}

inline std::string fmt_list(const std::vector<std::size_t>& v) {
    std::ostringstream s;
    s << "(";
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << ")";
    return s.str();
}

/// L_i ⊗ L_j = Σ L_k, k = |i-j|+1, |i-j|+3, ..., min(i+j-1, 2p-i-j-1).
inline VerObject fusion_rule(Scalar p, std::size_t i, std::size_t j) {
    VerObject v = VerObject::zero(p);
    const std::size_t lo = (i > j ? i - j : j - i) + 1;
    const std::size_t hi = std::min(i + j - 1, 2 * static_cast<std::size_t>(p) - i - j - 1);
    for (std::size_t k = lo; k <= hi; k += 2) v.mults[k - 1] += 1;
    return v;
}

inline CriterionOutcome fusion_tables(const AcceptanceOptions& opt) {
    for (Scalar p : {3u, 5u, 7u})
        for (std::size_t i = 1; i < p; ++i)
            for (std::size_t j = 1; j < p; ++j) {
                VerObject want = fusion_rule(p, i, j);
                if (opt.corrupt_fusion && p == 5 && i == 2 && j == 2) want.mults[1] += 1;
                const VerObject got = fuse(VerObject::simple(p, i), VerObject::simple(p, j));
                const VerObject green = semisimplify(green_tensor(jordan_block(i, p), jordan_block(j, p)));
                if (got != want) return {false, pair_name(p, i, j) + ": fuse gives " + fmt_list(got.mults) + ", expected " + fmt_list(want.mults)};
                if (green != want) return {false, pair_name(p, i, j) + ": semisimplified Green product " + fmt_list(green.mults) + ", expected " + fmt_list(want.mults)};
            }
    return {true, "p in {3,5,7}, all pairs agree"};
}

inline CriterionOutcome green_ring(const AcceptanceOptions&) {
    std::size_t checked = 0;
    for (Scalar p : {2u, 3u, 5u})
        for (std::size_t i = 1; i <= p; ++i)
            for (std::size_t j = 1; j <= p; ++j) {
                const Module t(cp_tensor_action(jordan_block(i, p).action(), jordan_block(j, p).action()));
                const JordanType jt = jordan_type(t);
                if (jt.dim() != i * j) return {false, "p=" + std::to_string(p) + " J" + std::to_string(i) + "⊗J" + std::to_string(j) + ": block sizes sum to " + std::to_string(jt.dim())};
                const VerObject want = (i < p && j < p) ? fusion_rule(p, i, j) : VerObject::zero(p);
                if (semisimplify(jt) != want) return {false, "p=" + std::to_string(p) + " J" + std::to_string(i) + "⊗J" + std::to_string(j) + ": discarding size-p blocks disagrees with fusion"};
                ++checked;
            }
    return {true, std::to_string(checked) + " products, dimensions and discards consistent"};
}

inline CriterionOutcome sym_vanishing(const AcceptanceOptions&) {
    std::size_t checked = 0;
    for (Scalar p : {3u, 5u, 7u})
        for (std::size_t k = 1; k + 1 < p; ++k) {
            const VerObject s = sym_power_ver(VerObject::simple(p, p - k), k + 1);
            if (!s.is_zero()) return {false, "p=" + std::to_string(p) + ": S^" + std::to_string(k + 1) + "(L" + std::to_string(p - k) + ") = " + fmt_list(s.mults)};
            ++checked;
        }
    return {true, std::to_string(checked) + " symmetric powers vanish"};
}

inline CriterionOutcome sym_algebra_of_p(const AcceptanceOptions&) {
    const Ver4PlusCategory cat;
    const auto a = free_symmetric(cat, cat.projective(), 8);
    const std::vector<std::size_t> want{1, 2, 2, 2, 2, 2, 2, 2, 2};
    if (a.dims() != want) return {false, "Hilbert function " + fmt_list(a.dims())};
    std::string bad;
    for (std::size_t d = 1; d <= 8; ++d) {
        const IsoClass c = cat.iso_class(a[d]);
        if (c != IsoClass{0, 1}) bad += (bad.empty() ? "" : ", ") + std::string("S^") + std::to_string(d) + "(P) = " + fmt_list(c);
    }
    if (!bad.empty()) return {false, "Hilbert (1,2,...,2) ok; iso-class (0,1) fails: " + bad};
    return {true, "Hilbert (1,2,...,2), every positive degree is P"};
}

inline CriterionOutcome mn2_gr_witnesses(const AcceptanceOptions&) {
    const Ver4PlusCategory cat;
    const Module one = cat.unit(), p = cat.projective();
    const FpMatrix socle = FpMatrix::from_rows(2, {{1}, {0}});
    const FpMatrix top = FpMatrix::from_rows(2, {{0, 1}});
    const FpMatrix s2_in = sym_power_of_morphism_v4(one, p, socle, 2);
    if (!s2_in.is_zero()) return {false, "S^2(1->P) is nonzero"};
    const FpMatrix s2_out = sym_power_of_morphism_v4(p, one, top, 2);
    const Module s2p = sym_power_v4(p, 2).object, s21 = sym_power_v4(one, 2).object;
    const auto sec = split_section(cat, s2p, s21, s2_out);
    if (!sec) return {false, "S^2(P->1) has no section"};
    if (!cat.is_morphism(s21, s2p, *sec) || !(s2_out * *sec).is_identity()) return {false, "found section does not split S^2(P->1)"};
    return {true, "S^2(1->P) = 0; S^2(P->1) split by a module map"};
}

inline AdditiveQuotient<Ver4PlusCategory> socle_quotient(std::size_t n) {
    const Ver4PlusCategory cat;
    return {cat, cat.unit(), cat.projective(), FpMatrix::from_rows(2, {{1}, {0}}), n};
}

inline AdditiveQuotient<VerpCategory> verp_quotient(std::size_t n) {
    const VerpCategory cat(5);
    const Module x = cat.object(VerObject::simple(5, 2));
    const Module y = cat.object({5, {0, 1, 1, 0}});
    FpMatrix iota(5, 2, 5);
    iota(0, 0) = iota(1, 1) = 1;
    return {cat, x, y, iota, n};
}

inline AdditiveQuotient<VecCategory> vec_quotient(std::size_t n) {
    const VecCategory cat(3);
    return {cat, cat.object(1), cat.object(2), FpMatrix::from_rows(3, {{1}, {0}}), n};
}

inline CriterionOutcome homogeneous_space(const AcceptanceOptions&) {
    auto q = socle_quotient(6);
    const auto& r = q.r().alg;
    if (r.dims() != std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 0}) return {false, "R Hilbert " + fmt_list(r.dims())};
    for (std::size_t d = 0; d <= 6; ++d)
        if (!r[d].action().is_zero()) return {false, "R_" + std::to_string(d) + " is not purely even"};
    return {true, "R = k[u]/u^2, purely even"};
}

inline std::string first_failure(const QuotientReport& r) {
    auto scan = [&](const std::vector<bool>& v, const char* name) -> std::string {
        for (std::size_t d = 0; d < v.size(); ++d)
            if (!v[d]) return std::string(name) + " fails in degree " + std::to_string(d);
        return "";
    };
    for (const auto& s : {scan(r.gr_ok, "gr"), scan(r.can_iso, "can iso"), scan(r.can_surj, "can surj"), scan(r.b_eq_r, "B = R")})
        if (!s.empty()) return s;
    return "";
}

inline CriterionOutcome quotient_suite(const AcceptanceOptions&) {
    auto a = socle_quotient(5);
    auto b = verp_quotient(4);
    auto c = vec_quotient(6);
    const std::vector<std::pair<std::string, QuotientReport>> reports{
        {"ver4plus 1->P", a.report()}, {"verp5 L2->L2+L3", b.report()}, {"vec3 k->k^2", c.report()}};
    for (const auto& [name, r] : reports)
        if (auto f = first_failure(r); !f.empty()) return {false, name + ": " + f};
    return {true, "gr, can iso, can surj, B = R hold on all three instances"};
}

inline CriterionOutcome twist_values(const AcceptanceOptions&) {
    const Ver4PlusCategory cat;
    const auto sp = free_symmetric(cat, cat.projective(), 8);
    const auto tw = frobenius_twist(sp).alg.dims();
    if (tw != std::vector<std::size_t>{1, 0, 0, 0, 1, 0, 0, 0, 1}) return {false, "twist of S(P): " + fmt_list(tw)};
    const auto tb = frobenius_twist(body(sp).alg).alg.dims();
    if (tb != std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1, 0, 1}) return {false, "twist of the body: " + fmt_list(tb)};
    return {true, "twist of S(P) = k[y^4], of its body k[y^2]"};
}

template <class C, class Gen>
std::string twist_product_mismatch(const C& cat, Gen&& gen, std::size_t n, std::mt19937& rng, int pairs) {
    for (int t = 0; t < pairs; ++t) {
        const Module x = gen(rng), y = gen(rng);
        const auto a = free_symmetric(cat, x, n), b = free_symmetric(cat, y, n);
        const auto lhs = frobenius_twist(tensor_algebras(a, b)).alg.hilbert();
        const auto rhs = tensor_algebras(frobenius_twist(a).alg, frobenius_twist(b).alg).hilbert();
        if (lhs != rhs) return cat.name() + " p=" + std::to_string(cat.prime()) + " pair " + std::to_string(t);
    }
    return "";
}

inline CriterionOutcome twist_of_product(const AcceptanceOptions&) {
    std::mt19937 rng(20260);
    const VecCategory v2(2), v3(3);
    const VerpCategory vp(3);
    auto vec_gen = [](const VecCategory& c) { return [&c](std::mt19937& r) { return c.object(1 + r() % 2); }; };
    auto verp_gen = [&vp](std::mt19937& r) {
        VerObject v = VerObject::zero(3);
        for (auto& m : v.mults) m = r() % 2;
        if (v.is_zero()) v.mults[r() % 2] = 1;
        return vp.object(v);
    };
    for (const auto& s : {twist_product_mismatch(v2, vec_gen(v2), 4, rng, 5), twist_product_mismatch(v3, vec_gen(v3), 3, rng, 5),
                          twist_product_mismatch(vp, verp_gen, 3, rng, 5)})
        if (!s.empty()) return {false, "twist of the product differs: " + s};
    return {true, "15 random pairs, twists commute with products"};
}

template <class C>
FpMatrix random_hom(const C& cat, const Module& a, const Module& b, std::mt19937& rng) {
    FpMatrix f(b.dim(), a.dim(), cat.prime());
    for (const auto& h : cat.hom_basis(a, b)) f += h.scaled(rng() % cat.prime());
    return f;
}

template <class C, class Gen>
std::string braiding_failure(const C& cat, Gen&& gen, std::mt19937& rng, int pairs) {
    for (int t = 0; t < pairs; ++t) {
        const Module x = gen(rng), y = gen(rng), x2 = gen(rng), y2 = gen(rng);
        const Module xy = cat.tensor(x, y), yx = cat.tensor(y, x);
        const FpMatrix c = cat.braiding(x, y);
        if (!cat.is_morphism(xy, yx, c)) return cat.name() + ": braiding is not a morphism";
        if (!(cat.braiding(y, x) * c).is_identity()) return cat.name() + ": braiding squared is not the identity";
        const FpMatrix f = random_hom(cat, x, x2, rng), g = random_hom(cat, y, y2, rng);
        const FpMatrix lhs = cat.braiding(x2, y2) * kron(f, g);
        const FpMatrix rhs = kron(g, f) * c;
        if (!cat.equal(xy, cat.tensor(y2, x2), lhs, rhs)) return cat.name() + ": braiding is not natural";
    }
    return "";
}

template <class C, class Gen>
std::string nil_failure(const C& cat, Gen&& gen, std::mt19937& rng, int pairs) {
    const Scalar p = cat.prime();
    for (int t = 0; t < pairs; ++t) {
        const Module x = gen(rng), y = gen(rng);
        const Module xy = cat.tensor(x, y);
        const auto nx = nil_part(cat, x), ny = nil_part(cat, y);
        const Subobject a{cat.tensor(nx.object, y), kron(nx.inclusion, FpMatrix::identity(y.dim(), p))};
        const Subobject b{cat.tensor(x, ny.object), kron(FpMatrix::identity(x.dim(), p), ny.inclusion)};
        if (!subobject_contains(cat, xy, subobject_sum(cat, xy, a, b), nil_part(cat, xy))) return cat.name() + ": nil part of a tensor product escapes";
    }
    return "";
}

inline CriterionOutcome property_suite(const AcceptanceOptions&) {
    std::mt19937 rng(4242);
    const VecCategory vec(3);
    const VerpCategory vp(5);
    const Ver4PlusCategory v4;
    auto vec_gen = [&vec](std::mt19937& r) { return vec.object(r() % 4); };
    auto verp_gen = [&vp](std::mt19937& r) {
        VerObject v = VerObject::zero(5);
        for (auto& m : v.mults) m = r() % 2;
        if (v.is_zero()) v.mults[0] = 1;
        return vp.object(v);
    };
    auto v4_gen = [](std::mt19937& r) { return ver4_object(r() % 3, r() % 3); };
    for (const auto& s : {braiding_failure(vec, vec_gen, rng, 50), braiding_failure(vp, verp_gen, rng, 50), braiding_failure(v4, v4_gen, rng, 50)})
        if (!s.empty()) return {false, s};
    for (const auto& s : {nil_failure(vp, verp_gen, rng, 10), nil_failure(v4, v4_gen, rng, 10)})
        if (!s.empty()) return {false, s};

    std::size_t algebras = 0;
    std::string bad;
    auto check_alg = [&](const auto& alg, const std::string& name) {
        ++algebras;
        if (auto v = algebra_violation(alg); v && bad.empty()) bad = name + ": " + *v;
    };
    for (int t = 0; t < 3; ++t) {
        const auto sv = free_symmetric(vec, vec_gen(rng), 4);
        check_alg(sv, "vec S(X)");
        check_alg(frobenius_twist(sv).alg, "vec twist");
        const auto sp = free_symmetric(vp, verp_gen(rng), 3);
        check_alg(sp, "verp S(X)");
        check_alg(body(sp).alg, "verp body");
        const auto s4 = free_symmetric(v4, v4_gen(rng), 4);
        check_alg(s4, "ver4plus S(X)");
        check_alg(body(s4).alg, "ver4plus body");
        check_alg(invariant_subalgebra(s4).alg, "ver4plus invariants");
    }
    auto a = socle_quotient(5);
    auto b = verp_quotient(4);
    auto c = vec_quotient(6);
    for (const auto* alg : {&a.a(), &a.h(), &a.r().alg}) check_alg(*alg, "ver4plus quotient data");
    for (const auto* alg : {&b.a(), &b.h(), &b.r().alg}) check_alg(*alg, "verp quotient data");
    for (const auto* alg : {&c.a(), &c.h(), &c.r().alg}) check_alg(*alg, "vec quotient data");
    check_alg(a.a_tensor_h(), "ver4plus A⊗H");
    if (!bad.empty()) return {false, bad};
    if (!a.check_coassociativity() || !a.check_counit()) return {false, "ver4plus coaction laws"};
    if (!b.check_coassociativity() || !b.check_counit()) return {false, "verp coaction laws"};
    if (!c.check_coassociativity() || !c.check_counit()) return {false, "vec coaction laws"};
    return {true, "150 braiding pairs, 20 nil pairs, " + std::to_string(algebras) + " algebras, 3 coactions"};
}

}  // namespace acceptance

inline const std::vector<Criterion>& acceptance_criteria() {
    static const std::vector<Criterion> all{
        {1, "fusion", "fusion tables", 1.0, acceptance::fusion_tables},
        {2, "fusion", "Green ring oracle", 5.0, acceptance::green_ring},
        {3, "sympow", "symmetric power vanishing", 60.0, acceptance::sym_vanishing},
        {4, "ver4plus", "S(P) in Ver_4^+", 5.0, acceptance::sym_algebra_of_p},
        {5, "ver4plus", "MN2/GR witnesses", 1.0, acceptance::mn2_gr_witnesses},
        {6, "quotient", "P/G_a", 5.0, acceptance::homogeneous_space},
        {7, "quotient", "quotient verification suite", 60.0, acceptance::quotient_suite},
        {8, "frobtwist", "Frobenius twist values", 30.0, acceptance::twist_values},
        {9, "frobtwist", "twist of a product", 60.0, acceptance::twist_of_product},
        {10, "properties", "property suite", 30.0, acceptance::property_suite},
    };
    return all;
}

/// Ids for a filter: empty = all; a group name; or a comma list of ids and groups.
inline std::vector<int> select_criteria(const std::string& only) {
    const auto& all = acceptance_criteria();
    std::vector<int> ids;
    if (only.empty()) {
        for (const auto& c : all) ids.push_back(c.id);
        return ids;
    }
    std::vector<bool> on(all.size() + 1, false);
    std::stringstream ss(only);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        bool hit = false;
        for (const auto& c : all)
            if (c.group == tok || std::to_string(c.id) == tok) on[c.id] = hit = true;
        if (!hit) throw ValidationError("unknown criterion or group '" + tok + "'");
    }
    for (const auto& c : all)
        if (on[c.id]) ids.push_back(c.id);
    return ids;
}

inline CriterionResult run_criterion(const Criterion& c, const AcceptanceOptions& opt) {
    CriterionResult r;
    r.id = c.id;
    r.group = c.group;
    r.title = c.title;
    r.limit_seconds = c.limit_seconds;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const CriterionOutcome o = c.run(opt);
        r.ok = o.ok;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = std::string("threw: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, const AcceptanceOptions& opt = {}) {
    std::vector<CriterionResult> out;
    for (int id : ids)
        for (const auto& c : acceptance_criteria())
            if (c.id == id) out.push_back(run_criterion(c, opt));
    return out;
}

}  // namespace verlinde
