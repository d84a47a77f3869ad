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
 * @file cli.hpp
 * @brief The verlinde command-line front end.
 */

#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "verlinde/acceptance.hpp"
#include "verlinde/gradedalg.hpp"
#include "verlinde/homogquot.hpp"
#include "verlinde/json_io.hpp"

namespace verlinde {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSizeGuard = 3;

/// Aligned-column text table.
class Table {
  public:
    explicit Table(std::vector<std::string> headers) : headers_(std::move(headers)) {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& out) const {
        std::vector<std::size_t> w(headers_.size(), 0);
        auto width = [](const std::string& s) {
            // count code points, not bytes
            return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
        };
        for (std::size_t i = 0; i < headers_.size(); ++i) w[i] = width(headers_[i]);
        for (const auto& r : rows_)
            for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], width(r[i]));
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                const std::string s = i < r.size() ? r[i] : "";
                out << s;
                if (i + 1 < w.size()) out << std::string(w[i] - width(s) + 2, ' ');
            }
            out << '\n';
        };
        line(headers_);
        std::vector<std::string> rule;
        for (auto x : w) rule.push_back(std::string(x, '-'));
        line(rule);
        for (const auto& r : rows_) line(r);
    }

  private:
    std::vector<std::string> headers_;
    std::vector<std::vector<std::string>> rows_;
};

struct CliConfig {
    std::string command;
    Scalar p = 0;
    std::string backend = "verp";
    std::size_t truncation = 6;
    std::size_t power = 2;
    std::string input, output;
    json a, b, object, iota;
    bool body = false;
    std::string only;
    bool corrupt_fusion = false;

    json to_json() const {
        json j{{"command", command}, {"p", p}, {"backend", backend}, {"N", truncation}, {"input", input}, {"output", output}};
        if (command == "fuse" || command == "jordan") {
            j["a"] = a;
            j["b"] = b;
            j.erase("backend");
            j.erase("N");
        }
        if (command == "sympow") j["n"] = power;
        if (command == "sympow" || command == "symalg" || command == "frobtwist" || command == "nil") j["object"] = object;
        if (command == "sympow") j.erase("N");
        if (command == "frobtwist") j["body"] = body;
        if (command == "quotient") j["iota"] = iota;
        if (command == "verify") {
            j = {{"command", command}, {"only", only}, {"corrupt_fusion", corrupt_fusion}, {"input", input}, {"output", output}};
        }
        return j;
    }
};

namespace cli {

inline std::string str(const IsoClass& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

inline std::string yes(bool b) { return b ? "yes" : "NO"; }

/// A flag value: JSON text when it looks like JSON, otherwise a plain string.
inline json flag_value(const std::string& s, const std::string& field) {
    const std::string t = detail::trim(s);
    if (!t.empty() && (t[0] == '{' || t[0] == '[')) {
        try {
            return json::parse(t);
        } catch (const json::parse_error& e) {
            throw ValidationError("field '" + field + "': malformed JSON: " + e.what());
        }
    }
    return t;
}

inline Module parse_object(const VecCategory& cat, const json& j, const std::string& field) {
    if (j.is_object() && j.contains("action")) {
        Module m = module_from_json(j, cat.prime(), field);
        if (!m.action().is_zero()) throw ValidationError("field '" + field + "': vec objects carry the zero action");
        return m;
    }
    if (j.is_number_integer()) return cat.object(detail::as_count(j, field));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) throw ValidationError("field '" + field + "': expected a dimension, got '" + s + "'");
        return cat.object(std::stoul(s));
    }
    return cat.object(detail::as_count(detail::require_field(j, "dim"), field + ".dim"));
}

inline Module parse_object(const VerpCategory& cat, const json& j, const std::string& field) {
    if (j.is_object() && j.contains("action")) {
        Module m = module_from_json(j, cat.prime(), field);
        FpMatrix pw = FpMatrix::identity(m.dim(), cat.prime());
        for (Scalar k = 0; k < cat.prime(); ++k) pw = pw * m.action();
        if (!pw.is_zero()) throw ValidationError("field '" + field + ".action': x^p is not zero");
        return m;
    }
    return cat.object(ver_object_from_json(j, cat.prime(), field));
}

inline Module parse_object(const Ver4PlusCategory& cat, const json& j, const std::string& field) {
    if (j.is_object() && j.contains("action")) {
        Module m = module_from_json(j, 2, field);
        cat.iso_class(m);
        return m;
    }
    const auto [a, b] = v4_counts_from_json(j, field);
    return cat.object(a, b);
}

struct Inclusion {
    Module x, y;
    FpMatrix map;
};

inline Inclusion canonical_inclusion(const VecCategory& cat, const Module& x, const Module& y) {
    if (x.dim() > y.dim()) throw ValidationError("field 'iota': source is larger than target");
    FpMatrix f(y.dim(), x.dim(), cat.prime());
    for (std::size_t i = 0; i < x.dim(); ++i) f(i, i) = 1;
    return {x, y, f};
}

inline Inclusion canonical_inclusion(const VerpCategory& cat, const Module& x, const Module& y) {
    const IsoClass cx = cat.iso_class(x), cy = cat.iso_class(y);
    std::vector<FpMatrix> data(cat.prime(), FpMatrix());
    for (std::size_t s = 1; s < cat.prime(); ++s) {
        if (cx[s - 1] > cy[s - 1]) throw ValidationError("field 'iota': L" + std::to_string(s) + " occurs more often in the source");
        FpMatrix d(cy[s - 1], cx[s - 1], cat.prime());
        for (std::size_t i = 0; i < cx[s - 1]; ++i) d(i, i) = 1;
        data[s] = d;
    }
    return {x, y, cat.map_from_multiplicities(x, y, data)};
}

/// 1s go to 1s, then to socles of spare P's; P's go to the first P's.
inline Inclusion canonical_inclusion(const Ver4PlusCategory& cat, const Module& x, const Module& y) {
    const IsoClass cx = cat.iso_class(x), cy = cat.iso_class(y);
    const std::size_t a1 = cx[0], b1 = cx[1], a2 = cy[0], b2 = cy[1];
    const std::size_t spare = a1 > a2 ? a1 - a2 : 0;
    if (b1 + spare > b2) throw ValidationError("field 'iota': no canonical inclusion of " + str(cx) + " into " + str(cy));
    if (x.action() != ver4_object(a1, b1).action() || y.action() != ver4_object(a2, b2).action())
        throw ValidationError("field 'iota': shorthand needs objects in standard form; give an explicit map");
    FpMatrix f(y.dim(), x.dim(), 2);
    for (std::size_t i = 0; i < std::min(a1, a2); ++i) f(i, i) = 1;
    for (std::size_t k = 0; k < spare; ++k) f(a2 + 2 * (b1 + k), a2 + k) = 1;
    for (std::size_t k = 0; k < b1; ++k) {
        f(a2 + 2 * k, a1 + 2 * k) = 1;
        f(a2 + 2 * k + 1, a1 + 2 * k + 1) = 1;
    }
    return {x, y, f};
}

template <class C>
Inclusion parse_inclusion(const C& cat, const json& j) {
    if (j.is_null()) throw ValidationError("missing field 'iota'");
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto arrow = s.find("->");
        if (arrow == std::string::npos) throw ValidationError("field 'iota': expected 'X->Y', got '" + s + "'");
        const Module x = parse_object(cat, detail::trim(s.substr(0, arrow)), "iota.x");
        const Module y = parse_object(cat, detail::trim(s.substr(arrow + 2)), "iota.y");
        return canonical_inclusion(cat, x, y);
    }
    Module x = parse_object(cat, detail::require_field(j, "x"), "iota.x");
    Module y = parse_object(cat, detail::require_field(j, "y"), "iota.y");
    if (!j.contains("map")) return canonical_inclusion(cat, x, y);
    FpMatrix f = matrix_from_json(j["map"], cat.prime(), "iota.map");
    if (f.rows() != y.dim() || f.cols() != x.dim()) throw ValidationError("field 'iota.map' has the wrong shape");
    return {std::move(x), std::move(y), std::move(f)};
}

/// Block sizes "2", "2,3" or "2+3", or {"action": ...}.
inline Module parse_cp_module(const json& j, Scalar p, const std::string& field) {
    if (j.is_object()) {
        Module m = module_from_json(j, p, field);
        jordan_type(m);
        return m;
    }
    std::string s = j.is_number_integer() ? std::to_string(j.get<long long>()) : j.is_string() ? j.get<std::string>() : "";
    std::replace(s.begin(), s.end(), '+', ',');
    std::vector<std::size_t> sizes;
    for (const auto& t : detail::split(s, ',')) {
        if (t.empty() || !std::all_of(t.begin(), t.end(), ::isdigit)) throw ValidationError("field '" + field + "': expected Jordan block sizes, got '" + s + "'");
        const std::size_t k = std::stoul(t);
        if (k < 1 || k > p) throw ValidationError("field '" + field + "': block size " + t + " outside 1.." + std::to_string(p));
        sizes.push_back(k);
    }
    return Module(jordan_block_action(sizes, p));
}

template <class C>
json algebra_json(const GradedAlgebra<C>& a) {
    return {{"hilbert", iso_classes_to_json(a.hilbert())}, {"dims", a.dims()}};
}

template <class C>
void algebra_table(const GradedAlgebra<C>& a, std::ostream& out) {
    Table t({"degree", "dim", "iso class"});
    for (std::size_t d = 0; d <= a.truncation(); ++d) t.add({std::to_string(d), std::to_string(a[d].dim()), str(a.cat.iso_class(a[d]))});
    t.print(out);
}

template <class C>
json run_backend(const C& cat, const CliConfig& cfg, std::ostream& out) {
    json r;
    if (cfg.command == "sympow") {
        const Module x = parse_object(cat, cfg.object, "object");
        IsoClass c;
        std::size_t dim = 0;
        if constexpr (std::is_same_v<C, VerpCategory>) {
            const VerObject v = sym_power_ver(cat.ver_object(x), cfg.power);
            c = v.mults;
            dim = v.dim();
        } else if constexpr (std::is_same_v<C, Ver4PlusCategory>) {
            const Module s = sym_power_v4(x, cfg.power).object;
            c = cat.iso_class(s);
            dim = s.dim();
        } else {
            const auto a = free_symmetric(cat, x, cfg.power);
            dim = a[cfg.power].dim();
            c = cat.iso_class(a[cfg.power]);
        }
        r = {{"iso_class", c}, {"dim", dim}};
        Table t({"n", "dim", "iso class"});
        t.add({std::to_string(cfg.power), std::to_string(dim), str(c)});
        t.print(out);
    } else if (cfg.command == "symalg") {
        const auto a = free_symmetric(cat, parse_object(cat, cfg.object, "object"), cfg.truncation);
        r = algebra_json(a);
        algebra_table(a, out);
    } else if (cfg.command == "frobtwist") {
        auto a = free_symmetric(cat, parse_object(cat, cfg.object, "object"), cfg.truncation);
        if (cfg.body) a = body(a).alg;
        const auto tw = frobenius_twist(a);
        r = algebra_json(tw.alg);
        r["source_dims"] = a.dims();
        algebra_table(tw.alg, out);
    } else if (cfg.command == "nil") {
        const Module x = parse_object(cat, cfg.object, "object");
        const auto n = nil_part(cat, x);
        const auto a = free_symmetric(cat, x, cfg.truncation);
        const auto j = nil_ideal(a);
        const auto bd = body(a);
        std::vector<std::size_t> jd;
        for (const auto& s : j) jd.push_back(s.object.dim());
        r = {{"nil_part", {{"iso_class", cat.iso_class(n.object)}, {"dim", n.object.dim()}, {"inclusion", matrix_to_json(n.inclusion)}}},
             {"nil_ideal_dims", jd},
             {"body", algebra_json(bd.alg)}};
        out << "nil part: " << str(cat.iso_class(n.object)) << ", dim " << n.object.dim() << "\n";
        Table t({"degree", "dim S^d", "dim J_d", "body"});
        for (std::size_t d = 0; d <= cfg.truncation; ++d)
            t.add({std::to_string(d), std::to_string(a[d].dim()), std::to_string(jd[d]), str(cat.iso_class(bd.alg[d]))});
        t.print(out);
    } else if (cfg.command == "quotient") {
        const Inclusion inc = parse_inclusion(cat, cfg.iota);
        AdditiveQuotient<C> q(cat, inc.x, inc.y, inc.map, cfg.truncation);
        const QuotientReport rep = q.report();
        r = {{"hilbert_a", iso_classes_to_json(rep.hilbert_a)},
             {"hilbert_h", iso_classes_to_json(rep.hilbert_h)},
             {"hilbert_r", iso_classes_to_json(rep.hilbert_r)},
             {"hilbert_b", iso_classes_to_json(rep.hilbert_b)},
             {"r_dims", q.r().alg.dims()},
             {"r_purely_even", rep.r_purely_even},
             {"gr_ok", rep.gr_ok},
             {"can_iso", rep.can_iso},
             {"can_surj", rep.can_surj},
             {"b_eq_r", rep.b_eq_r},
             {"coassociative", rep.coassociative},
             {"counital", rep.counital},
             {"r_subset_b", rep.r_subset_b},
             {"all_ok", rep.all_ok()},
             {"complement", matrix_to_json(rep.complement)},
             {"iota", matrix_to_json(inc.map)}};
        Table t({"degree", "A", "H", "R", "B", "R even", "gr", "can iso", "can surj", "B = R"});
        for (std::size_t d = 0; d <= cfg.truncation; ++d)
            t.add({std::to_string(d), str(rep.hilbert_a[d]), str(rep.hilbert_h[d]), str(rep.hilbert_r[d]), str(rep.hilbert_b[d]),
                   yes(rep.r_purely_even[d]), yes(rep.gr_ok[d]), yes(rep.can_iso[d]), yes(rep.can_surj[d]), yes(rep.b_eq_r[d])});
        t.print(out);
        out << "coassociative " << yes(rep.coassociative) << ", counital " << yes(rep.counital) << ", R in B " << yes(rep.r_subset_b) << "\n";
    }
    return r;
}

inline json run_fuse(const CliConfig& cfg, std::ostream& out) {
    const VerObject a = ver_object_from_json(cfg.a, cfg.p, "a"), b = ver_object_from_json(cfg.b, cfg.p, "b");
    const VerObject f = fuse(a, b);
    Table t({"simple", "mult"});
    for (std::size_t i = 0; i < f.mults.size(); ++i) t.add({"L" + std::to_string(i + 1), std::to_string(f.mults[i])});
    t.print(out);
    return {{"mults", f.mults}};
}

inline json run_jordan(const CliConfig& cfg, std::ostream& out) {
    const Module a = parse_cp_module(cfg.a, cfg.p, "a"), b = parse_cp_module(cfg.b, cfg.p, "b");
    check_size(a.dim() * b.dim(), "jordan tensor");
    const Module t(cp_tensor_action(a.action(), b.action()));
    const JordanType jt = jordan_type(t);
    std::vector<std::size_t> sizes;
    for (std::size_t s = jt.counts.size(); s-- > 0;) sizes.insert(sizes.end(), jt.counts[s], s + 1);
    const VerObject ss = semisimplify(jt);
    Table tab({"block size", "count"});
    for (std::size_t s = 0; s < jt.counts.size(); ++s)
        if (jt.counts[s]) tab.add({std::to_string(s + 1), std::to_string(jt.counts[s])});
    tab.print(out);
    out << "dim " << jt.dim() << ", semisimplification " << str(ss.mults) << "\n";
    return {{"sizes", sizes}, {"counts", jt.counts}, {"dim", jt.dim()}, {"semisimplification", ss.mults}};
}

inline int run_verify(const CliConfig& cfg, std::ostream& out, json& r) {
    AcceptanceOptions opt;
    opt.corrupt_fusion = cfg.corrupt_fusion;
    const auto results = run_acceptance(select_criteria(cfg.only), opt);
    Table t({"#", "criterion", "result", "time (s)", "limit (s)", "detail"});
    json rows = json::array();
    std::vector<std::string> failures;
    for (const auto& c : results) {
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(3) << c.seconds;
        t.add({std::to_string(c.id), c.title, c.passed() ? "PASS" : "FAIL", secs.str(), std::to_string(static_cast<int>(c.limit_seconds)), c.detail});
        rows.push_back({{"id", c.id}, {"title", c.title}, {"group", c.group}, {"ok", c.ok}, {"in_time", c.in_time()}, {"limit_seconds", c.limit_seconds}, {"detail", c.detail}});
        if (!c.passed()) failures.push_back(std::to_string(c.id) + " (" + c.detail + ")");
    }
    t.print(out);
    r = {{"criteria", rows}, {"passed", failures.empty()}};
    if (failures.empty()) return kExitOk;
    out << "failing:";
    for (const auto& f : failures) out << "\n  " << f;
    out << "\n";
    return kExitFailed;
}

/// Fill unset fields from the input document, then check the invariants.
inline void resolve(CliConfig& cfg, const std::vector<std::string>& given) {
    auto was_given = [&](const std::string& f) { return std::find(given.begin(), given.end(), f) != given.end(); };
    if (!cfg.input.empty()) {
        std::ifstream in(cfg.input);
        if (!in) throw ValidationError("cannot read input file '" + cfg.input + "'");
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ValidationError("input file '" + cfg.input + "' is not valid JSON: " + e.what());
        }
        if (!doc.is_object()) throw ValidationError("input file must hold a JSON object");
        auto take = [&](const char* key, auto& dst) {
            if (was_given(key) || !doc.contains(key)) return;
            try {
                dst = doc[key].get<std::decay_t<decltype(dst)>>();
            } catch (const json::exception&) {
                throw ValidationError(std::string("field '") + key + "' has the wrong type");
            }
        };
        std::size_t p = cfg.p;
        take("p", p);
        cfg.p = static_cast<Scalar>(p);
        take("backend", cfg.backend);
        take("N", cfg.truncation);
        take("n", cfg.power);
        take("body", cfg.body);
        take("only", cfg.only);
        for (auto [key, dst] : {std::pair{"a", &cfg.a}, {"b", &cfg.b}, {"object", &cfg.object}, {"iota", &cfg.iota}})
            if (!was_given(key) && doc.contains(key)) *dst = doc[key];
    }
    if (cfg.command == "verify") return;
    if (cfg.backend != "vec" && cfg.backend != "verp" && cfg.backend != "ver4plus")
        throw ValidationError("field 'backend' must be one of vec, verp, ver4plus");
    if (cfg.backend == "ver4plus" && cfg.command != "fuse" && cfg.command != "jordan") {
        if (cfg.p != 0 && cfg.p != 2) throw ValidationError("field 'p': ver4plus forces p = 2");
        cfg.p = 2;
    }
    if (cfg.p == 0) throw ValidationError("missing field 'p'");
    if (!is_prime(cfg.p)) throw ValidationError("field 'p' must be prime");
    auto need = [](const json& j, const char* key) {
        if (j.is_null()) throw ValidationError(std::string("missing field '") + key + "'");
    };
    if (cfg.command == "fuse" || cfg.command == "jordan") {
        need(cfg.a, "a");
        need(cfg.b, "b");
    } else if (cfg.command == "quotient") {
        need(cfg.iota, "iota");
    } else {
        need(cfg.object, "object");
    }
}

inline int execute(CliConfig cfg, const std::vector<std::string>& given, std::ostream& out, bool json_stdout) {
    resolve(cfg, given);
    std::ostringstream table;
    json result;
    int code = kExitOk;
    if (cfg.command == "fuse") result = run_fuse(cfg, table);
    else if (cfg.command == "jordan") result = run_jordan(cfg, table);
    else if (cfg.command == "verify") code = run_verify(cfg, table, result);
    else if (cfg.backend == "vec") result = run_backend(VecCategory(cfg.p), cfg, table);
    else if (cfg.backend == "verp") result = run_backend(VerpCategory(cfg.p), cfg, table);
    else result = run_backend(Ver4PlusCategory(), cfg, table);
    json report = result;
    report["version"] = kVersion;
    report["config"] = cfg.to_json();
    const std::string text = report.dump(2) + "\n";
    if (!cfg.output.empty()) {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!f) throw ValidationError("cannot write output file '" + cfg.output + "'");
        f << text;
    }
    if (json_stdout) out << text;
    else out << table.str();
    return code;
}

}  // namespace cli

/// Parse argv and run one command. Returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Exact computations in Rep C_p, Ver_p and Ver_4^+", "verlinde"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("verlinde ") + kVersion);
    CliConfig cfg;
    std::size_t p = 0;
    std::string a, b, object, iota;
    bool json_stdout = false;

    auto common = [&](CLI::App* s, bool algebra) {
        s->add_option("--p", p, "prime");
        s->add_option("--input", cfg.input, "JSON file supplying any field not given as a flag");
        s->add_option("--output", cfg.output, "write the JSON report here");
        s->add_flag("--json", json_stdout, "print the JSON report instead of the table");
        if (algebra) {
            s->add_option("--backend", cfg.backend, "vec, verp or ver4plus")->capture_default_str();
            s->add_option("--N", cfg.truncation, "truncation degree")->capture_default_str();
        }
    };
    auto* fuse = app.add_subcommand("fuse", "fusion product in Ver_p");
    common(fuse, false);
    fuse->add_option("--a", a, "Ver_p object, e.g. L2 or L1+L3");
    fuse->add_option("--b", b, "Ver_p object");
    auto* jordan = app.add_subcommand("jordan", "Jordan type of a tensor product of C_p-modules");
    common(jordan, false);
    jordan->add_option("--a", a, "block sizes, e.g. 2,3");
    jordan->add_option("--b", b, "block sizes");
    auto* sympow = app.add_subcommand("sympow", "symmetric power of an object");
    common(sympow, true);
    sympow->add_option("--object", object, "object");
    sympow->add_option("--n", cfg.power, "exponent")->capture_default_str();
    auto* symalg = app.add_subcommand("symalg", "truncated symmetric algebra");
    common(symalg, true);
    symalg->add_option("--object", object, "object");
    auto* twist = app.add_subcommand("frobtwist", "Frobenius twist of S(X)");
    common(twist, true);
    twist->add_option("--object", object, "object");
    twist->add_flag("--body", cfg.body, "twist the body of S(X) instead");
    auto* nil = app.add_subcommand("nil", "nil part, nil ideal and body of S(X)");
    common(nil, true);
    nil->add_option("--object", object, "object");
    auto* quot = app.add_subcommand("quotient", "homogeneous space Y/X for an inclusion X -> Y");
    common(quot, true);
    quot->add_option("--iota", iota, "inclusion: 'X->Y' or JSON {x, y, map}");
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_option("--only", cfg.only, "group name or comma list of criterion ids");
    verify->add_flag("--corrupt-fusion", cfg.corrupt_fusion, "negative control: corrupt one expected fusion entry");
    verify->add_option("--output", cfg.output, "write the JSON report here");
    verify->add_flag("--json", json_stdout, "print the JSON report instead of the table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    std::vector<std::string> given;
    for (const char* f : {"p", "backend", "N", "n", "body", "only", "a", "b", "object", "iota"}) {
        const std::string flag = std::string("--") + f;
        bool has = false;
        try {
            has = sub->count(flag) > 0;
        } catch (const CLI::OptionNotFound&) {
        }
        if (has) given.push_back(f);
    }
    cfg.p = static_cast<Scalar>(p);
    try {
        if (!a.empty()) cfg.a = cli::flag_value(a, "a");
        if (!b.empty()) cfg.b = cli::flag_value(b, "b");
        if (!object.empty()) cfg.object = cli::flag_value(object, "object");
        if (!iota.empty()) cfg.iota = cli::flag_value(iota, "iota");
        return cli::execute(cfg, given, out, json_stdout);
    } catch (const SizeGuardError& e) {
        err << "verlinde: size guard: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const ValidationError& e) {
        err << "verlinde: invalid input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const json::exception& e) {
        err << "verlinde: invalid input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "verlinde: error: " << e.what() << "\n";
        return kExitFailed;
    }
}

}  // namespace verlinde
