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
 * @file json_io.hpp
 * @brief JSON encodings of matrices and objects, and object shorthand.
 */

#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "json.hpp"
#include "verlinde/tensorcat.hpp"
#include "verlinde/ver4plus.hpp"
#include "verlinde/verp.hpp"

namespace verlinde {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::json;

namespace detail {

inline const json& require_field(const json& j, const std::string& name) {
    if (!j.is_object()) throw ValidationError("expected an object holding field '" + name + "'");
    auto it = j.find(name);
    if (it == j.end()) throw ValidationError("missing field '" + name + "'");
    return *it;
}

inline std::size_t as_count(const json& j, const std::string& name) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ValidationError("field '" + name + "' must be a non-negative integer");
    return j.get<std::size_t>();
}

inline std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    return out;
}

/// "3L2" -> (3, "L2"); "P" -> (1, "P").
inline std::pair<std::size_t, std::string> coefficient(const std::string& term) {
    std::size_t i = 0;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
    if (i == 0) return {1, term};
    if (i == term.size()) return {std::stoul(term), ""};
    return {std::stoul(term.substr(0, i)), term.substr(i)};
}

}  // namespace detail

/// {"p": p, "shape": [r, c], "rows": [[...], ...]}
inline json matrix_to_json(const FpMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return {{"p", m.prime()}, {"shape", {m.rows(), m.cols()}}, {"rows", std::move(rows)}};
}

/// Accepts the encoding above, or a bare list of rows when p is supplied.
inline FpMatrix matrix_from_json(const json& j, Scalar p, const std::string& field) {
    const json* rows = &j;
    std::size_t r = 0, c = 0;
    bool shaped = false;
    if (j.is_object()) {
        if (j.contains("p")) {
            const std::size_t q = detail::as_count(j["p"], field + ".p");
            if (p != 0 && q != p) throw ValidationError("field '" + field + ".p' disagrees with p = " + std::to_string(p));
            p = static_cast<Scalar>(q);
        }
        rows = &detail::require_field(j, "rows");
        if (j.contains("shape")) {
            const json& s = j["shape"];
            if (!s.is_array() || s.size() != 2) throw ValidationError("field '" + field + ".shape' must be [rows, cols]");
            r = detail::as_count(s[0], field + ".shape");
            c = detail::as_count(s[1], field + ".shape");
            shaped = true;
        }
    }
    if (p == 0) throw ValidationError("field '" + field + "' needs a prime");
    require_prime(p);
    if (!rows->is_array()) throw ValidationError("field '" + field + "' must be a list of rows");
    if (!shaped) {
        r = rows->size();
        c = r ? (*rows)[0].size() : 0;
    }
    if (rows->size() != r) throw ValidationError("field '" + field + "' has the wrong number of rows");
    FpMatrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i) {
        const json& row = (*rows)[i];
        if (!row.is_array() || row.size() != c) throw ValidationError("field '" + field + "' is ragged at row " + std::to_string(i));
        for (std::size_t k = 0; k < c; ++k) {
            if (!row[k].is_number_integer()) throw ValidationError("field '" + field + "' has a non-integer entry");
            m(i, k) = reduce(row[k].get<long long>(), p);
        }
    }
    return m;
}

inline json ver_object_to_json(const VerObject& v) { return {{"p", v.p}, {"mults", v.mults}}; }

/// "L2", "L1+L3", "2L1", "0" or {"mults": [...]} with mults indexed L_1..L_{p-1}.
inline VerObject ver_object_from_json(const json& j, Scalar p, const std::string& field) {
    require_prime(p);
    VerObject v = VerObject::zero(p);
    if (j.is_string()) {
        const std::string s = detail::trim(j.get<std::string>());
        if (s == "0") return v;
        for (const auto& term : detail::split(s, '+')) {
            const auto [k, name] = detail::coefficient(term);
            if (name.size() < 2 || name[0] != 'L' || !std::all_of(name.begin() + 1, name.end(), ::isdigit))
                throw ValidationError("field '" + field + "': cannot read '" + term + "' as a simple L_i");
            const std::size_t i = std::stoul(name.substr(1));
            if (i < 1 || i >= p) throw ValidationError("field '" + field + "': L_" + std::to_string(i) + " does not exist for p = " + std::to_string(p));
            v.mults[i - 1] += k;
        }
        return v;
    }
    if (j.is_object() && j.contains("p") && detail::as_count(j["p"], field + ".p") != p)
        throw ValidationError("field '" + field + ".p' disagrees with p = " + std::to_string(p));
    const json& m = detail::require_field(j, "mults");
    if (!m.is_array() || m.size() != p - 1)
        throw ValidationError("field '" + field + ".mults' must list " + std::to_string(p - 1) + " multiplicities");
    for (std::size_t i = 0; i + 1 < p; ++i) v.mults[i] = detail::as_count(m[i], field + ".mults");
    return v;
}

/// (a, b) for a copies of 1 plus b copies of P: "1", "P", "2P", "1+P", "0",
/// or {"iso_class": [a, b]}.
inline std::pair<std::size_t, std::size_t> v4_counts_from_json(const json& j, const std::string& field) {
    std::size_t a = 0, b = 0;
    if (j.is_string()) {
        const std::string s = detail::trim(j.get<std::string>());
        if (s == "0") return {0, 0};
        for (const auto& term : detail::split(s, '+')) {
            const auto [k, name] = detail::coefficient(term);
            if (name.empty() && k == 1) a += 1;
            else if (name == "1") a += k;
            else if (name == "P") b += k;
            else throw ValidationError("field '" + field + "': cannot read '" + term + "' as 1 or P");
        }
        return {a, b};
    }
    const json& c = detail::require_field(j, "iso_class");
    if (!c.is_array() || c.size() != 2) throw ValidationError("field '" + field + ".iso_class' must be [a, b]");
    return {detail::as_count(c[0], field + ".iso_class"), detail::as_count(c[1], field + ".iso_class")};
}

inline json module_to_json(const Module& m) { return {{"p", m.prime()}, {"action", matrix_to_json(m.action())}}; }

inline Module module_from_json(const json& j, Scalar p, const std::string& field) {
    return Module(matrix_from_json(detail::require_field(j, "action"), p, field + ".action"));
}

inline json iso_classes_to_json(const std::vector<IsoClass>& h) {
    json out = json::array();
    for (const auto& c : h) out.push_back(c);
    return out;
}

}  // namespace verlinde
