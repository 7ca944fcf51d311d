/* Copyright 2026 The flagspread Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

/**
 * @file io.hpp
 * @brief JSON interchange for fields, matrices, codes, spreads and matchings.
 *
 * Everything is written with element codes, never symbolic names:
 *
 *   field      {"p": 2, "degrees": [2], "moduli": [[1,1,1]]}   moduli constant term first
 *   matrix     [[0,1],[1,1]]                                     row-major codes
 *   CD code    {"field": F, "ambient": n, "dim": m, "members": [matrix, ...]}
 *   spread     CD code plus "params": {"q", "k", "s", "modulus"}
 *   flag code  {"field": F, "ambient": n, "type": [t_1, ...], "flags": [[matrix, ...], ...]}
 *   matching   [[line, hyperplane], ...]                          in line order
 *
 * Parsing canonicalizes every generator matrix, so inputs need not be in RREF.
 */

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "flag_code.hpp"
#include "matching.hpp"
#include "spread.hpp"
#include "subspace.hpp"

namespace flagspread::io {

using nlohmann::json;

/// Malformed or inconsistent input.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline json poly_to_json(const Poly& f) { return f.coeffs; }

inline Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of coefficient codes");
    return Poly(j.get<std::vector<Code>>());
}

inline json field_to_json(const FiniteField& f) {
    json mods = json::array();
    for (const auto& m : f.moduli()) mods.push_back(poly_to_json(m));
    return {{"p", f.characteristic()}, {"degrees", f.degrees()}, {"moduli", mods}};
}

inline FieldPtr field_from_json(const json& j) {
    try {
        const auto p = j.at("p").get<std::uint32_t>();
        const auto degrees = j.value("degrees", std::vector<unsigned>{});
        std::vector<Poly> moduli;
        if (j.contains("moduli"))
            for (const auto& m : j.at("moduli")) moduli.push_back(poly_from_json(m));
        return FiniteField::create(p, degrees, moduli);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad field description: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad field description: ") + e.what());
    }
}

inline json matrix_to_json(const Matrix& m) { return m.to_rows(); }

inline Matrix matrix_from_json(const json& j, const FieldPtr& field, std::size_t cols) {
    if (!j.is_array()) throw ParseError("matrix must be an array of rows");
    std::vector<std::vector<Code>> rows;
    for (const auto& r : j) {
        if (!r.is_array() || r.size() != cols)
            throw ParseError("matrix row must have " + std::to_string(cols) + " entries");
        std::vector<Code> row;
        for (const auto& x : r) {
            if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0))
                throw ParseError("matrix entries must be nonnegative element codes");
            const auto c = x.get<std::uint64_t>();
            if (c >= field->order()) throw ParseError("matrix entry " + std::to_string(c) + " outside " + field->name());
            row.push_back(static_cast<Code>(c));
        }
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(field, rows, cols);
}

/// Generator rows must be independent: a subspace of the stated dimension.
inline Subspace subspace_from_json(const json& j, const FieldPtr& field, std::size_t ambient, std::optional<std::size_t> dim = {}) {
    const Matrix m = matrix_from_json(j, field, ambient);
    Subspace u = Subspace::span(m);
    if (u.dim() != m.rows()) throw ParseError("generator matrix is rank deficient");
    if (dim && u.dim() != *dim)
        throw ParseError("subspace has dimension " + std::to_string(u.dim()) + ", expected " + std::to_string(*dim));
    return u;
}

inline json cdcode_to_json(const CDCode& c) {
    json members = json::array();
    for (const auto& u : c.members()) members.push_back(matrix_to_json(u.generator()));
    return {{"field", field_to_json(*c.field())}, {"ambient", c.ambient()}, {"dim", c.dim()}, {"members", members}};
}

inline CDCode cdcode_from_json(const json& j) {
    try {
        FieldPtr f = field_from_json(j.at("field"));
        const auto n = j.at("ambient").get<std::size_t>();
        const auto m = j.at("dim").get<std::size_t>();
        CDCode c(f, n, m);
        for (const auto& g : j.at("members"))
            if (!c.insert(subspace_from_json(g, f, n, m))) throw ParseError("duplicate member in code");
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad code: ") + e.what());
    }
}

inline json spread_to_json(const Spread& s) {
    json j = cdcode_to_json(s.members);
    j["params"] = {{"q", s.base_field()->order()},
                   {"k", s.k},
                   {"s", s.s},
                   {"modulus", poly_to_json(s.extension_field()->modulus())}};
    return j;
}

inline json flag_code_to_json(const FlagCode& c) {
    json flags = json::array();
    for (const auto& f : c.members()) {
        json subs = json::array();
        for (const auto& u : f.subspaces()) subs.push_back(matrix_to_json(u.generator()));
        flags.push_back(std::move(subs));
    }
    return {{"field", field_to_json(*c.field())}, {"ambient", c.ambient()}, {"type", c.type().dims()}, {"flags", flags}};
}

/// Rejects wrong dimensions, broken nesting and repeated flags.
inline FlagCode flag_code_from_json(const json& j) {
    try {
        FieldPtr f = field_from_json(j.at("field"));
        const auto n = j.at("ambient").get<std::size_t>();
        TypeVector t(j.at("type").get<std::vector<std::size_t>>(), n);
        FlagCode c(f, t);
        std::size_t idx = 0;
        for (const auto& fj : j.at("flags")) {
            if (!fj.is_array() || fj.size() != t.length()) throw ParseError("flag " + std::to_string(idx) + " has the wrong length");
            std::vector<Subspace> subs;
            for (std::size_t i = 0; i < t.length(); ++i) subs.push_back(subspace_from_json(fj[i], f, n, t[i]));
            try {
                if (!c.insert(Flag(t, std::move(subs)))) throw ParseError("flag " + std::to_string(idx) + " is repeated");
            } catch (const std::invalid_argument& e) {
                throw ParseError("flag " + std::to_string(idx) + ": " + e.what());
            }
            ++idx;
        }
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad flag code: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad flag code: ") + e.what());
    }
}

inline json matching_to_json(const IncidenceGraph& g, const Matching& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.map.size(); ++i)
        out.push_back({matrix_to_json(g.left[i].generator()), matrix_to_json(g.right[m.map[i]].generator())});
    return out;
}

/// Pairs over the field of @p g, in any order; the result is not validated.
inline Matching matching_from_json(const json& j, const IncidenceGraph& g) {
    if (!j.is_array()) throw ParseError("matching must be an array of [line, hyperplane] pairs");
    const FieldPtr& f = g.left.front().field();
    const std::size_t s = g.left.front().ambient();
    std::vector<std::pair<Subspace, Subspace>> pairs;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw ParseError("matching entry must be a [line, hyperplane] pair");
        pairs.emplace_back(subspace_from_json(p[0], f, s, 1), subspace_from_json(p[1], f, s, s - 1));
    }
    try {
        return matching_from_pairs(g, pairs);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad matching: ") + e.what());
    }
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump() << '\n';
}

}  // namespace flagspread::io
