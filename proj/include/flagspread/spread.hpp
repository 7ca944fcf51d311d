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
 * @file spread.hpp
 * @brief Field reduction F_{q^k}^s -> F_q^{ks} and the Segre k-spread built from it.
 */

#pragma once

#include <optional>
#include <set>
#include <vector>

#include "companion.hpp"
#include "subspace.hpp"

namespace flagspread {

/**
 * @brief Image of @p u under field reduction: every entry x of its generator
 * becomes the k x k block phi(x), and the result is canonicalized.
 */
inline Subspace field_reduction(const Subspace& u, const FieldEmbedding& phi) {
    if (!same_field(u.field(), phi.extension()))
        throw std::invalid_argument("field_reduction: subspace is over " + u.field()->name() + ", embedding expects " +
                                    phi.extension()->name());
    const std::size_t k = phi.degree(), m = u.dim(), s = u.ambient();
    Matrix big(phi.base(), m * k, s * k);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < s; ++c) {
            const Code x = u.generator()(r, c);
            if (x == 0) continue;
            const Matrix b = phi(x);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) big(r * k + i, c * k + j) = b(i, j);
        }
    return Subspace::span(big);
}

inline Subspace field_reduction(const Subspace& u, const Matrix& P) { return field_reduction(u, FieldEmbedding(u.field(), P)); }

/// The set F_q[P] of all polynomials in P, as matrices.
inline std::set<std::vector<Code>> matrix_field(const FieldEmbedding& phi) {
    std::set<std::vector<Code>> out;
    for (Code x = 0; x < phi.extension()->order(); ++x) out.insert(phi(x).data());
    return out;
}

/**
 * @brief True when the generator of @p member is a block row (A_1|...|A_s) with
 * every A_i in F_q[P] and the first nonzero block equal to I_k.
 */
inline bool has_segre_form(const Subspace& member, const FieldEmbedding& phi, const std::set<std::vector<Code>>& fqp) {
    const std::size_t k = phi.degree();
    const Matrix& g = member.generator();
    if (g.rows() != k || g.cols() % k != 0) return false;
    const Matrix id = Matrix::identity(phi.base(), k);
    bool seen_nonzero = false;
    for (std::size_t b = 0; b < g.cols() / k; ++b) {
        const Matrix blk = g.block(0, b * k, k, k);
        if (!fqp.count(blk.data())) return false;
        if (!seen_nonzero && !blk.is_zero()) {
            if (!(blk == id)) return false;
            seen_nonzero = true;
        }
    }
    return seen_nonzero;
}

/**
 * @brief The Segre spread S(s, k, P) of F_q^{ks}.
 *
 * members[i] is the field reduction of lines[i]; the lines of F_{q^k}^s are in
 * canonical order, so that order indexes the spread everywhere downstream.
 */
struct Spread {
    unsigned k = 0, s = 0;
    FieldEmbedding embedding;
    std::vector<Subspace> lines;
    CDCode members;

    [[nodiscard]] const FieldPtr& base_field() const { return embedding.base(); }
    [[nodiscard]] const FieldPtr& extension_field() const { return embedding.extension(); }
    [[nodiscard]] std::size_t ambient() const { return static_cast<std::size_t>(k) * s; }
    [[nodiscard]] std::size_t size() const { return members.size(); }
};

inline Spread segre_spread(const FieldPtr& base, unsigned k, unsigned s, std::optional<Poly> modulus = std::nullopt,
                           std::uint64_t cap = kDefaultEnumerationCap) {
    if (k < 1) throw std::invalid_argument("segre_spread: k must be at least 1");
    if (s < 2) throw std::invalid_argument("segre_spread: s must be at least 2");
    FieldPtr ext = FiniteField::extend(base, k, std::move(modulus));
    FieldEmbedding phi(ext);
    std::vector<Subspace> lines = grassmannian(ext, 1, s, cap);
    CDCode members(base, static_cast<std::size_t>(k) * s, k);
    const auto fqp = matrix_field(phi);
    for (const auto& l : lines) {
        Subspace m = field_reduction(l, phi);
        if (!has_segre_form(m, phi, fqp)) throw std::logic_error("field reduction of a line is not in Segre block form");
        if (!members.insert(m)) throw std::logic_error("field reduction is not injective on lines");
    }
    return Spread{k, s, std::move(phi), std::move(lines), std::move(members)};
}

/// Cardinality (q^n-1)/(q^k-1) and pairwise trivial intersection.
inline bool is_spread(const CDCode& c) {
    if (c.dim() == 0 || c.ambient() % c.dim() != 0) return false;
    const auto expected = spread_size(c.field()->order(), static_cast<unsigned>(c.ambient()), static_cast<unsigned>(c.dim()));
    if (c.size() != expected) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c[i].intersection_dim(c[j]) != 0) return false;
    return true;
}

inline bool verify_spread(const Spread& s) { return s.members.dim() == s.k && is_spread(s.members); }

}  // namespace flagspread
