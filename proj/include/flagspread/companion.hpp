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

#pragma once

#include "gf.hpp"
#include "matrix.hpp"

namespace flagspread {

/**
 * @brief Companion matrix of a monic irreducible f = x^k + a_{k-1}x^{k-1} + ... + a_0 over @p field.
 *
 * Ones on the superdiagonal, last row (-a_0, ..., -a_{k-1}).
 */
inline Matrix companion_matrix(const FieldPtr& field, const Poly& f) {
    const FiniteField& F = *field;
    if (f.degree() < 1) throw std::invalid_argument("companion_matrix: polynomial degree must be at least 1");
    if (!f.is_monic()) throw std::invalid_argument("companion_matrix: polynomial is not monic");
    for (Code c : f.coeffs)
        if (!F.contains(c)) throw std::invalid_argument("companion_matrix: coefficient outside the field");
    if (!poly::is_irreducible(F, f)) throw std::invalid_argument("companion_matrix: polynomial is reducible");
    const auto k = static_cast<std::size_t>(f.degree());
    Matrix P(field, k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) P(i, i + 1) = 1;
    for (std::size_t j = 0; j < k; ++j) P(k - 1, j) = F.neg(f.coeffs[j]);
    return P;
}

/// Companion matrix of the top modulus of an extension field, over its base.
inline Matrix companion_matrix(const FieldPtr& extension) {
    if (extension->is_prime_field()) throw std::invalid_argument("companion_matrix: prime field has no modulus");
    return companion_matrix(extension->base(), extension->modulus());
}

/// f(M) for a square matrix M over the field of f's coefficients.
inline Matrix evaluate(const Poly& f, const Matrix& m) {
    Matrix acc(m.field(), m.rows(), m.cols());
    const Matrix id = Matrix::identity(m.field(), m.rows());
    for (std::size_t i = f.coeffs.size(); i-- > 0;) acc = acc * m + id.scaled(f.coeffs[i]);
    return acc;
}

/**
 * @brief The field isomorphism F_{q^k} -> F_q[P], sum v_i alpha^i -> sum v_i P^i.
 *
 * Precomputes the powers of P once; phi(x) for many x is then a linear
 * combination. Throws if P is not the companion matrix of the extension modulus.
 */
class FieldEmbedding {
   public:
    FieldEmbedding(FieldPtr extension, Matrix P) : ext_(std::move(extension)), P_(std::move(P)) {
        if (ext_->is_prime_field()) throw std::invalid_argument("field embedding needs an extension field");
        if (!(P_ == companion_matrix(ext_))) throw std::invalid_argument("P is not the companion matrix of the extension modulus");
        const std::size_t k = ext_->degree();
        powers_.reserve(k);
        Matrix cur = Matrix::identity(ext_->base(), k);
        for (std::size_t i = 0; i < k; ++i) {
            powers_.push_back(cur);
            cur = cur * P_;
        }
    }
    explicit FieldEmbedding(const FieldPtr& extension) : FieldEmbedding(extension, companion_matrix(extension)) {}

    [[nodiscard]] const FieldPtr& extension() const { return ext_; }
    [[nodiscard]] const FieldPtr& base() const { return ext_->base(); }
    [[nodiscard]] const Matrix& companion() const { return P_; }
    [[nodiscard]] std::size_t degree() const { return ext_->degree(); }

    [[nodiscard]] Matrix operator()(Code x) const {
        const std::size_t k = degree();
        const auto v = ext_->digits(x);
        Matrix out(base(), k, k);
        for (std::size_t i = 0; i < k; ++i)
            if (v[i] != 0) out = out + powers_[i].scaled(v[i]);
        return out;
    }

   private:
    FieldPtr ext_;
    Matrix P_;
    std::vector<Matrix> powers_;
};

/// phi(x) for one element; see FieldEmbedding for repeated use.
inline Matrix phi_embed(const Element& x, const Matrix& P) { return FieldEmbedding(x.field(), P)(x.code()); }

}  // namespace flagspread
