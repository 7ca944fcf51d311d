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
 * @file matrix.hpp
 * @brief Dense matrices over a FiniteField with exact Gaussian elimination.
 */

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace flagspread {

class Matrix;

/// Output of Matrix::rref().
struct Rref;

/**
 * @brief Row-major dense matrix of element codes.
 *
 * A matrix may have zero rows (the generator of the zero subspace) but always
 * knows its column count and field.
 */
class Matrix {
   public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
        if (!field_) throw std::invalid_argument("matrix without a field");
    }

    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Code> data)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (!field_) throw std::invalid_argument("matrix without a field");
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix data size does not match its shape");
        for (Code c : data_)
            if (!field_->contains(c)) throw std::out_of_range("matrix entry " + std::to_string(c) + " outside " + field_->name());
    }

    /// Build from nested rows; every row must have @p cols entries.
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Code>>& rows, std::size_t cols) {
        std::vector<Code> data;
        data.reserve(rows.size() * cols);
        for (const auto& r : rows) {
            if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
            data.insert(data.end(), r.begin(), r.end());
        }
        return Matrix(std::move(field), rows.size(), cols, std::move(data));
    }
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Code>>& rows) {
        if (rows.empty()) throw std::invalid_argument("column count of an empty row list is ambiguous");
        return from_rows(std::move(field), rows, rows.front().size());
    }

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] const FieldPtr& field() const { return field_; }
    [[nodiscard]] const std::vector<Code>& data() const { return data_; }
    [[nodiscard]] bool empty() const { return rows_ == 0; }

    Code& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Code operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] std::vector<Code> row(std::size_t r) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }
    [[nodiscard]] std::vector<std::vector<Code>> to_rows() const {
        std::vector<std::vector<Code>> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
        return out;
    }

    /// Rows [first, first + count).
    [[nodiscard]] Matrix row_range(std::size_t first, std::size_t count) const {
        if (first + count > rows_) throw std::out_of_range("row range outside matrix");
        return {field_, count, cols_,
                std::vector<Code>(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
                                  data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_))};
    }
    [[nodiscard]] Matrix top_rows(std::size_t count) const { return row_range(0, count); }

    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block outside matrix");
        Matrix out(field_, nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
        return out;
    }

    [[nodiscard]] bool is_zero() const {
        for (Code c : data_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && same_field(a.field_, b.field_);
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix out(a.field_, a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.field_->add(a.data_[i], b.data_[i]);
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (!same_field(a.field_, b.field_)) throw std::invalid_argument("matrix product over different fields");
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        const FiniteField& F = *a.field_;
        Matrix out(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const Code x = a(i, l);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = F.add(out(i, j), F.mul(x, b(l, j)));
            }
        return out;
    }

    [[nodiscard]] Matrix scaled(Code s) const {
        Matrix out(*this);
        for (Code& c : out.data_) c = field_->mul(c, s);
        return out;
    }

    [[nodiscard]] Matrix pow(std::size_t e) const {
        if (rows_ != cols_) throw std::invalid_argument("power of a non-square matrix");
        Matrix result = identity(field_, rows_), base = *this;
        while (e) {
            if (e & 1) result = result * base;
            base = base * base;
            e >>= 1;
        }
        return result;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix out(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        return out;
    }

    [[nodiscard]] Rref rref() const;
    [[nodiscard]] std::size_t rank() const;

   private:
    void require_same_shape(const Matrix& b) const {
        if (!same_field(field_, b.field_)) throw std::invalid_argument("matrices over different fields");
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Code> data_;
};

struct Rref {
    Matrix matrix;                    // same shape as the input, zero rows at the bottom
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

inline Rref Matrix::rref() const {
    const FiniteField& F = *field_;
    Matrix m(*this);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && m(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(piv, j));
        const Code s = F.inv(m(r, c));
        if (s != 1)
            for (std::size_t j = c; j < cols_; ++j) m(r, j) = F.mul(m(r, j), s);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Code f = m(i, c);
            for (std::size_t j = c; j < cols_; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

inline std::size_t Matrix::rank() const { return rref().rank; }

/// A above B.
inline Matrix stack(const Matrix& a, const Matrix& b) {
    if (!same_field(a.field(), b.field())) throw std::invalid_argument("stack: matrices over different fields");
    if (a.cols() != b.cols())
        throw std::invalid_argument("stack: column counts " + std::to_string(a.cols()) + " and " + std::to_string(b.cols()) +
                                    " differ");
    std::vector<Code> data = a.data();
    data.insert(data.end(), b.data().begin(), b.data().end());
    return {a.field(), a.rows() + b.rows(), a.cols(), std::move(data)};
}

/// A to the left of B.
inline Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (!same_field(a.field(), b.field())) throw std::invalid_argument("hconcat: matrices over different fields");
    if (a.rows() != b.rows())
        throw std::invalid_argument("hconcat: row counts " + std::to_string(a.rows()) + " and " + std::to_string(b.rows()) +
                                    " differ");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

/// RREF with the zero rows dropped: the canonical generator of the row space.
inline Matrix row_space_basis(const Matrix& m) {
    Rref r = m.rref();
    return r.matrix.top_rows(r.rank);
}

/// dim(rowsp U) + dim(rowsp V) - dim(rowsp U + rowsp V).
inline std::size_t intersection_dim(const Matrix& u, const Matrix& v) {
    if (u.cols() != v.cols()) throw std::invalid_argument("intersection_dim: ambient dimensions differ");
    return u.rank() + v.rank() - stack(u, v).rank();
}

/**
 * @brief Generator of {v : U v^T = 0} under the bilinear form sum u_i v_i.
 *
 * The result is in RREF. @p u must have full row rank.
 */
inline Matrix orthogonal_complement(const Matrix& u) {
    const FiniteField& F = *u.field();
    const Rref r = u.rref();
    if (r.rank != u.rows()) throw std::invalid_argument("orthogonal_complement: generator matrix is rank deficient");
    const std::size_t n = u.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    // one null-space vector per free column f: x_f = 1, x_{pivot_i} = -R(i, f)
    Matrix out(u.field(), n - r.rank, n);
    std::size_t row = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        out(row, f) = 1;
        for (std::size_t i = 0; i < r.rank; ++i) out(row, r.pivots[i]) = F.neg(r.matrix(i, f));
        ++row;
    }
    return row_space_basis(out);
}

}  // namespace flagspread
