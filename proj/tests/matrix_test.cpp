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

#include <gtest/gtest.h>

#include <random>

#include "flagspread/matrix.hpp"
#include "flagspread/subspace.hpp"
#include "oracle.hpp"

using namespace flagspread;

namespace {

const FieldPtr F2 = FiniteField::prime(2);

std::vector<FieldPtr> fields() {
    return {FiniteField::prime(2), FiniteField::prime(3), FiniteField::create(2, {2}), FiniteField::create(3, {2}),
            FiniteField::create(2, {3})};
}

}  // namespace

TEST(Rref, Identity) {
    const Matrix id = Matrix::identity(F2, 4);
    const Rref r = id.rref();
    EXPECT_EQ(r.matrix, id);
    EXPECT_EQ(r.rank, 4u);
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Rref, HandEliminationExample) {
    // R2 += R1 gives (0,1,1); then R1 += R2 gives (1,0,1)
    const Rref r = Matrix::from_rows(F2, {{1, 1, 0}, {1, 0, 1}}).rref();
    EXPECT_EQ(r.matrix, Matrix::from_rows(F2, {{1, 0, 1}, {0, 1, 1}}));
    EXPECT_EQ(r.rank, 2u);
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, ZeroMatrix) {
    const Matrix z(F2, 3, 5);
    const Rref r = z.rref();
    EXPECT_EQ(r.matrix, z);
    EXPECT_EQ(r.rank, 0u);
    EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, InvariantUnderInvertibleRowOperations) {
    std::mt19937_64 rng(11);
    for (const auto& F : fields()) {
        std::uniform_int_distribution<Code> d(0, F->order() - 1);
        for (int t = 0; t < 100; ++t) {
            Matrix m(F, 4, 6);
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 6; ++c) m(r, c) = d(rng);
            const Matrix T = oracle::random_full_rank(F, 4, 4, rng);
            const Rref a = m.rref(), b = (T * m).rref();
            ASSERT_EQ(a.matrix, b.matrix) << F->name();
            ASSERT_EQ(a.matrix.rref().matrix, a.matrix);  // idempotent
            // row space agrees with brute force
            ASSERT_EQ(oracle::span_set(*F, a.matrix.to_rows(), 6), oracle::span_set(*F, m.to_rows(), 6));
        }
    }
}

TEST(Assembly, StackAndConcat) {
    const Matrix a = Matrix::from_rows(F2, {{1, 0, 1}});
    const Matrix b = Matrix::from_rows(F2, {{0, 1, 1}});
    EXPECT_EQ(stack(a, b), Matrix::from_rows(F2, {{1, 0, 1}, {0, 1, 1}}));
    const Matrix P = Matrix::from_rows(F2, {{0, 1}, {1, 1}});
    EXPECT_EQ(hconcat(Matrix::identity(F2, 2), P), Matrix::from_rows(F2, {{1, 0, 0, 1}, {0, 1, 1, 1}}));
    EXPECT_EQ(stack(a, Matrix(F2, 0, 3)), a);
    EXPECT_THROW(stack(a, P), std::invalid_argument);
    EXPECT_THROW(hconcat(a, P), std::invalid_argument);
    EXPECT_THROW(stack(a, Matrix(FiniteField::prime(3), 1, 3)), std::invalid_argument);
}

TEST(IntersectionDim, Examples) {
    const Matrix u = Matrix::from_rows(F2, {{1, 0, 1}, {0, 1, 0}});
    EXPECT_EQ(intersection_dim(u, u), 2u);
    EXPECT_EQ(intersection_dim(Matrix::from_rows(F2, {{1, 0, 0}}), Matrix::from_rows(F2, {{0, 1, 1}})), 0u);
    // any two distinct hyperplanes of F_4^3 meet in a line
    auto f4 = FiniteField::create(2, {2});
    const auto hyperplanes = grassmannian(f4, 2, 3);
    for (std::size_t i = 0; i < hyperplanes.size(); ++i)
        for (std::size_t j = i + 1; j < hyperplanes.size(); ++j)
            ASSERT_EQ(intersection_dim(hyperplanes[i].generator(), hyperplanes[j].generator()), 1u);
    EXPECT_THROW(intersection_dim(u, Matrix::identity(F2, 2)), std::invalid_argument);
}

TEST(OrthogonalComplement, Examples) {
    EXPECT_EQ(orthogonal_complement(Matrix::identity(F2, 3)).rows(), 0u);
    EXPECT_EQ(orthogonal_complement(Matrix::from_rows(F2, {{1, 0, 0}})), Matrix::from_rows(F2, {{0, 1, 0}, {0, 0, 1}}));
    EXPECT_THROW(orthogonal_complement(Matrix::from_rows(F2, {{1, 1, 0}, {1, 1, 0}})), std::invalid_argument);
}

TEST(OrthogonalComplement, MatchesBruteForceNullSpaceAndIsAnInvolution) {
    std::mt19937_64 rng(3);
    for (const auto& F : fields()) {
        const std::size_t n = F->order() <= 3 ? 5 : 4;
        for (std::size_t m = 1; m < n; ++m)
            for (int t = 0; t < 10; ++t) {
                const Matrix u = row_space_basis(oracle::random_full_rank(F, m, n, rng));
                const Matrix c = orthogonal_complement(u);
                ASSERT_EQ(u.rows() + c.rows(), n);
                ASSERT_EQ(oracle::span_set(*F, c.to_rows(), n), oracle::null_space(*F, u.to_rows(), n));
                ASSERT_EQ(orthogonal_complement(c), u);
            }
    }
}

TEST(Rank, StackIsDimensionOfSum) {
    std::mt19937_64 rng(5);
    for (const auto& F : fields())
        for (int t = 0; t < 50; ++t) {
            const Matrix u = oracle::random_full_rank(F, 2, 5, rng), v = oracle::random_full_rank(F, 3, 5, rng);
            const std::size_t r = stack(u, v).rank();
            ASSERT_LE(r, 5u);
            ASSERT_LE(r, u.rows() + v.rows());
            auto su = oracle::span_set(*F, u.to_rows(), 5), sv = oracle::span_set(*F, v.to_rows(), 5);
            ASSERT_EQ(r, u.rows() + v.rows() - oracle::dim_of(oracle::meet(su, sv), F->order()));
        }
}
