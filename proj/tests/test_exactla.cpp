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

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "verlinde/exactla.hpp"

using namespace verlinde;

TEST(Field, Inverses) {
    for (Scalar p : {2u, 3u, 5u, 7u, 65521u})
        for (Scalar a = 1; a < std::min<Scalar>(p, 200); ++a) EXPECT_EQ(mod_mul(a, mod_inv(a, p), p), 1u);
    EXPECT_THROW(require_prime(4), ValidationError);
    EXPECT_THROW(mod_inv(0, 5), Error);
}

TEST(FpMatrix, RejectsOutOfRangeEntries) {
    EXPECT_THROW(FpMatrix(1, 1, 3, {3}), ValidationError);
    EXPECT_THROW(FpMatrix(1, 2, 3, {1}), ValidationError);
}

TEST(FpMatrix, ProductAndKron) {
    const auto a = FpMatrix::from_rows(5, {{1, 2}, {3, 4}});
    const auto b = FpMatrix::from_rows(5, {{0, 1}, {1, 0}});
    EXPECT_EQ(a * b, FpMatrix::from_rows(5, {{2, 1}, {4, 3}}));
    const auto k = kron(a, b);
    EXPECT_EQ(k.rows(), 4u);
    EXPECT_EQ(k(0, 1), 1u);
    EXPECT_EQ(k(3, 2), 4u);
    // mixed product property
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        const auto a1 = oracle::random_matrix(rng, 2, 3, 7), a2 = oracle::random_matrix(rng, 3, 2, 7);
        const auto b1 = oracle::random_matrix(rng, 2, 2, 7), b2 = oracle::random_matrix(rng, 2, 3, 7);
        EXPECT_EQ(kron(a1, b1) * kron(a2, b2), kron(a1 * a2, b1 * b2));
    }
}

TEST(FpMatrix, LargePrimeAccumulation) {
    const Scalar p = 65521;
    FpMatrix a(1, 4000, p), b(4000, 1, p);
    for (std::size_t i = 0; i < 4000; ++i) a(0, i) = b(i, 0) = p - 1;
    EXPECT_EQ((a * b)(0, 0), 4000u % p);
}

TEST(Elimination, RankMatchesOracle) {
    std::mt19937 rng(11);
    for (Scalar p : {2u, 3u, 5u}) {
        for (int t = 0; t < 60; ++t) {
            const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            auto m = oracle::random_matrix(rng, r, c, p);
            if (t % 3 == 0 && r > 1)  // force dependencies
                for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = (m(0, j) * 2) % p;
            EXPECT_EQ(rank(m), oracle::rank(oracle::to_mat(m), p));
        }
    }
}

TEST(Elimination, KernelDimensionByEnumeration) {
    std::mt19937 rng(3);
    for (Scalar p : {2u, 3u}) {
        for (int t = 0; t < 40; ++t) {
            const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
            const auto m = oracle::random_matrix(rng, r, c, p);
            const auto k = kernel_matrix(m);
            EXPECT_EQ(k.cols(), oracle::brute_kernel_dim(oracle::to_mat(m), c, p));
            EXPECT_TRUE((m * k).is_zero());
            EXPECT_EQ(rank(k), k.cols());
        }
    }
}

TEST(Elimination, SolveInverseAndFactorization) {
    std::mt19937 rng(5);
    for (int t = 0; t < 40; ++t) {
        const Scalar p = 7;
        const auto a = oracle::random_matrix(rng, 4, 3, p);
        const auto x = oracle::random_matrix(rng, 3, 2, p);
        const auto b = a * x;
        auto s = solve(a, b);
        ASSERT_TRUE(s);
        EXPECT_EQ(a * *s, b);
        const auto rf = rank_factorization(a);
        EXPECT_EQ(rf.c * rf.f, a);
        EXPECT_EQ(rf.c.cols(), rank(a));
    }
    const auto sing = FpMatrix::from_rows(3, {{1, 2}, {2, 1}});
    EXPECT_THROW(inverse(sing), Error);
    const auto inc = FpMatrix::from_rows(3, {{1, 0}, {0, 0}});
    EXPECT_FALSE(solve(inc, FpMatrix::from_rows(3, {{0}, {1}})));
    const auto m = FpMatrix::from_rows(5, {{1, 2}, {3, 4}});
    EXPECT_TRUE((m * inverse(m)).is_identity());
}

TEST(Elimination, ColumnBasisAndComplement) {
    const auto m = FpMatrix::from_rows(3, {{1, 2, 0}, {0, 0, 1}, {1, 2, 1}});
    const auto b = column_basis(m);
    EXPECT_EQ(b.cols(), 2u);
    const auto c = complement_columns(b);
    EXPECT_EQ(c.cols(), 1u);
    EXPECT_EQ(rank(hstack(b, c)), 3u);
    EXPECT_TRUE(span_contains(b, m));
}

TEST(Elimination, EmptyShapes) {
    const FpMatrix e(0, 3, 5);
    EXPECT_EQ(rank(e), 0u);
    EXPECT_EQ(kernel_matrix(e).cols(), 3u);
    const FpMatrix z(3, 0, 5);
    EXPECT_EQ(kernel_matrix(z).rows(), 0u);
    EXPECT_EQ(complement_columns(z).cols(), 3u);
}

TEST(SpanBuilder, Independence) {
    SpanBuilder s(3, 5);
    EXPECT_TRUE(s.add({1, 2, 0}));
    EXPECT_TRUE(s.add({0, 1, 1}));
    EXPECT_FALSE(s.add({2, 2, 3}));
    EXPECT_TRUE(s.contains({1, 3, 1}));
    EXPECT_EQ(s.size(), 2u);
}
