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
#include "verlinde/homogquot.hpp"
#include "verlinde/ver4plus.hpp"
#include "verlinde/verp.hpp"

using namespace verlinde;

namespace {

AdditiveQuotient<Ver4PlusCategory> socle_problem(std::size_t n) {
    Ver4PlusCategory cat;
    return {cat, cat.unit(), cat.projective(), FpMatrix::from_rows(2, {{1}, {0}}), n};
}

AdditiveQuotient<VerpCategory> split_verp_problem(std::size_t n) {
    VerpCategory cat(5);
    const Module x = cat.object(VerObject::simple(5, 2));
    const Module y = cat.object({5, {0, 1, 1, 0}});
    FpMatrix iota(5, 2, 5);
    iota(0, 0) = iota(1, 1) = 1;
    return {cat, x, y, iota, n};
}

AdditiveQuotient<VecCategory> line_problem(Scalar p, std::size_t n) {
    VecCategory cat(p);
    return {cat, cat.object(1), cat.object(2), FpMatrix::from_rows(p, {{1}, {0}}), n};
}

void expect_all_true(const std::vector<bool>& v, const char* what) {
    for (std::size_t d = 0; d < v.size(); ++d) EXPECT_TRUE(v[d]) << what << " fails in degree " << d;
}

}  // namespace

TEST(Setup, CokernelAndDuals) {
    auto v = line_problem(3, 2);
    EXPECT_EQ(v.z().object.dim(), 1u);
    auto s = socle_problem(2);
    EXPECT_EQ(iso_class_v4(s.z().object), (IsoClass{1, 0}));
    EXPECT_EQ(iso_class_v4(s.y_dual()), (IsoClass{0, 1}));
    auto q = split_verp_problem(1);
    EXPECT_EQ(q.category().iso_class(q.z().object), (IsoClass{0, 0, 1, 0}));
}

TEST(Setup, RejectsNonMono) {
    Ver4PlusCategory cat;
    EXPECT_THROW(AdditiveQuotient<Ver4PlusCategory>(cat, cat.projective(), cat.unit(), FpMatrix::from_rows(2, {{0, 1}}), 2),
                 ValidationError);
    EXPECT_THROW(AdditiveQuotient<Ver4PlusCategory>(cat, cat.unit(), cat.projective(), FpMatrix::from_rows(2, {{0}, {1}}), 2),
                 ValidationError);
}

TEST(QuotientAlgebra, SocleExample) {
    auto s = socle_problem(6);
    EXPECT_EQ(s.r().alg.dims(), (std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 0}));
    for (const auto& c : s.r().alg.comps) EXPECT_TRUE(c.action().is_zero());
    EXPECT_FALSE(algebra_violation(s.r().alg));
}

TEST(QuotientAlgebra, SplitVerpIsSymOfZ) {
    auto q = split_verp_problem(4);
    VerpCategory cat(5);
    const auto sz = free_symmetric(cat, cat.object(VerObject::simple(5, 3)), 4);
    EXPECT_EQ(q.r().alg.hilbert(), sz.hilbert());
}

TEST(QuotientAlgebra, LineIsPolynomial) {
    auto v = line_problem(3, 5);
    EXPECT_EQ(v.r().alg.dims(), (std::vector<std::size_t>(6, 1)));
}

TEST(Coaction, TrivialAndTranslation) {
    VecCategory cat(3);
    AdditiveQuotient<VecCategory> triv(cat, cat.zero(), cat.object(2), FpMatrix(2, 0, 3), 3);
    for (std::size_t d = 0; d <= 3; ++d) EXPECT_TRUE(triv.rho_block(d, d).is_identity());
    EXPECT_EQ(triv.invariants().alg.dims(), triv.a().dims());
    auto v = line_problem(3, 3);
    // ρ(y*) = y*⊗1 + 1⊗res(y*): generators dual to (x, y) with iota = first axis
    const auto rho1 = v.coaction()[1];
    EXPECT_EQ(rho1, FpMatrix::from_rows(3, {{1, 0}, {1, 0}, {0, 1}}));
}

TEST(Coaction, LawsOnAllInstances) {
    auto s = socle_problem(5);
    EXPECT_TRUE(s.check_coassociativity());
    EXPECT_TRUE(s.check_counit());
    auto q = split_verp_problem(3);
    EXPECT_TRUE(q.check_coassociativity());
    EXPECT_TRUE(q.check_counit());
    auto v = line_problem(2, 5);
    EXPECT_TRUE(v.check_coassociativity());
    EXPECT_TRUE(v.check_counit());
}

TEST(Coaction, SocleDegreeTwoByHand) {
    // A_2 = S^2(P*): x^T on P* makes v* the socle; ρ(u*) = u*⊗1 + 1⊗t, ρ(v*) = v*⊗1
    auto s = socle_problem(2);
    const auto& a = s.a();
    const FpMatrix rho1 = s.coaction()[1];
    EXPECT_EQ(rho1, FpMatrix::from_rows(2, {{1, 0}, {1, 0}, {0, 1}}));
    // block of ρ_2 in A_1⊗H_1 is the product (u*⊗1)(1⊗t) = u*⊗t on u*^2, 0 on the socle line
    const FpMatrix mid = s.rho_block(2, 1);
    const FpMatrix u2 = a.m(1, 1) * kron(FpMatrix::from_rows(2, {{1}, {0}}), FpMatrix::from_rows(2, {{1}, {0}}));
    const FpMatrix uv = a.m(1, 1) * kron(FpMatrix::from_rows(2, {{1}, {0}}), FpMatrix::from_rows(2, {{0}, {1}}));
    EXPECT_TRUE((mid * u2).is_zero());  // 2 u*⊗t vanishes in characteristic 2
    const auto ahd = s.a_tensor_h();
    EXPECT_EQ(ahd[2].dim(), a[2].dim() + a[1].dim() * s.h()[1].dim() + s.h()[2].dim());
    EXPECT_EQ(s.rho_block(2, 0) * u2, FpMatrix::from_rows(2, {{1}}));  // u*^2 |-> 1⊗t^2
    EXPECT_TRUE((s.rho_block(2, 0) * uv).is_zero());
    EXPECT_EQ(mid * uv, FpMatrix::from_rows(2, {{0}, {1}}));  // u*v* |-> v*⊗t
}

TEST(Invariants, EqualR) {
    auto s = socle_problem(6);
    auto b = s.invariants();
    EXPECT_EQ(b.alg.dims(), s.r().alg.dims());
    auto q = split_verp_problem(4);
    EXPECT_EQ(q.invariants().alg.hilbert(), q.r().alg.hilbert());
}

TEST(Reports, AllThreeInstances) {
    auto s = socle_problem(5);
    auto rs = s.report();
    expect_all_true(rs.gr_ok, "gr");
    expect_all_true(rs.can_iso, "can iso");
    expect_all_true(rs.can_surj, "can surj");
    expect_all_true(rs.b_eq_r, "B == R");
    EXPECT_TRUE(rs.all_ok());
    auto q = split_verp_problem(4);
    EXPECT_TRUE(q.report().all_ok());
    auto v = line_problem(2, 6);
    EXPECT_TRUE(v.report().all_ok());
}

TEST(Reports, QuotientByEverything) {
    Ver4PlusCategory cat;
    AdditiveQuotient<Ver4PlusCategory> all(cat, cat.projective(), cat.projective(), FpMatrix::identity(2, 2), 4);
    const auto r = all.report();
    EXPECT_EQ(all.r().alg.dims(), (std::vector<std::size_t>{1, 0, 0, 0, 0}));
    EXPECT_TRUE(r.all_ok());
}

TEST(Filtration, ComplementIndependence) {
    std::mt19937 rng(71);
    auto run = [&](auto& prob, std::size_t n) {
        const FpMatrix zi = prob.z_dual_inclusion();
        const std::size_t m = zi.rows();
        const Scalar p = zi.prime();
        for (int t = 0; t < 5; ++t) {
            // random complement: random columns completing the image of Z*
            FpMatrix w;
            do w = oracle::random_matrix(rng, m, m - zi.cols(), p);
            while (rank(hstack(zi, w)) != m);
            for (std::size_t d = 0; d <= n; ++d) {
                const auto canon = prob.canonical_filtration(d);
                const auto other = prob.filtration_from_complement(d, w);
                ASSERT_EQ(canon.size(), other.size());
                for (std::size_t k = 0; k < canon.size(); ++k) {
                    EXPECT_EQ(canon[k].cols(), other[k].cols()) << d << " " << k;
                    EXPECT_TRUE(span_contains(canon[k], other[k]));
                }
            }
        }
    };
    auto s = socle_problem(5);
    run(s, 5);
    VecCategory cat(3);
    AdditiveQuotient<VecCategory> plane(cat, cat.object(1), cat.object(3), FpMatrix::from_rows(3, {{1}, {1}, {0}}), 4);
    run(plane, 4);
}
