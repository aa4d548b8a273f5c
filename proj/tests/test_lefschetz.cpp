#include "support.hpp"

#include <qkahler/hodge.hpp>
#include <qkahler/lefschetz.hpp>

#include <gtest/gtest.h>

using namespace qk_test;

namespace {

std::vector<std::uint32_t> subsets(int n, int size) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == size) out.push_back(m);
    return out;
}

}  // namespace

TEST(Lefschetz, KernelExamples) {
    EXPECT_TRUE(L(form(2, {1}, {2})).is_zero());
    EXPECT_TRUE(L(form(2, {1}, {1}) - Scalar::q(-2) * form(2, {2}, {2})).is_zero());
    EXPECT_FALSE(L(form(2, {1}, {1})).is_zero());
}

TEST(Lefschetz, KappaPowerFormula) {
    for (int n = 1; n <= 4; ++n) {
        for (int l = 0; l <= n; ++l) {
            FiberForm sum(n);
            for (auto I : subsets(n, l)) sum.add_term(Monomial{I, I}, Scalar(1));
            Scalar c = qfact(l);
            if (l % 2 == 1) c *= Scalar::i();
            EXPECT_EQ(Lpow(FiberForm::unit(n), l), c * sum) << n << " " << l;
        }
        EXPECT_TRUE(Lpow(FiberForm::unit(n), n + 1).is_zero());
    }
}

TEST(Lefschetz, RaisesBidegree) {
    Fuzz fz(61);
    for (int t = 0; t < 40; ++t) {
        int n = fz.uniform(1, 3);
        Monomial m = fz.monomial(n);
        FiberForm image = L(FiberForm(n, m));
        for (const auto& [mm, c] : image.terms()) EXPECT_EQ(mm.bidegree(), (Bidegree{m.a() + 1, m.b() + 1}));
    }
}

TEST(Primitive, MiddleBlockOfRankTwo) {
    auto prim = primitive_basis(2, 1, 1);
    std::vector<FiberForm> expected = {form(2, {1}, {2}), form(2, {2}, {1}),
                                       form(2, {1}, {1}) - Scalar::q(-2) * form(2, {2}, {2})};
    ASSERT_EQ(prim.size(), 3u);
    std::vector<FiberForm> both = prim;
    both.insert(both.end(), expected.begin(), expected.end());
    EXPECT_EQ(span_rank(2, prim), 3u);
    EXPECT_EQ(span_rank(2, expected), 3u);
    EXPECT_EQ(span_rank(2, both), 3u);
}

TEST(Primitive, EdgeCases) {
    for (int n = 1; n <= 4; ++n) {
        auto p0 = primitive_basis(n, 0, 0);
        ASSERT_EQ(p0.size(), 1u);
        EXPECT_EQ(p0.front(), FiberForm::unit(n));
        EXPECT_TRUE(primitive_basis(n, n, 1).empty());
    }
    EXPECT_EQ(primitive_basis(3, 1, 1).size(), 8u);
}

TEST(Primitive, DimensionsAndDefiningProperty) {
    for (int n = 1; n <= 3; ++n) {
        PrimitiveBasis pb = primitive_bases(n);
        for (int k = 0; k <= n; ++k) {
            EXPECT_EQ(static_cast<long>(pb.dimension(k)), binomial(2 * n, k) - binomial(2 * n, k - 2)) << n << " " << k;
        }
        for (const auto& [bd, forms] : pb.spaces) {
            const int k = bd.first + bd.second;
            EXPECT_EQ(span_rank(n, forms), forms.size());
            for (const auto& alpha : forms) {
                EXPECT_TRUE(Lpow(alpha, n - k + 1).is_zero());
                EXPECT_FALSE(Lpow(alpha, n - k).is_zero());
                for (const auto& [m, c] : alpha.terms()) EXPECT_EQ(m.bidegree(), bd);
            }
        }
    }
}

TEST(Primitive, LevelsReconstructEachDegree) {
    for (int n = 1; n <= 3; ++n) {
        PrimitiveBasis pb = primitive_bases(n);
        for (int k = 0; k <= 2 * n; ++k) {
            std::vector<FiberForm> spanning;
            for (const auto& [bd, forms] : pb.spaces) {
                const int kp = bd.first + bd.second;
                if ((k - kp) % 2 != 0 || kp > k) continue;
                const int j = (k - kp) / 2;
                if (j > n - kp) continue;
                for (const auto& alpha : forms) spanning.push_back(Lpow(alpha, j));
            }
            EXPECT_EQ(spanning.size(), static_cast<std::size_t>(binomial(2 * n, k)));
            EXPECT_EQ(span_rank(n, spanning), spanning.size()) << n << " " << k;
        }
    }
}

TEST(LefschetzIso, Ranks) {
    auto r20 = verify_lefschetz_iso(2, 0);
    EXPECT_EQ(r20.rank, 1u);
    Scalar ratio = r20.determinant / qfact(2);
    EXPECT_TRUE(ratio.num().is_monomial() && ratio.den().is_monomial());
    EXPECT_EQ(verify_lefschetz_iso(2, 1).rank, 4u);
    EXPECT_EQ(verify_lefschetz_iso(3, 2).rank, 15u);
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k < n; ++k) EXPECT_TRUE(verify_lefschetz_iso(n, k).full_rank) << n << " " << k;
    EXPECT_THROW(verify_lefschetz_iso(2, 2), std::invalid_argument);
}

TEST(Decompose, Kappa) {
    KahlerFiber kf(2, HodgeMode::h_eq_q());
    auto comps = kf.decompose(kappa(2));
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_EQ(comps[0].level, 1);
    EXPECT_EQ(comps[0].primitive, FiberForm::unit(2));
}

TEST(Decompose, DiagonalMonomialAgainstLinearSolve) {
    KahlerFiber kf(2, HodgeMode::h_eq_q());
    const FiberForm u = form(2, {1}, {1});
    std::vector<FiberForm> prim = {form(2, {1}, {2}), form(2, {2}, {1}),
                                   form(2, {1}, {1}) - Scalar::q(-2) * form(2, {2}, {2})};
    std::vector<FiberForm> columns = {kappa(2)};
    columns.insert(columns.end(), prim.begin(), prim.end());
    auto block = basis(2, 1, 1);
    Dense a(block.size(), std::vector<Scalar>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        auto y = coordinates(columns[c], block);
        for (std::size_t r = 0; r < block.size(); ++r) a[r][c] = y[r];
    }
    auto x = oracle_solve(a, coordinates(u, block));
    ASSERT_EQ(x.size(), 4u);
    FiberForm alpha0(2);
    for (std::size_t t = 0; t < prim.size(); ++t) alpha0 += x[t + 1] * prim[t];

    auto comps = kf.decompose(u);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0].level, 0);
    EXPECT_EQ(comps[0].primitive, alpha0);
    EXPECT_EQ(comps[1].level, 1);
    EXPECT_EQ(comps[1].primitive, x[0] * FiberForm::unit(2));

    Scalar d = (Scalar::q(2) + Scalar(1)).inverse();
    EXPECT_EQ(x[0], -Scalar::i() * d);
    EXPECT_EQ(alpha0, d * (Scalar::q(2) * form(2, {1}, {1}) - form(2, {2}, {2})));
}

TEST(Decompose, PrimitiveIsFixed) {
    KahlerFiber kf(3, HodgeMode::h_eq_q());
    for (const auto& alpha : kf.primitives(1, 1)) {
        auto comps = kf.decompose(alpha);
        ASSERT_EQ(comps.size(), 1u);
        EXPECT_EQ(comps[0].level, 0);
        EXPECT_EQ(comps[0].primitive, alpha);
    }
}

TEST(Decompose, RecombinesRandomForms) {
    Fuzz fz(67);
    for (const auto& mode : {HodgeMode::h_eq_q(), HodgeMode::h_eq_one()}) {
        for (int n = 1; n <= 3; ++n) {
            KahlerFiber kf(n, mode);
            for (int t = 0; t < 6; ++t) {
                const int k = fz.uniform(0, 2 * n);
                auto b = basis(n, k);
                FiberForm u(n);
                for (int s = 0; s < 3; ++s) u.add_term(b[static_cast<std::size_t>(fz.uniform(0, static_cast<int>(b.size()) - 1))], fz.polynomial());
                FiberForm sum(n);
                for (const auto& c : kf.decompose(u)) {
                    const int kp = k - 2 * c.level;
                    EXPECT_TRUE(Lpow(c.primitive, n - kp + 1).is_zero());
                    sum += Lpow(c.primitive, c.level);
                }
                EXPECT_EQ(sum, u);
            }
        }
    }
}

TEST(Decompose, RejectsMixedDegree) {
    KahlerFiber kf(2, HodgeMode::h_eq_q());
    EXPECT_THROW(kf.decompose(FiberForm::unit(2) + form(2, {1}, {})), std::invalid_argument);
}
