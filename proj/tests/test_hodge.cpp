#include "support.hpp"

#include <qkahler/hodge.hpp>
#include <qkahler/lefschetz.hpp>

#include <gtest/gtest.h>

using namespace qk_test;

namespace {

const HodgeMode kHq = HodgeMode::h_eq_q();
const HodgeMode kH1 = HodgeMode::h_eq_one();

std::vector<Monomial> all_monomials(int n) {
    std::vector<Monomial> out;
    for (int k = 0; k <= 2 * n; ++k)
        for (const auto& m : basis(n, k)) out.push_back(m);
    return out;
}

}  // namespace

TEST(Vol, Normalization) {
    EXPECT_EQ(vol(form(1, {1}, {1})), -Scalar::i());
    EXPECT_EQ(vol(FiberForm(2, top_monomial(2))), Scalar(1));
    EXPECT_EQ(vol(Lpow(FiberForm::unit(2), 2)), qfact(2));
    EXPECT_TRUE(vol(FiberForm(2)).is_zero());
    EXPECT_THROW(vol(form(2, {1}, {1})), DegreeError);
}

TEST(HodgeMap, RankOneTable) {
    for (const auto& mode : {kHq, kH1}) {
        KahlerFiber kf(1, mode);
        EXPECT_EQ(kf.hodge(FiberForm::unit(1)), kappa(1));
        EXPECT_EQ(kf.hodge(form(1, {1}, {})), -Scalar::i() * form(1, {1}, {}));
        EXPECT_EQ(kf.hodge(form(1, {}, {1})), Scalar::i() * form(1, {}, {1}));
    }
}

TEST(HodgeMap, RankTwoDegreeOne) {
    KahlerFiber kf(2, kHq);
    EXPECT_EQ(kf.hodge(form(2, {1}, {})), form(2, {1, 2}, {2}));
    EXPECT_EQ(kf.hodge(form(2, {2}, {})), -Scalar::q() * form(2, {1, 2}, {1}));
    EXPECT_EQ(kf.hodge(form(2, {}, {1})), Scalar::q(-1) * form(2, {2}, {1, 2}));
    EXPECT_EQ(kf.hodge(form(2, {}, {2})), -form(2, {1}, {1, 2}));
}

TEST(HodgeMap, RankTwoPrimitiveSigns) {
    for (const auto& mode : {kHq, kH1}) {
        KahlerFiber kf(2, mode);
        for (const auto& a : kf.primitives(2, 0)) EXPECT_EQ(kf.hodge(a), a);
        for (const auto& a : kf.primitives(1, 1)) EXPECT_EQ(kf.hodge(a), -a);
        for (const auto& a : kf.primitives(0, 2)) EXPECT_EQ(kf.hodge(a), a);
    }
}

TEST(HodgeMap, NonHomogeneousInputSplits) {
    KahlerFiber kf(2, kHq);
    FiberForm u = form(2, {1}, {}) + Scalar::q(3) * form(2, {}, {2}) + FiberForm::unit(2);
    EXPECT_EQ(kf.hodge(u), kf.hodge(form(2, {1}, {})) + Scalar::q(3) * kf.hodge(form(2, {}, {2})) +
                               kf.hodge(FiberForm::unit(2)));
}

TEST(HodgeMap, SquareSwapAndStar) {
    for (const auto& mode : {kHq, kH1}) {
        for (int n = 1; n <= 2; ++n) {
            KahlerFiber kf(n, mode);
            for (const auto& m : all_monomials(n)) {
                FiberForm u(n, m);
                FiberForm h = kf.hodge(u);
                EXPECT_EQ(kf.hodge(h), m.degree() % 2 == 0 ? u : -u);
                for (const auto& [mm, c] : h.terms()) EXPECT_EQ(mm.bidegree(), (Bidegree{n - m.b(), n - m.a()}));
                EXPECT_EQ(kf.hodge(star(u)), star(h));
            }
        }
    }
}

TEST(HodgeMap, WeilCoefficientPhases) {
    EXPECT_EQ(weil_coefficient(1, 0, 0, 0, kHq), Scalar(1));
    EXPECT_EQ(weil_coefficient(1, 1, 0, 0, kHq), -Scalar::i());
    EXPECT_EQ(weil_coefficient(1, 0, 1, 0, kHq), Scalar::i());
    EXPECT_EQ(weil_coefficient(2, 1, 1, 0, kHq), -Scalar(1));
    EXPECT_EQ(weil_coefficient(3, 0, 0, 1, kHq), Scalar(1) / qfact(2));
}

TEST(Metric, RankOneValues) {
    KahlerFiber kf(1, kHq);
    EXPECT_EQ(kf.metric(form(1, {}, {1}), form(1, {}, {1})), Scalar::q(6));
    EXPECT_EQ(kf.metric(form(1, {1}, {}), form(1, {1}, {})), Scalar::q(-4));
}

TEST(Metric, RankTwoValues) {
    KahlerFiber kf(2, kHq);
    auto norm = [&](const FiberForm& u) { return kf.metric(u, u); };
    EXPECT_EQ(norm(form(2, {1}, {})), Scalar::q(-5));
    EXPECT_EQ(norm(form(2, {2}, {})), Scalar::q(-5));
    EXPECT_EQ(norm(form(2, {}, {1})), Scalar::q(7));
    EXPECT_EQ(norm(form(2, {}, {2})), Scalar::q(9));
    EXPECT_EQ(norm(form(2, {1, 2}, {})), Scalar::q(-11));
    EXPECT_EQ(norm(form(2, {}, {1, 2})), Scalar::q(17));
    EXPECT_EQ(norm(form(2, {1}, {2})), Scalar::q(3));
    EXPECT_EQ(norm(form(2, {2}, {1})), Scalar::q(1));
    EXPECT_EQ(norm(form(2, {1}, {1}) - Scalar::q(-2) * form(2, {2}, {2})), qint(2));
    EXPECT_TRUE(kf.metric(form(2, {1}, {}), form(2, {}, {1})).is_zero());
    EXPECT_TRUE(kf.metric(form(2, {1}, {}), FiberForm::unit(2)).is_zero());
}

TEST(Metric, ConjugateSymmetric) {
    Fuzz fz(71);
    for (const auto& mode : {kHq, kH1}) {
        KahlerFiber kf(2, mode);
        for (int t = 0; t < 15; ++t) {
            FiberForm u = fz.fiber_form(2), v = fz.fiber_form(2);
            EXPECT_EQ(kf.metric(u, v), conjugate(kf.metric(v, u)));
        }
    }
}

TEST(Metric, GramBlocksHermitianAndPositive) {
    for (const auto& mode : {kHq, kH1}) {
        for (int n = 1; n <= 2; ++n) {
            KahlerFiber kf(n, mode);
            for (const auto& bd : all_bidegrees(n)) {
                const GramBlock& g = kf.gram(bd.first, bd.second);
                for (std::size_t r = 0; r < g.basis.size(); ++r)
                    for (std::size_t c = 0; c < g.basis.size(); ++c)
                        EXPECT_EQ(g.entries.get(r, c), conjugate(g.entries.get(c, r)));
                for (const auto& q0 : {mpq_class(9, 10), mpq_class(1), mpq_class(11, 10)}) {
                    EXPECT_TRUE(certify_posdef(g, q0).verdict) << n << " " << bd.first << "," << bd.second;
                }
            }
        }
    }
}

TEST(Metric, RankOneClassicalPoint) {
    KahlerFiber kf(1, kHq);
    for (const auto& bd : {Bidegree{1, 0}, Bidegree{0, 1}}) {
        const GramBlock& g = kf.gram(bd.first, bd.second);
        ASSERT_EQ(g.basis.size(), 1u);
        EXPECT_EQ(evaluate(g.entries.get(0, 0), mpq_class(1)), GaussianRational(1));
        PosdefCertificate cert = certify_posdef(g, mpq_class(1));
        EXPECT_TRUE(cert.verdict);
        EXPECT_EQ(cert.pivots, std::vector<mpq_class>{mpq_class(1)});
    }
}

TEST(Metric, OrthogonalAcrossLefschetzLevels) {
    for (const auto& mode : {kHq, kH1}) {
        const int n = 3;
        KahlerFiber kf(n, mode);
        for (int k = 0; k <= 2 * n; ++k) {
            std::vector<std::pair<int, FiberForm>> pieces;
            for (int kp = k % 2; kp <= std::min(k, n); kp += 2) {
                const int j = (k - kp) / 2;
                if (j > n - kp) continue;
                for (int a = kp; a >= 0; --a)
                    for (const auto& alpha : kf.primitives(a, kp - a)) pieces.emplace_back(j, Lpow(alpha, j));
            }
            for (const auto& [j1, u] : pieces)
                for (const auto& [j2, v] : pieces)
                    if (j1 != j2) {
                        EXPECT_TRUE(kf.metric(u, v).is_zero());
                    }
        }
    }
}

TEST(Metric, RescalingLawOnRankTwo) {
    for (const auto& mode : {kHq, kH1}) {
        const int n = 2;
        KahlerFiber kf(n, mode);
        for (int k = 0; k <= n; ++k) {
            std::vector<FiberForm> prims;
            for (int a = k; a >= 0; --a)
                for (const auto& p : kf.primitives(a, k - a)) prims.push_back(p);
            for (int j = 0; j <= n - k; ++j) {
                Scalar c = qfact(j, mode) * qfact(n - k, mode) / qfact(n - j - k, mode);
                for (const auto& x : prims)
                    for (const auto& y : prims) EXPECT_EQ(kf.metric(Lpow(x, j), Lpow(y, j)), c * kf.metric(x, y));
            }
        }
    }
}

TEST(Metric, HodgeIsUnitary) {
    for (const auto& mode : {kHq, kH1}) {
        for (int n = 1; n <= 2; ++n) {
            KahlerFiber kf(n, mode);
            for (int k = 0; k <= 2 * n; ++k) {
                auto b = basis(n, k);
                for (const auto& x : b) {
                    for (const auto& y : b) {
                        FiberForm u(n, x), v(n, y);
                        EXPECT_EQ(kf.metric(kf.hodge(u), kf.hodge(v)), kf.metric(u, v));
                    }
                }
            }
        }
    }
}

TEST(Metric, SerrePairingNondegenerate) {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& bd : all_bidegrees(n)) {
            auto left = basis(n, bd.first, bd.second);
            auto right = basis(n, n - bd.first, n - bd.second);
            ASSERT_EQ(left.size(), right.size());
            Dense d(left.size(), std::vector<Scalar>(right.size()));
            for (std::size_t r = 0; r < left.size(); ++r)
                for (std::size_t c = 0; c < right.size(); ++c)
                    d[r][c] = vol(wedge(FiberForm(n, left[r]), FiberForm(n, right[c])));
            EXPECT_EQ(oracle_rank(d), left.size());
        }
    }
}

TEST(Adjoint, IdentityAndLefschetz) {
    for (const auto& mode : {kHq, kH1}) {
        for (int n = 1; n <= 2; ++n) {
            KahlerFiber kf(n, mode);
            EXPECT_EQ(kf.adjoint(GradedOperator::identity(n)), GradedOperator::identity(n));
            EXPECT_EQ(kf.adjoint(kf.lefschetz()), kf.lambda());
            EXPECT_EQ(kf.adjoint(kf.lambda()), kf.lefschetz());
        }
    }
}

TEST(Adjoint, DefiningPropertyAndInvolution) {
    Fuzz fz(73);
    const int n = 2;
    KahlerFiber kf(n, kHq);
    GradedOperator m(n);
    for (auto [src, tgt] : {std::pair{Bidegree{1, 0}, Bidegree{0, 1}}, std::pair{Bidegree{1, 1}, Bidegree{1, 1}},
                            std::pair{Bidegree{0, 0}, Bidegree{2, 1}}}) {
        auto rows = basis(n, tgt.first, tgt.second).size(), cols = basis(n, src.first, src.second).size();
        SparseMatrix block(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (fz.uniform(0, 2) != 0) block.set(r, c, fz.polynomial());
        m.set_block(src, tgt, block);
    }
    GradedOperator md = kf.adjoint(m);
    EXPECT_EQ(kf.adjoint(md), m);
    for (int k = 0; k <= 2 * n; ++k) {
        for (const auto& x : basis(n, k)) {
            for (int l = 0; l <= 2 * n; ++l) {
                for (const auto& y : basis(n, l)) {
                    FiberForm u(n, x), v(n, y);
                    EXPECT_EQ(kf.metric(m.apply(u), v), kf.metric(u, md.apply(v)));
                }
            }
        }
    }
}
