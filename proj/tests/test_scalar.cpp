#include "support.hpp"

#include <gtest/gtest.h>

using namespace qk_test;

TEST(Qint, SmallValues) {
    EXPECT_EQ(qint(0), Scalar(0));
    EXPECT_EQ(qint(1), Scalar(1));
    EXPECT_EQ(qint(2), Scalar::q() + Scalar::q(-1));
    EXPECT_EQ(qint(2).to_string(), "q + q^-1");
    EXPECT_EQ(qint(1, HodgeMode::h_eq_one()), Scalar(1));
    EXPECT_EQ(qint(3, HodgeMode::h_eq_one()), Scalar(3));
}

TEST(Qint, MatchesDefiningSum) {
    for (int m = 0; m <= 10; ++m) EXPECT_EQ(qint(m), qint_sum(m)) << m;
}

TEST(Qint, NumericMode) {
    HodgeMode mode = HodgeMode::numeric(mpq_class(2), mpq_class(3));
    EXPECT_EQ(qint(2, mode), Scalar(GaussianRational(mpq_class(10, 3))));
    EXPECT_EQ(hpow(-2, mode), Scalar(GaussianRational(mpq_class(1, 9))));
}

TEST(Qint, RejectsNegative) {
    EXPECT_THROW(qint(-1), std::invalid_argument);
    EXPECT_EQ(signed_qint(-2), -qint(2));
}

TEST(Qint, FactorialAndBinomial) {
    EXPECT_EQ(qfact(2), Scalar::q() + Scalar::q(-1));
    EXPECT_EQ(qbinom(2, 1), qint(2));
    EXPECT_EQ(qbinom(4, 2), S("q^4 + q^2 + 2 + q^-2 + q^-4"));
    EXPECT_EQ(qbinom(4, 2).to_string(), "q^4 + q^2 + 2 + q^-2 + q^-4");
    EXPECT_THROW(qbinom(2, 3), std::invalid_argument);
}

TEST(Qint, BinomialMatchesPascalRecursion) {
    for (int a = 0; a <= 8; ++a) {
        for (int b = 0; b <= a; ++b) {
            Scalar v = qbinom(a, b);
            EXPECT_TRUE(v.is_polynomial());
            EXPECT_EQ(v, qbinom_pascal(a, b)) << a << "," << b;
            EXPECT_EQ(v, qbinom(a, a - b));
        }
    }
}

TEST(ScalarField, AxiomsOnRandomElements) {
    Fuzz fz(11);
    for (int t = 0; t < 60; ++t) {
        Scalar x = fz.scalar(), y = fz.scalar(), z = fz.nonzero_scalar();
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(z * z.inverse(), Scalar(1));
        EXPECT_EQ((x / z) * z, x);
        EXPECT_TRUE((x - x).is_zero());
    }
}

TEST(ScalarField, CanonicalForm) {
    Scalar a = (Scalar::q(2) - Scalar(1)) / (Scalar::q() - Scalar(1));
    EXPECT_EQ(a, Scalar::q() + Scalar(1));
    EXPECT_TRUE(a.is_polynomial());
    Scalar b = Scalar(1) / (Scalar::q(3) + Scalar::q(5));
    EXPECT_TRUE(b.den().terms().begin()->second.is_one());
    EXPECT_EQ(b.den().low(), 0);
}

TEST(ScalarField, Conjugate) {
    Scalar iq2 = Scalar::i() * Scalar::q(2);
    EXPECT_EQ(conjugate(iq2), -iq2);
    EXPECT_EQ(conjugate(qint(2)), qint(2));
    Fuzz fz(5);
    for (int t = 0; t < 30; ++t) {
        Scalar s = fz.scalar(), r = fz.scalar();
        EXPECT_EQ(conjugate(conjugate(s)), s);
        EXPECT_EQ(conjugate(s * r), conjugate(s) * conjugate(r));
    }
}

TEST(ScalarEvaluate, Values) {
    EXPECT_EQ(evaluate(qint(2), mpq_class(1)), GaussianRational(2));
    EXPECT_EQ(evaluate(qint(3), mpq_class(2)), GaussianRational(mpq_class(21, 4)));
}

TEST(ScalarEvaluate, ErrorsAreDistinct) {
    Scalar pole = Scalar(1) / (Scalar::q() - Scalar(1));
    EXPECT_THROW(evaluate(pole, mpq_class(1)), PoleError);
    EXPECT_THROW(evaluate(qint(2), mpq_class(0)), NonPositiveSampleError);
    EXPECT_THROW(evaluate(qint(2), mpq_class(-1, 2)), NonPositiveSampleError);
}

TEST(ScalarEvaluate, IsRingHomomorphism) {
    Fuzz fz(7);
    const mpq_class q0(7, 5);
    int checked = 0;
    for (int t = 0; t < 60; ++t) {
        Scalar s = fz.scalar(), r = fz.scalar();
        try {
            GaussianRational es = evaluate(s, q0), er = evaluate(r, q0);
            EXPECT_EQ(evaluate(s * r, q0), es * er);
            EXPECT_EQ(evaluate(s + r, q0), es + er);
            ++checked;
        } catch (const PoleError&) {
        }
    }
    EXPECT_GT(checked, 40);
}

TEST(ScalarText, RendersCanonicalStrings) {
    EXPECT_EQ((Scalar::q(2) + Scalar(1) + Scalar::q(-2)).to_string(), "q^2 + 1 + q^-2");
    EXPECT_EQ((Scalar::i() * Scalar::q(3)).to_string(), "(i)*q^3");
    EXPECT_EQ(Scalar().to_string(), "0");
    EXPECT_EQ(Scalar::rational(-1, 2).to_string(), "-1/2");
}

TEST(ScalarText, ParseRoundTrip) {
    EXPECT_EQ(S("q^2 + 1 + q^-2"), Scalar::q(2) + Scalar(1) + Scalar::q(-2));
    EXPECT_EQ(S("(i)*q^3"), Scalar::i() * Scalar::q(3));
    EXPECT_EQ(S("1/(q + q^-1)"), qint(2).inverse());
    Fuzz fz(3);
    for (int t = 0; t < 50; ++t) {
        Scalar s = fz.scalar();
        EXPECT_EQ(Scalar::parse(s.to_string()), s) << s.to_string();
    }
}

TEST(ScalarText, ParseErrors) {
    EXPECT_THROW(S("q^"), ParseError);
    EXPECT_THROW(S("1 +"), ParseError);
    EXPECT_THROW(S("x"), ParseError);
}

TEST(ScalarText, Parenthesize) {
    EXPECT_EQ(parenthesize("i"), "(i)");
    EXPECT_EQ(parenthesize("(i)"), "(i)");
    EXPECT_EQ(parenthesize("(a)/(b)"), "((a)/(b))");
}
