#include <gtest/gtest.h>

#include "fragpd/polynomial.hpp"

using namespace fpd;

TEST(Polynomial, TrimAndDegree) {
    EXPECT_EQ(Polynomial({1, 0, 0}).degree(), 0);
    EXPECT_EQ(Polynomial().degree(), -1);
    EXPECT_TRUE(Polynomial({0, 0}).is_zero());
    EXPECT_EQ(Polynomial::monomial(3, 2).coeff(3), 2);
    EXPECT_EQ(Polynomial::monomial(3, 2).coeff(7), 0);
}

TEST(Polynomial, Arithmetic) {
    const Polynomial a{1, -1};
    EXPECT_EQ(a * a, (Polynomial{1, -2, 1}));
    EXPECT_EQ(pow(a, 3), (Polynomial{1, -3, 3, -1}));
    EXPECT_EQ(a + (Polynomial{0, 1}), (Polynomial{1}));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * Integer(43), (Polynomial{43, -43}));
    Polynomial b{2};
    b.add_scaled(a, 3);
    EXPECT_EQ(b, (Polynomial{5, -3}));
    EXPECT_EQ(Polynomial::one_minus_q_pow(2), (Polynomial{1, 0, -1}));
}

TEST(Polynomial, Evaluate) {
    const Polynomial p{7, -4, 0, -3};
    EXPECT_EQ(p.evaluate(Rational(1, 2)), Rational(37, 8));
    EXPECT_DOUBLE_EQ(p.evaluate(0.5), 4.625);
    EXPECT_EQ(p.evaluate(Rational(1)), 0);
}

TEST(Polynomial, ToString) {
    EXPECT_EQ((Polynomial{7, -4, 0, -3}).to_string(), "7 - 4q - 3q^3");
    EXPECT_EQ((Polynomial{43, -43}).to_string(), "43 - 43q");
    EXPECT_EQ((Polynomial{1, 0, -1}).to_string(), "1 - q^2");
    EXPECT_EQ((Polynomial{0, -1, 2}).to_string(), "-q + 2q^2");
    EXPECT_EQ(Polynomial().to_string(), "0");
}

TEST(Polynomial, BigCoefficients) {
    Polynomial p{1, 1};
    p = pow(p, 80);
    EXPECT_EQ(p.coeff(40), binomial(80, 40));
    EXPECT_EQ(binomial(80, 40).str(), "107507208733336176461620");
}

TEST(Binomial, Range) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(-1, 0), 0);
    EXPECT_EQ(binomial(0, 0), 1);
}
