#include "weilchar/char_values.hpp"
#include "weilchar/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace weilchar;

TEST(Psi, Values) {
    const PrimeField f(5);
    const AdditiveCharacter c(f);
    EXPECT_TRUE(approx_eq(c.psi(0), 1.0));
    EXPECT_TRUE(approx_eq(c.psi(1), std::polar(1.0, 2 * std::numbers::pi / 5)));
    const AdditiveCharacter c7(PrimeField(7));
    for (int x = 0; x < 7; ++x) {
        EXPECT_TRUE(approx_eq(c7.psi(x) * c7.psi(-x), 1.0));
        for (int y = 0; y < 7; ++y) EXPECT_TRUE(approx_eq(c7.psi(x + y), c7.psi(x) * c7.psi(y)));
    }
    EXPECT_THROW(AdditiveCharacter(f, 5), InvalidModulus);
}

TEST(Gamma, GaussSumValueAtFive) {
    const AdditiveCharacter c(PrimeField(5));
    EXPECT_TRUE(approx_eq(c.gamma(1), -1.0));
    EXPECT_THROW((void)c.gamma(0), ZeroFormClass);
    EXPECT_THROW((void)c.chi(0), ZeroFormClass);
}

TEST(Gamma, Identities) {
    for (int p : {3, 5, 7, 11, 13, 97}) {
        const PrimeField f(p);
        for (int scale : {1, 2}) {
            const AdditiveCharacter c(f, scale);
            for (int a = 1; a < p; ++a) {
                EXPECT_NEAR(std::abs(c.gamma(a)), 1.0, 1e-10);
                EXPECT_TRUE(approx_eq(c.gamma(a) * c.gamma(f.neg(a)), 1.0));
                for (int s = 1; s < p; ++s) EXPECT_TRUE(approx_eq(c.gamma(a), c.gamma(f.mul(a, f.mul(s, s)))));
                for (int b = 1; b < p; ++b)
                    EXPECT_TRUE(approx_eq(c.gamma(a) * c.gamma(b), c.gamma(1) * c.gamma(f.mul(a, b))));
            }
        }
    }
}

TEST(Chi, IsLegendre) {
    for (int p : {3, 5, 7, 11}) {
        const PrimeField f(p);
        const AdditiveCharacter c(f);
        EXPECT_TRUE(approx_eq(c.chi(1), 1.0));
        for (int a = 1; a < p; ++a) EXPECT_TRUE(approx_eq(c.chi(a), f.legendre(a)));
    }
}

TEST(Chi, MinusTwoByResidueModEight) {
    const std::vector<std::pair<int, int>> expected{{3, 1}, {5, -1}, {7, -1}, {11, 1}, {13, -1}, {17, 1}};
    for (const auto& [p, value] : expected) {
        const PrimeField f(p);
        EXPECT_TRUE(approx_eq(AdditiveCharacter(f).chi(f.reduce(-2)), value)) << "p=" << p;
    }
}

TEST(Gamma, OnePowers) {
    const AdditiveCharacter c(PrimeField(7));
    Complex acc = 1.0;
    for (int k = 0; k < 10; ++k) {
        EXPECT_TRUE(approx_eq(c.gamma_one_pow(k), acc));
        EXPECT_TRUE(approx_eq(c.gamma_one_pow(-k) * acc, 1.0));
        acc *= c.gamma(1);
    }
}

TEST(SquareClass, Arithmetic) {
    const PrimeField f(7);
    EXPECT_THROW(SquareClass(f, 0), ZeroFormClass);
    EXPECT_EQ(SquareClass(f, 4).rep(), 1);
    EXPECT_EQ(SquareClass(f, 5).rep(), f.nonsquare());
    for (int a = 1; a < 7; ++a)
        for (int b = 1; b < 7; ++b) EXPECT_EQ(SquareClass(f, a) * SquareClass(f, b), SquareClass(f, f.mul(a, b)));
}

TEST(ApproxEq, ScaledTolerance) {
    EXPECT_TRUE(approx_eq(1.0, 1.0 + 5e-9));
    EXPECT_FALSE(approx_eq(1.0, 1.0 + 5e-8));
    EXPECT_TRUE(approx_eq(100.0, 100.0 + 5e-7, 100.0));
}
