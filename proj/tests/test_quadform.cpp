#include "weilchar/error.hpp"
#include "weilchar/quadform.hpp"
#include "weilchar/random.hpp"

#include <gtest/gtest.h>

using namespace weilchar;

namespace {

QuadraticSpace random_form(const PrimeField& f, std::size_t d, Rng& rng) {
    FpMatrix g(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            const int x = rng.residue(f.p());
            g.set(i, j, x);
            g.set(j, i, x);
        }
    return QuadraticSpace(g);
}

bool is_diagonal(const FpMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) != 0) return false;
    return true;
}

} // namespace

TEST(QuadraticSpace, RejectsNonSymmetric) {
    const PrimeField f(5);
    EXPECT_THROW(QuadraticSpace(FpMatrix::from_values(f, 2, 2, std::vector<long long>{0, 1, 0, 0})),
                 DimensionMismatch);
    EXPECT_THROW(QuadraticSpace(FpMatrix(f, 2, 3)), DimensionMismatch);
}

TEST(Radical, Examples) {
    const PrimeField f(5);
    const QuadraticSpace z = QuadraticSpace::zero(f, 2);
    EXPECT_EQ(radical(z).dim(), 2u);
    EXPECT_EQ(nondegenerate_quotient(z).dim(), 0u);
    EXPECT_EQ(radical(QuadraticSpace(FpMatrix::identity(f, 3))).dim(), 0u);

    const QuadraticSpace q(FpMatrix::from_values(f, 2, 2, std::vector<long long>{1, 2, 2, 4}));
    EXPECT_EQ(radical(q).dim(), 1u);
    const QuadraticSpace nd = nondegenerate_quotient(q);
    EXPECT_EQ(nd.dim(), 1u);
    EXPECT_EQ(nd.rank(), 1u);
    EXPECT_TRUE(discriminant(q).is_square());
}

TEST(Radical, QuotientIsNondegenerate) {
    Rng rng(1);
    for (int p : {3, 5, 7}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 40; ++trial) {
            const QuadraticSpace q = random_form(f, 1 + rng.index(4), rng);
            const QuadraticSpace nd = nondegenerate_quotient(q);
            EXPECT_EQ(nd.dim(), q.rank());
            EXPECT_EQ(nd.rank(), nd.dim());
            EXPECT_EQ(radical(q).dim() + q.rank(), q.dim());
        }
    }
}

TEST(Diagonalize, Examples) {
    const PrimeField f(7);
    EXPECT_EQ(diagonalize(QuadraticSpace(FpMatrix::identity(f, 3))), (std::vector<int>{1, 1, 1}));
    const auto h = diagonalize(QuadraticSpace::hyperbolic_plane(f));
    ASSERT_EQ(h.size(), 2u);
    EXPECT_EQ(SquareClass(f, f.mul(h[0], h[1])), SquareClass(f, f.reduce(-1)));
    EXPECT_EQ(discriminant(QuadraticSpace::hyperbolic_plane(f)), SquareClass(f, f.reduce(-1)));
    EXPECT_TRUE(signed_discriminant(QuadraticSpace::hyperbolic_plane(f)).is_square());
}

TEST(Diagonalize, TransformIsCongruence) {
    Rng rng(2);
    for (int p : {3, 5, 11}) {
        const PrimeField f(p);
        for (int trial = 0; trial < 40; ++trial) {
            const QuadraticSpace q = random_form(f, 1 + rng.index(5), rng);
            const auto [t, entries] = diagonalize_with_transform(q);
            EXPECT_NE(t.determinant(), 0);
            const FpMatrix d = t * q.gram() * t.transpose();
            EXPECT_TRUE(is_diagonal(d));
            ASSERT_EQ(entries.size(), q.rank());
            for (std::size_t i = 0; i < d.rows(); ++i) EXPECT_EQ(d(i, i), i < entries.size() ? entries[i] : 0);
        }
    }
}

TEST(GammaForm, Examples) {
    const PrimeField f(5);
    const AdditiveCharacter c(f);
    EXPECT_TRUE(approx_eq(gamma_form(c, QuadraticSpace::zero(f)), 1.0));
    EXPECT_TRUE(approx_eq(gamma_form(c, QuadraticSpace::hyperbolic_plane(f)), 1.0));
    EXPECT_TRUE(approx_eq(gamma_form(c, QuadraticSpace::diagonal(f, {1})), -1.0));
    // p = 3: (1 + 2 psi(2)) / sqrt 3 = -i.
    const AdditiveCharacter c3(PrimeField(3));
    EXPECT_TRUE(approx_eq(gamma_form(c3, QuadraticSpace::diagonal(PrimeField(3), {1})), Complex(0, -1)));
}

TEST(GammaForm, SummationAgrees) {
    Rng rng(3);
    for (int p : {3, 5, 7, 11}) {
        const PrimeField f(p);
        const AdditiveCharacter c(f, 1 + rng.residue(p - 1));
        for (int trial = 0; trial < 30; ++trial) {
            const QuadraticSpace q = random_form(f, 1 + rng.index(p <= 5 ? 5 : 3), rng);
            EXPECT_TRUE(approx_eq(gamma_form(c, q), gamma_by_summation(c, q)));
            EXPECT_TRUE(approx_eq(gamma_form(c, q), gamma_from_rank_disc(c, q.rank(), discriminant(q))));
        }
    }
    const PrimeField f(97);
    EXPECT_THROW(gamma_by_summation(AdditiveCharacter(f), QuadraticSpace::zero(f, 4)), EnumerationTooLarge);
}

TEST(Witt, SumProperties) {
    Rng rng(4);
    const PrimeField f(5);
    const AdditiveCharacter c(f);
    for (int trial = 0; trial < 100; ++trial) {
        const QuadraticSpace a = random_form(f, 1 + rng.index(3), rng);
        const QuadraticSpace b = random_form(f, 1 + rng.index(3), rng);
        const QuadraticSpace s = witt_add(a, b);
        EXPECT_EQ(s.gram(), a.gram().block_diag(b.gram()));
        EXPECT_EQ(s.rank(), a.rank() + b.rank());
        EXPECT_TRUE(approx_eq(gamma_form(c, s), gamma_form(c, a) * gamma_form(c, b)));
        EXPECT_EQ(discriminant(s), discriminant(a) * discriminant(b));
        EXPECT_TRUE(approx_eq(gamma_form(c, witt_add(a, witt_neg(a))), 1.0));
        EXPECT_TRUE(approx_eq(gamma_form(c, witt_add(a, QuadraticSpace::hyperbolic_plane(f))), gamma_form(c, a)));
        EXPECT_TRUE(witt_equal(witt_invariants(c, a), witt_invariants(c, witt_add(a, QuadraticSpace::hyperbolic_plane(f)))));
    }
}

TEST(Witt, EqualityUsesParityAndSignedDisc) {
    const PrimeField f(7);
    const AdditiveCharacter c(f);
    const auto zero = witt_invariants(c, QuadraticSpace::zero(f));
    EXPECT_TRUE(witt_equal(zero, witt_invariants(c, QuadraticSpace::hyperbolic_plane(f))));
    EXPECT_FALSE(witt_equal(zero, witt_invariants(c, QuadraticSpace::diagonal(f, {1, 1}))));
    EXPECT_FALSE(witt_equal(zero, witt_invariants(c, QuadraticSpace::diagonal(f, {1}))));
    EXPECT_TRUE(witt_equal(witt_invariants(c, QuadraticSpace::diagonal(f, {3})),
                           witt_invariants(c, QuadraticSpace::diagonal(f, {3, 1, 6}))));
}

TEST(Witt, InvariantsUnitGamma) {
    Rng rng(5);
    const PrimeField f(11);
    const AdditiveCharacter c(f);
    for (int trial = 0; trial < 30; ++trial) {
        const auto inv = witt_invariants(c, random_form(f, rng.index(5), rng));
        EXPECT_NEAR(std::abs(inv.gamma), 1.0, 1e-10);
        EXPECT_TRUE(inv.disc.rep() == 1 || inv.disc.rep() == f.nonsquare());
    }
}
