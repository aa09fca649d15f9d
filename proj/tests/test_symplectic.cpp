#include "weilchar/error.hpp"
#include "weilchar/symplectic.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace weilchar;

namespace {

SpElement sl2(const PrimeField& f, long long a, long long b, long long c, long long d) {
    const std::vector<long long> w{a, b, c, d};
    return {SymplecticSpace::standard(f, 1), FpMatrix::from_values(f, 2, 2, w)};
}

} // namespace

TEST(Symplectic, Membership) {
    const PrimeField f(5);
    const SymplecticSpace v = SymplecticSpace::standard(f, 1);
    EXPECT_TRUE(is_symplectic(v, FpMatrix::identity(f, 2)));
    EXPECT_TRUE(is_symplectic(v, FpMatrix::from_values(f, 2, 2, std::vector<long long>{2, 0, 0, 3})));
    EXPECT_FALSE(is_symplectic(v, FpMatrix::from_values(f, 2, 2, std::vector<long long>{2, 0, 0, 2})));
    EXPECT_THROW(sl2(f, 2, 0, 0, 2), NotSymplectic);
    EXPECT_THROW(SpElement(v, FpMatrix::identity(f, 3)), DimensionMismatch);
}

TEST(Symplectic, FromGramValidates) {
    const PrimeField f(5);
    const SymplecticSpace v = SymplecticSpace::standard(f, 1);
    EXPECT_THROW(SymplecticSpace::from_gram(FpMatrix::identity(f, 2), v.standard_lagrangian_subspace().basis()),
                 DimensionMismatch);
    EXPECT_THROW(SymplecticSpace::from_gram(v.gram(), FpMatrix::identity(f, 2)), NotLagrangian);
    EXPECT_EQ(SymplecticSpace::from_gram(v.gram(), v.standard_lagrangian_subspace().basis()), v);
}

TEST(Symplectic, DoubledGram) {
    const PrimeField f(3);
    const SymplecticSpace v = SymplecticSpace::standard(f, 2);
    const SymplecticSpace w = doubled(v);
    EXPECT_EQ(w.dim(), 8u);
    EXPECT_EQ(w.gram(), (-v.gram()).block_diag(v.gram()));
}

TEST(Lagrangians, Counts) {
    EXPECT_EQ(all_lagrangians(SymplecticSpace::standard(PrimeField(3), 1)).size(), 4u);
    EXPECT_EQ(all_lagrangians(SymplecticSpace::standard(PrimeField(5), 1)).size(), 6u);
    EXPECT_EQ(all_lagrangians(SymplecticSpace::standard(PrimeField(3), 2)).size(), 40u);
    EXPECT_EQ(all_lagrangians(SymplecticSpace::standard(PrimeField(5), 2)).size(), lagrangian_count(5, 2));
    EXPECT_THROW(all_lagrangians(SymplecticSpace::standard(PrimeField(3), 2), 39), EnumerationTooLarge);
}

TEST(Lagrangians, ClosedUnderSp) {
    const SymplecticSpace v = SymplecticSpace::standard(PrimeField(3), 2);
    const auto ls = all_lagrangians(v);
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const SpElement g = random_sp(v, rng);
        for (const auto& l : ls) {
            EXPECT_TRUE(Lagrangian::is_lagrangian(v, l.sub()));
            EXPECT_TRUE(std::binary_search(ls.begin(), ls.end(), g.apply(l)));
        }
    }
}

TEST(Lagrangians, RejectsNonIsotropic) {
    const PrimeField f(5);
    const SymplecticSpace v = SymplecticSpace::standard(f, 2);
    const std::vector<long long> rows{1, 0, 1, 0, 0, 0, 1, 0};
    EXPECT_THROW(Lagrangian(v, Subspace::span(FpMatrix::from_values(f, 2, 4, rows))), NotLagrangian);
}

TEST(SpGroup, OrderAndEnumeration) {
    EXPECT_EQ(sp_order(3, 1), 24u);
    EXPECT_EQ(sp_order(5, 1), 120u);
    EXPECT_EQ(sp_order(3, 2), 51840u);
    const auto all = all_sp(SymplecticSpace::standard(PrimeField(5), 1));
    EXPECT_EQ(all.size(), 120u);
    std::set<std::vector<int>> distinct;
    for (const auto& g : all) {
        const auto e = g.matrix().entries();
        distinct.emplace(e.begin(), e.end());
    }
    EXPECT_EQ(distinct.size(), 120u);
    EXPECT_THROW(all_sp(SymplecticSpace::standard(PrimeField(3), 2), 1000), EnumerationTooLarge);
}

TEST(SpGroup, RandomCoversSl2F3) {
    const SymplecticSpace v = SymplecticSpace::standard(PrimeField(3), 1);
    std::set<std::vector<int>> seen;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
        const SpElement g = random_sp(v, seed);
        const auto e = g.matrix().entries();
        seen.emplace(e.begin(), e.end());
    }
    EXPECT_EQ(seen.size(), 24u);
    EXPECT_EQ(random_sp(v, 7), random_sp(v, 7));
}

TEST(SpGroup, RandomIsSymplecticInHigherRank) {
    const SymplecticSpace v = SymplecticSpace::standard(PrimeField(7), 3);
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const SpElement g = random_sp(v, rng);
        EXPECT_TRUE(is_symplectic(v, g.matrix()));
        EXPECT_TRUE((g * g.inverse()).is_identity());
    }
}

TEST(SymplecticBasis, PairsCorrectly) {
    const PrimeField f(5);
    const SymplecticSpace v = SymplecticSpace::standard(f, 2);
    const FpMatrix b = symplectic_basis(v);
    EXPECT_EQ(b.transpose() * v.gram() * b, v.gram());
    const SymplecticSpace w = doubled(v);
    const FpMatrix bw = symplectic_basis(w);
    EXPECT_EQ(bw.transpose() * w.gram() * bw, SymplecticSpace::standard(f, 4).gram());
}

TEST(Graph, IsLagrangian) {
    const SymplecticSpace v = SymplecticSpace::standard(PrimeField(5), 1);
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const SpElement g = random_sp(v, rng);
        const Lagrangian gr = graph(g);
        EXPECT_TRUE(Lagrangian::is_lagrangian(doubled(v), gr.sub()));
        EXPECT_EQ(gr.dim(), 2u);
    }
    EXPECT_EQ(graph(SpElement::identity(v)), diagonal(v));
}

TEST(SigmaDet, Examples) {
    const PrimeField f(5);
    EXPECT_TRUE(sigma_det(SpElement::identity(SymplecticSpace::standard(f, 2))).is_square());
    // det(g - 1) = 2 - a - d = -3 = 2, a nonsquare.
    EXPECT_EQ(sigma_det(sl2(f, 2, 0, 0, 3)), SquareClass(f, 2));
    for (int b = 1; b < 5; ++b) EXPECT_EQ(sigma_det(sl2(f, 1, b, 0, 1)), SquareClass(f, b));
}

TEST(SigmaDet, MatchesDeterminantWhenInvertible) {
    for (int p : {3, 5, 7}) {
        const SymplecticSpace v = SymplecticSpace::standard(PrimeField(p), 2);
        Rng rng(static_cast<std::uint64_t>(p));
        for (int trial = 0; trial < 50; ++trial) {
            const SpElement g = random_sp(v, rng);
            const int d = g.minus_one().determinant();
            if (d != 0) EXPECT_EQ(sigma_det(g), SquareClass(v.field(), d));
        }
    }
}

TEST(SigmaDet, ComplementIndependent) {
    for (int p : {3, 5, 7}) {
        const PrimeField f(p);
        const SymplecticSpace v = SymplecticSpace::standard(f, 2);
        Rng rng(40 + static_cast<std::uint64_t>(p));
        int singular = 0;
        for (int trial = 0; trial < 400 && singular < 10; ++trial) {
            // Transvection-like elements have a fixed space; random ones rarely do.
            SpElement g = random_sp(v, rng);
            if (trial % 2 == 0) {
                const FpVector u = random_sp(v, rng).matrix().column(0);
                FpMatrix t = FpMatrix::identity(f, 4);
                const FpVector ju = v.gram().transpose().apply(u);
                for (std::size_t i = 0; i < 4; ++i)
                    for (std::size_t j = 0; j < 4; ++j) t.set(i, j, t(i, j) + f.mul(u[i], ju[j]));
                g = SpElement(v, t);
            }
            const Subspace k = fixed_space(g);
            if (k.dim() == 0 || k.dim() == 4) continue;
            ++singular;
            const SquareClass reference = sigma_det(g);
            for (int choice = 0; choice < 10; ++choice) {
                FpMatrix comp = FpMatrix(f, 4 - k.dim(), 4);
                do {
                    for (std::size_t i = 0; i < comp.rows(); ++i)
                        for (std::size_t j = 0; j < 4; ++j) comp.set(i, j, rng.residue(p));
                } while (subspace_sum(k, Subspace::span(comp)).dim() != 4);
                EXPECT_EQ(sigma_det(g, comp), reference);
            }
        }
        EXPECT_GE(singular, 5);
    }
}

TEST(FixedSpace, IdentityAndTransversal) {
    const PrimeField f(7);
    const SymplecticSpace v = SymplecticSpace::standard(f, 1);
    EXPECT_EQ(fixed_space(SpElement::identity(v)).dim(), 2u);
    EXPECT_EQ(fixed_space(sl2(f, 1, 1, 0, 1)).dim(), 1u);
    EXPECT_EQ(fixed_space(sl2(f, 2, 0, 0, 4)).dim(), 0u);
}
