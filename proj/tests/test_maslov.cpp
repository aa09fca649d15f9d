#include "weilchar/error.hpp"
#include "weilchar/maslov.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace weilchar;

namespace {

Lagrangian line(const SymplecticSpace& v, long long x, long long y) {
    return {v, Subspace::span(FpMatrix::from_values(v.field(), 1, 2, std::vector<long long>{x, y}))};
}

Orientation random_orientation(const Lagrangian& l, Rng& rng) {
    const PrimeField& f = l.space().field();
    const std::size_t n = l.dim();
    while (true) {
        FpMatrix mix(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) mix.set(i, j, rng.residue(f.p()));
        if (mix.determinant() != 0) return {l, mix * l.basis()};
    }
}

std::vector<Lagrangian> random_tuple(const SymplecticSpace& v, std::size_t k, Rng& rng) {
    std::vector<Lagrangian> out;
    for (std::size_t i = 0; i < k; ++i) {
        if (!out.empty() && rng.index(4) == 0) out.push_back(out[rng.index(out.size())]);
        else out.push_back(random_lagrangian(v, rng));
    }
    return out;
}

} // namespace

TEST(Orientation, Validates) {
    const PrimeField f(5);
    const SymplecticSpace v = SymplecticSpace::standard(f, 1);
    const Lagrangian l = Lagrangian::standard(v);
    EXPECT_THROW(Orientation(l, FpMatrix::from_values(f, 1, 2, std::vector<long long>{0, 1})), DimensionMismatch);
    EXPECT_THROW(Orientation(l, FpMatrix(f, 1, 2)), DimensionMismatch);
    const Orientation o(l, FpMatrix::from_values(f, 1, 2, std::vector<long long>{3, 0}));
    EXPECT_EQ(o.relative_det(Orientation(l)), 3);
}

TEST(OPairing, Examples) {
    const PrimeField f(3);
    const SymplecticSpace v = SymplecticSpace::standard(f, 1);
    const Orientation e1(line(v, 1, 0));
    const Orientation e2(line(v, 0, 1));
    EXPECT_TRUE(o_pairing(e1, e1).is_square());
    EXPECT_TRUE(o_pairing(e1, e2).is_square());
    const Orientation b(line(v, 1, 1), FpMatrix::from_values(f, 1, 2, std::vector<long long>{2, 2}));
    EXPECT_EQ(o_pairing(b, b), SquareClass::one(f));
}

TEST(OPairing, ScalesWithOrientation) {
    Rng rng(1);
    for (int p : {5, 7}) {
        const PrimeField f(p);
        const SymplecticSpace v = SymplecticSpace::standard(f, 2);
        for (int trial = 0; trial < 40; ++trial) {
            const Orientation a = random_orientation(random_lagrangian(v, rng), rng);
            const Orientation b = random_orientation(random_lagrangian(v, rng), rng);
            const int s = 1 + rng.residue(p - 1);
            EXPECT_EQ(o_pairing(a.rescaled(s), b), SquareClass(f, s) * o_pairing(a, b));
            EXPECT_EQ(o_pairing(a, b.rescaled(s)), SquareClass(f, s) * o_pairing(a, b));
        }
    }
}

TEST(Maslov, ArityAndDegenerateTuples) {
    const PrimeField f(5);
    const AdditiveCharacter c(f);
    const SymplecticSpace v = SymplecticSpace::standard(f, 1);
    const Lagrangian l = line(v, 1, 0), m = line(v, 1, 2);
    EXPECT_THROW(maslov(c, {l}), ArityError);
    EXPECT_EQ(maslov(c, {l, m}).inv.rank, 0u);
    for (const auto& t : {maslov(c, {l, l, l}), maslov(c, {l, l, m}), maslov(c, {l, m, m}), maslov(c, {l, l, m, m})}) {
        EXPECT_EQ(t.inv.rank, 0u);
        EXPECT_TRUE(approx_eq(t.inv.gamma, 1.0));
    }
}

TEST(Maslov, TransverseTripleHasRankOne) {
    const PrimeField f(5);
    const AdditiveCharacter c(f);
    const SymplecticSpace v = SymplecticSpace::standard(f, 1);
    const auto t = maslov(c, {line(v, 1, 0), line(v, 0, 1), line(v, 1, 1)});
    EXPECT_EQ(t.inv.rank, 1u);
    const std::vector<Orientation> os{Orientation(line(v, 1, 0)), Orientation(line(v, 0, 1)),
                                      Orientation(line(v, 1, 1))};
    EXPECT_EQ(predicted_rank_disc(os).rank, 1u);
    EXPECT_EQ(predicted_rank_disc(std::vector<Orientation>(os.begin(), os.begin() + 2)).rank, 0u);
}

TEST(Maslov, PolygonMatchesKashiwaraForTriples) {
    Rng rng(2);
    const SymplecticSpace v = SymplecticSpace::standard(PrimeField(7), 2);
    for (int trial = 0; trial < 30; ++trial) {
        const auto ls = random_tuple(v, 3, rng);
        EXPECT_EQ(polygon_form(ls), kashiwara_form(ls[0], ls[1], ls[2]));
    }
}

TEST(Maslov, DihedralAndInvariance) {
    Rng rng(3);
    for (int p : {3, 5, 7}) {
        const PrimeField f(p);
        const AdditiveCharacter c(f);
        for (std::size_t n : {1, 2}) {
            const SymplecticSpace v = SymplecticSpace::standard(f, n);
            for (int trial = 0; trial < 20; ++trial) {
                const std::size_t k = 3 + rng.index(3);
                auto ls = random_tuple(v, k, rng);
                const auto base = maslov(c, ls).inv;
                auto rev = ls;
                std::reverse(rev.begin(), rev.end());
                EXPECT_TRUE(approx_eq(base.gamma * maslov(c, rev).inv.gamma, 1.0));
                auto rot = ls;
                std::rotate(rot.begin(), rot.end() - 1, rot.end());
                const auto r = maslov(c, rot).inv;
                EXPECT_EQ(r.rank, base.rank);
                EXPECT_EQ(r.disc, base.disc);
                const SpElement g = random_sp(v, rng);
                std::vector<Lagrangian> moved;
                for (const auto& l : ls) moved.push_back(g.apply(l));
                const auto m = maslov(c, moved).inv;
                EXPECT_EQ(m.rank, base.rank);
                EXPECT_EQ(m.disc, base.disc);
            }
        }
    }
}

TEST(Maslov, ChainConditionAndChainReduction) {
    Rng rng(4);
    for (int p : {3, 5, 7}) {
        const PrimeField f(p);
        const AdditiveCharacter c(f);
        const SymplecticSpace v = SymplecticSpace::standard(f, 2);
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t k = 4 + rng.index(2);
            const auto ls = random_tuple(v, k, rng);
            const auto whole = maslov(c, ls).inv;
            EXPECT_TRUE(witt_equal(whole, maslov_chain(c, ls).inv));
            const std::size_t j = 2 + rng.index(k - 3);
            std::vector<Lagrangian> head(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            std::vector<Lagrangian> tail{ls[0]};
            tail.insert(tail.end(), ls.begin() + static_cast<std::ptrdiff_t>(j), ls.end());
            const QuadraticSpace sum = witt_add(maslov(c, head).form, maslov(c, tail).form);
            EXPECT_TRUE(witt_equal(whole, witt_invariants(c, sum)));
        }
    }
}

TEST(Maslov, AdditiveAcrossDirectSums) {
    Rng rng(5);
    const PrimeField f(5);
    const AdditiveCharacter c(f);
    const SymplecticSpace a = SymplecticSpace::standard(f, 1);
    const SymplecticSpace b = SymplecticSpace::standard(f, 2);
    for (int trial = 0; trial < 20; ++trial) {
        const auto la = random_tuple(a, 3, rng);
        const auto lb = random_tuple(b, 3, rng);
        std::vector<Lagrangian> sum;
        for (std::size_t i = 0; i < 3; ++i) sum.push_back(direct_sum(la[i], lb[i]));
        const auto whole = maslov(c, sum).inv;
        const auto parts = witt_invariants(c, witt_add(maslov(c, la).form, maslov(c, lb).form));
        EXPECT_EQ(whole.rank, parts.rank);
        EXPECT_EQ(whole.disc, parts.disc);
        EXPECT_TRUE(approx_eq(whole.gamma, parts.gamma));
    }
}

TEST(Maslov, PredictedRankDisc) {
    Rng rng(6);
    for (int p : {3, 5, 7}) {
        const PrimeField f(p);
        const AdditiveCharacter c(f);
        for (std::size_t n : {1, 2}) {
            const SymplecticSpace v = SymplecticSpace::standard(f, n);
            for (std::size_t k : {3, 4, 5})
                for (int trial = 0; trial < 15; ++trial) {
                    const auto ls = random_tuple(v, k, rng);
                    std::vector<Orientation> os;
                    for (const auto& l : ls) os.push_back(random_orientation(l, rng));
                    const auto rd = predicted_rank_disc(os);
                    const auto inv = maslov(c, ls).inv;
                    EXPECT_EQ(inv.rank, rd.rank);
                    EXPECT_EQ(inv.disc, rd.disc);
                }
        }
    }
}

TEST(MPair, ProductAndInvariance) {
    Rng rng(7);
    for (int p : {3, 5, 7}) {
        const PrimeField f(p);
        const AdditiveCharacter c(f);
        const SymplecticSpace v = SymplecticSpace::standard(f, 2);
        const Orientation self = random_orientation(random_lagrangian(v, rng), rng);
        EXPECT_TRUE(approx_eq(m_pair(self, self, c), 1.0));
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t k = 2 + rng.index(4);
            const auto ls = random_tuple(v, k, rng);
            std::vector<Orientation> os;
            for (const auto& l : ls) os.push_back(random_orientation(l, rng));
            Complex prod = 1.0;
            for (std::size_t i = 0; i < k; ++i) prod *= m_pair(os[i], os[(i + 1) % k], c);
            EXPECT_TRUE(approx_eq(prod, gamma_tau(c, ls)));
            const SpElement g = random_sp(v, rng);
            EXPECT_TRUE(approx_eq(m_pair(os[0].transported(g), os[1].transported(g), c), m_pair(os[0], os[1], c)));
        }
    }
}
