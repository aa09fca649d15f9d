#include "weilchar/charformula.hpp"
#include "weilchar/error.hpp"
#include "weilchar/schrodinger.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace weilchar;

namespace {

SpElement sl2(const PrimeField& f, long long a, long long b, long long c, long long d) {
    const std::vector<long long> w{a, b, c, d};
    return {SymplecticSpace::standard(f, 1), FpMatrix::from_values(f, 2, 2, w)};
}

bool generic_for(const SpElement& g, const Lagrangian& l) {
    return subspace_intersect(g.apply(l).sub(), l.sub()).dim() == 0 && g.minus_one().determinant() != 0;
}

} // namespace

TEST(BuildSg, Identity) {
    const SymplecticSpace v = SymplecticSpace::standard(PrimeField(5), 2);
    const SgData sg = build_sg(SpElement::identity(v), Lagrangian::standard(v));
    EXPECT_EQ(sg.hat_s.dim(), 2u);
    EXPECT_TRUE(sg.q_gram.is_zero());
    EXPECT_EQ(sg.hat_s_prime.dim(), 0u);
}

TEST(BuildSg, GenericElementsGiveNondegenerateForms) {
    Rng rng(1);
    for (int p : {3, 5, 7}) {
        const SymplecticSpace v = SymplecticSpace::standard(PrimeField(p), 2);
        int found = 0;
        for (int trial = 0; trial < 200 && found < 20; ++trial) {
            const SpElement g = random_sp(v, rng);
            const Lagrangian l = random_lagrangian(v, rng);
            if (!generic_for(g, l)) continue;
            ++found;
            const SgData sg = build_sg(g, l);
            EXPECT_EQ(sg.hat_s.dim(), 2u);
            EXPECT_EQ(sg.hat_s_prime, l.sub());
            EXPECT_EQ(sg.q().rank(), 2u);
            EXPECT_EQ(sg.q_prime().rank(), 2u);
        }
        EXPECT_GT(found, 5);
    }
}

TEST(BuildSg, StructuralSuiteRandom) {
    Rng rng(2);
    for (int p : {3, 5, 7}) {
        const PrimeField f(p);
        const AdditiveCharacter c(f);
        for (std::size_t n : {1, 2}) {
            const SymplecticSpace v = SymplecticSpace::standard(f, n);
            for (int trial = 0; trial < 30; ++trial) {
                const SpElement g = random_sp(v, rng);
                const Lagrangian l = random_lagrangian(v, rng);
                const CheckReport r = structural_suite(c, g, l, rng);
                EXPECT_TRUE(r.pass) << r.witness;
            }
        }
    }
}

TEST(BuildSg, QDiagonalOffSupport) {
    const PrimeField f(5);
    const SymplecticSpace v = SymplecticSpace::standard(f, 1);
    // g = [[1,0],[1,1]] fixes e2; with l the e1 line, (g - 1) e2 = 0 and (g - 1) e1 = e2.
    const SgData sg = build_sg(sl2(f, 1, 0, 1, 1), Lagrangian::standard(v));
    for (int x = 0; x < 5; ++x) EXPECT_EQ(sg_q_diagonal(sg, FpVector{x}).has_value(), sg.hat_s.contains(FpVector{x}));
}

TEST(Maktouf, ThrowsForSingular) {
    const SymplecticSpace v = SymplecticSpace::standard(PrimeField(5), 1);
    Rng rng(3);
    EXPECT_THROW(maktouf_identity_check(build_sg(SpElement::identity(v), Lagrangian::standard(v)), rng),
                 SingularGMinusOne);
}

TEST(Theorem1A, LiteralValues) {
    const PrimeField f(5);
    const AdditiveCharacter c(f);
    for (std::size_t n : {1, 2, 3}) {
        const SymplecticSpace v = SymplecticSpace::standard(f, n);
        EXPECT_TRUE(approx_eq(theorem_1a(c, SpElement::identity(v)), std::pow(5.0, static_cast<double>(n)), 125.0));
    }
    EXPECT_TRUE(approx_eq(theorem_1a(c, sl2(f, 0, 1, -1, 0)), -1.0));
    EXPECT_TRUE(approx_eq(theorem_1a(c, sl2(f, 2, 0, 0, 3)), -1.0));
    EXPECT_TRUE(approx_eq(theorem_1a(c, sl2(f, 1, 1, 0, 1)), -std::sqrt(5.0)));
}

TEST(Theorem1A, ChiFormAgreesOnSl2F7) {
    const PrimeField f(7);
    const AdditiveCharacter c(f);
    for (const auto& g : all_sp(SymplecticSpace::standard(f, 1)))
        EXPECT_TRUE(approx_eq(theorem_1a(c, g), theorem_1a_chi(c, g), 7.0));
}

TEST(Theorem1A, MatchesOracleOnSl2) {
    for (int p : {3, 5, 7}) {
        const PrimeField f(p);
        const AdditiveCharacter c(f, p == 5 ? 2 : 1);
        for (const auto& g : all_sp(SymplecticSpace::standard(f, 1))) {
            const MpElement e = mp_split(c, g);
            const Complex tr = trace_oracle(e);
            EXPECT_TRUE(approx_eq(tr, theorem_1a(c, g), p));
            EXPECT_TRUE(approx_eq(tr, theorem_2b(e), p));
            EXPECT_TRUE(approx_eq(-tr, theorem_2b(e.negated()), p));
        }
    }
}

TEST(Theorem2B, IndependentOfLagrangianSp4) {
    Rng rng(4);
    const PrimeField f(3);
    const AdditiveCharacter c(f);
    const SymplecticSpace v = SymplecticSpace::standard(f, 2);
    const auto ls = all_lagrangians(v);
    for (int trial = 0; trial < 10; ++trial) {
        const MpElement e = MpElement::lift(c, random_sp(v, rng), trial % 2 == 0 ? 1 : -1);
        const Complex tr = trace_oracle(e);
        for (const auto& l : ls) EXPECT_TRUE(approx_eq(theorem_2b(e, l), tr, 9.0));
    }
}

TEST(Sl2Case, Labels) {
    const PrimeField f(5);
    const AdditiveCharacter c(f);
    EXPECT_EQ(sl2_case(c, sl2(f, 2, 0, 0, 3)).label, "i");
    EXPECT_EQ(sl2_case(c, sl2(f, 1, 2, 0, 1)).label, "ii");
    EXPECT_EQ(sl2_case(c, sl2(f, 1, 0, 2, 1)).label, "iii");
    EXPECT_EQ(sl2_case(c, SpElement::identity(SymplecticSpace::standard(f, 1))).label, "iv");
    EXPECT_EQ(sl2_case(c, sl2(f, 1, 2, 0, 1)).det_sigma, SquareClass(f, 2));
    for (const auto& g : all_sp(SymplecticSpace::standard(f, 1))) {
        const Sl2Case k = sl2_case(c, g);
        EXPECT_TRUE(approx_eq(k.trace, theorem_1a(c, g), 5.0)) << k.label;
    }
}
