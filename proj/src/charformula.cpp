#include "weilchar/charformula.hpp"

#include "weilchar/error.hpp"
#include "weilchar/maslov.hpp"

#include <cmath>
#include <sstream>

namespace weilchar {

namespace {

std::string describe(const SgData& sg) {
    std::ostringstream out;
    out << "g=" << sg.g.matrix().to_string() << " l=" << sg.l.basis().to_string();
    return out.str();
}

FpVector slice(const FpVector& v, std::size_t from, std::size_t count) {
    return {v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + count)};
}

double sqrt_p_pow(int p, std::size_t k) { return std::pow(static_cast<double>(p), 0.5 * static_cast<double>(k)); }

} // namespace

SgData build_sg(const SpElement& g, const Lagrangian& l) {
    if (!(g.space() == l.space())) throw DimensionMismatch("g and l live in different spaces");
    const SymplecticSpace& v = g.space();
    const PrimeField& f = v.field();
    const std::size_t d = v.dim();
    const std::size_t n = v.half_dim();
    const FpMatrix gm1 = g.minus_one();
    const FpMatrix b = l.basis();
    const FpMatrix gb = g.apply_rows(b);
    const Subspace sum = subspace_sum(Subspace::span(gb), l.sub());

    // x -> (g - 1) x mod (g l + l), on V/l coordinates.
    const std::size_t codim = d - sum.dim();
    Subspace hat_s = Subspace::full(f, n);
    if (codim > 0) {
        FpMatrix a(f, codim, n);
        FpVector e(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            e.assign(n, 0);
            e[i] = 1;
            const FpVector image = sum.quotient_coords(gm1.apply(l.sub().lift(e)));
            for (std::size_t r = 0; r < codim; ++r) a.set(r, i, image[r]);
        }
        hat_s = kernel(a);
    }

    const std::size_t k = hat_s.dim();
    FpMatrix lifts(f, k, d);
    FpMatrix phi(f, k, d);
    const SpanSolver stacked(gb.stack(b).stack(g.apply_rows(b) - b));
    for (std::size_t i = 0; i < k; ++i) {
        const FpVector x = l.sub().lift(hat_s.basis().row(i));
        const auto sol = stacked.solve(gm1.apply(x));
        if (!sol) throw DimensionMismatch("internal: S-hat element without decomposition");
        const FpVector ab = vec_add(f, combine(b, slice(*sol, 0, n)), combine(b, slice(*sol, n, n)));
        for (std::size_t j = 0; j < d; ++j) {
            lifts.set(i, j, x[j]);
            phi.set(i, j, ab[j]);
        }
    }
    FpMatrix q_gram(f, k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) q_gram.set(i, j, v.pair(phi.row(i), lifts.row(j)));

    const Subspace hat_s_prime = subspace_intersect(l.sub(), image(gm1));
    const SpanSolver preimage(gm1.transpose());
    const std::size_t kp = hat_s_prime.dim();
    std::vector<FpVector> ys;
    for (std::size_t j = 0; j < kp; ++j) ys.push_back(*preimage.solve(hat_s_prime.basis().row(j)));
    FpMatrix q_prime_gram(f, kp, kp);
    for (std::size_t i = 0; i < kp; ++i)
        for (std::size_t j = 0; j < kp; ++j) q_prime_gram.set(i, j, v.pair(hat_s_prime.basis().row(i), ys[j]));

    return {g, l, hat_s, lifts, hat_s_prime, q_gram, q_prime_gram, phi};
}

std::optional<int> sg_q_diagonal(const SgData& sg, const FpVector& coords) {
    if (!sg.hat_s.contains(coords)) return std::nullopt;
    if (sg.hat_s.dim() == 0) return 0;
    const auto c = SpanSolver(sg.hat_s.basis()).solve(coords);
    return sg.q_gram.pair(*c, *c);
}

std::optional<int> sg_q_prime(const SgData& sg, const FpVector& a, const FpVector& b) {
    const auto y = SpanSolver(sg.g.minus_one().transpose()).solve(b);
    if (!y) return std::nullopt;
    return sg.g.space().pair(a, *y);
}

Complex theorem_1a(const AdditiveCharacter& c, const SpElement& g) {
    const std::size_t dk = fixed_space(g).dim();
    const auto d = static_cast<long long>(g.space().dim());
    return sqrt_p_pow(c.field().p(), dk) * c.gamma_one_pow(d - static_cast<long long>(dk) - 1) *
           c.gamma(sigma_det(g));
}

Complex theorem_1a_chi(const AdditiveCharacter& c, const SpElement& g) {
    const std::size_t dk = fixed_space(g).dim();
    const auto d = static_cast<long long>(g.space().dim());
    return sqrt_p_pow(c.field().p(), dk) * c.gamma_one_pow(d - static_cast<long long>(dk)) *
           c.chi(sigma_det(g).rep());
}

Complex theorem_2b(const MpElement& e, const Lagrangian& l) {
    const std::size_t dk = fixed_space(e.g()).dim();
    return sqrt_p_pow(e.character().field().p(), dk) * theta(e, l);
}

Complex theorem_2b(const MpElement& e) { return theorem_2b(e, Lagrangian::standard(e.space())); }

Sl2Case sl2_case(const AdditiveCharacter& c, const SpElement& g) {
    if (g.space().dim() != 2) throw DimensionMismatch("the SL_2 table needs dim V = 2");
    const PrimeField& f = g.field();
    const FpMatrix& m = g.matrix();
    const int a = m(0, 0);
    const int b = m(0, 1);
    const int cc = m(1, 0);
    const int d = m(1, 1);
    const double root_p = std::sqrt(static_cast<double>(f.p()));
    const int trace_minus_two = f.sub(f.add(a, d), 2);
    if (trace_minus_two != 0) {
        const int det = f.neg(trace_minus_two);
        return {"i", SquareClass(f, det), c.gamma_one_pow(2) * c.chi(det)};
    }
    if (b != 0) return {"ii", SquareClass(f, b), root_p * c.gamma_one_pow(1) * c.chi(b)};
    if (cc != 0) return {"iii", SquareClass(f, f.neg(cc)), root_p * c.gamma_one_pow(1) * c.chi(f.neg(cc))};
    return {"iv", SquareClass::one(f), static_cast<double>(f.p())};
}

CheckReport symmetry_check(const SgData& sg) {
    CheckReport r{"symmetry of q and q'"};
    r.record(sg.q_gram.is_symmetric(), "q not symmetric at " + describe(sg));
    r.record(sg.q_prime_gram.is_symmetric(), "q' not symmetric at " + describe(sg));
    return r;
}

CheckReport phi_isometry_check(const SgData& sg) {
    CheckReport r{"Phi isometry"};
    const std::size_t k = sg.hat_s.dim();
    for (std::size_t i = 0; i < k; ++i) r.record(sg.hat_s_prime.contains(sg.phi.row(i)), "Phi leaves S'-hat at " + describe(sg));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const auto v = sg_q_prime(sg, sg.phi.row(i), sg.phi.row(j));
            r.record(v && *v == sg.q_gram(i, j), "q'(Phi x, Phi y) != q(x, y) at " + describe(sg));
        }
    if (r.pass && sg.q_gram.is_symmetric() && sg.q_prime_gram.is_symmetric()) {
        const QuadraticSpace q = sg.q();
        const QuadraticSpace qp = sg.q_prime();
        r.record(q.rank() == qp.rank() && discriminant(q) == discriminant(qp),
                 "nondegenerate parts of q and q' differ at " + describe(sg));
    }
    return r;
}

CheckReport maslov_class_check(const AdditiveCharacter& c, const SgData& sg) {
    CheckReport r{"q represents tau(graph, diagonal, l+l)"};
    const MaslovClass tau = maslov(c, {graph(sg.g), diagonal(sg.g.space()), doubled_lagrangian(sg.l)});
    auto same = [&](const WittInvariants& w) {
        return w.rank == tau.inv.rank && w.disc == tau.inv.disc && approx_eq(w.gamma, tau.inv.gamma);
    };
    r.record(same(witt_invariants(c, sg.q())), "q class differs from tau at " + describe(sg));
    r.record(same(witt_invariants(c, sg.q_prime())), "q' class differs from tau at " + describe(sg));
    return r;
}

CheckReport rank_disc_check(const SgData& sg) {
    CheckReport r{"rank and discriminant of q"};
    const SpElement& g = sg.g;
    const PrimeField& f = g.field();
    const Subspace ker = fixed_space(g);
    const Subspace gl = g.apply(sg.l).sub();
    const auto n = static_cast<long long>(g.space().half_dim());
    const long long rank = n - static_cast<long long>(ker.dim()) -
                           static_cast<long long>(subspace_intersect(gl, sg.l.sub()).dim()) +
                           2 * static_cast<long long>(subspace_intersect(sg.l.sub(), ker).dim());
    const std::size_t e = subspace_intersect(sg.l.sub(), image(g.minus_one(), sg.l.sub())).dim();
    const Orientation o(sg.l);
    const SquareClass disc = SquareClass(f, e % 2 == 0 ? 1 : -1) * o_pairing(o.transported(g), o) * sigma_det(g);
    const QuadraticSpace q = sg.q();
    r.record(static_cast<long long>(q.rank()) == rank, "rank of q differs from formula at " + describe(sg));
    r.record(discriminant(q) == disc, "discriminant of q differs from formula at " + describe(sg));
    return r;
}

CheckReport kernel_dim_check(const SgData& sg) {
    CheckReport r{"kernel dimension of q"};
    const SpElement& g = sg.g;
    const Subspace ker = fixed_space(g);
    const std::size_t meet = subspace_intersect(sg.l.sub(), ker).dim();
    r.record(sg.ker_q() + meet == ker.dim(), "dim ker q != dim ker(g-1) - dim(l n ker(g-1)) at " + describe(sg));
    const auto n = static_cast<long long>(g.space().half_dim());
    const long long expected = n - static_cast<long long>(ker.dim()) -
                               static_cast<long long>(subspace_intersect(g.apply(sg.l).sub(), sg.l.sub()).dim()) +
                               2 * static_cast<long long>(meet);
    r.record(static_cast<long long>(sg.q_gram.rank()) == expected, "rank q differs from dimension formula at " + describe(sg));
    r.record(static_cast<long long>(sg.q_prime_gram.rank()) == expected,
             "rank q' differs from dimension formula at " + describe(sg));
    return r;
}

CheckReport invertible_q_prime_check(const SgData& sg) {
    CheckReport r{"q' via (g-1)^{-1}"};
    const auto inv = sg.g.minus_one().inverse();
    if (!inv) return r;
    const SymplecticSpace& v = sg.g.space();
    r.record(sg.hat_s_prime == sg.l.sub(), "S'-hat is not l at " + describe(sg));
    const FpMatrix& basis = sg.hat_s_prime.basis();
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < basis.rows(); ++j)
            r.record(sg.q_prime_gram(i, j) == v.pair(basis.row(i), inv->apply(basis.row(j))),
                     "q'(a,b) != <a,(g-1)^{-1} b> at " + describe(sg));
    return r;
}

CheckReport maktouf_identity_check(const SgData& sg, Rng& rng, std::size_t samples) {
    CheckReport r{"q'(a,a) = -<a,(g^-1 - 1)^{-1} a>"};
    const SpElement& g = sg.g;
    if (!g.minus_one().inverse()) throw SingularGMinusOne();
    const PrimeField& f = g.field();
    const FpMatrix m = *g.inverse().minus_one().inverse();
    const SymplecticSpace& v = g.space();
    std::vector<FpVector> as = sg.l.basis().row_vectors();
    for (std::size_t s = 0; s < samples; ++s) {
        FpVector coeffs(sg.l.dim());
        for (auto& x : coeffs) x = rng.residue(f.p());
        as.push_back(combine(sg.l.basis(), coeffs));
    }
    for (const auto& a : as) {
        const auto lhs = sg_q_prime(sg, a, a);
        r.record(lhs && *lhs == f.neg(v.pair(a, m.apply(a))), "identity fails at " + describe(sg));
    }
    return r;
}

CheckReport structural_suite(const AdditiveCharacter& c, const SpElement& g, const Lagrangian& l, Rng& rng) {
    CheckReport r{"structural suite"};
    const SgData sg = build_sg(g, l);
    const CheckReport sym = symmetry_check(sg);
    r.merge(sym);
    r.merge(phi_isometry_check(sg));
    r.merge(kernel_dim_check(sg));
    if (sym.pass) {
        r.merge(maslov_class_check(c, sg));
        r.merge(rank_disc_check(sg));
    }
    if (g.minus_one().inverse()) {
        r.merge(invertible_q_prime_check(sg));
        r.merge(maktouf_identity_check(sg, rng));
    }
    return r;
}

} // namespace weilchar
