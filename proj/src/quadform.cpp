#include "weilchar/quadform.hpp"

#include "weilchar/error.hpp"

#include <cmath>
#include <utility>

namespace weilchar {

QuadraticSpace::QuadraticSpace(FpMatrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw DimensionMismatch("Gram matrix must be square");
    if (!gram_.is_symmetric()) throw DimensionMismatch("Gram matrix must be symmetric");
}

QuadraticSpace QuadraticSpace::zero(const PrimeField& field, std::size_t dim) {
    return QuadraticSpace(FpMatrix(field, dim, dim));
}

QuadraticSpace QuadraticSpace::diagonal(const PrimeField& field, const std::vector<int>& entries) {
    FpMatrix g(field, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) g.set(i, i, entries[i]);
    return QuadraticSpace(std::move(g));
}

QuadraticSpace QuadraticSpace::hyperbolic_plane(const PrimeField& field) {
    FpMatrix g(field, 2, 2);
    g.set(0, 1, 1);
    g.set(1, 0, 1);
    return QuadraticSpace(std::move(g));
}

QuadraticSpace QuadraticSpace::restrict_to(const FpMatrix& basis) const {
    if (basis.cols() != dim()) throw DimensionMismatch("restriction basis has the wrong length");
    return QuadraticSpace(basis * gram_ * basis.transpose());
}

Subspace radical(const QuadraticSpace& q) { return kernel(q.gram()); }

QuadraticSpace nondegenerate_quotient(const QuadraticSpace& q) {
    const Subspace rad = radical(q);
    const auto free = rad.non_pivots();
    FpMatrix complement(q.field(), free.size(), q.dim());
    for (std::size_t i = 0; i < free.size(); ++i) complement.set(i, free[i], 1);
    return q.restrict_to(complement);
}

Diagonalization diagonalize_with_transform(const QuadraticSpace& q) {
    const PrimeField& f = q.field();
    const std::size_t d = q.dim();
    std::vector<FpVector> g(d, FpVector(d));
    std::vector<FpVector> t(d, FpVector(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        t[i][i] = 1;
        for (std::size_t j = 0; j < d; ++j) g[i][j] = q.gram()(i, j);
    }
    // b_j <- b_j + s b_i, applied to the transform and to both sides of the Gram matrix.
    auto add_multiple = [&](std::size_t j, std::size_t i, int s) {
        for (std::size_t k = 0; k < d; ++k) t[j][k] = f.add(t[j][k], f.mul(s, t[i][k]));
        for (std::size_t k = 0; k < d; ++k) g[j][k] = f.add(g[j][k], f.mul(s, g[i][k]));
        for (std::size_t k = 0; k < d; ++k) g[k][j] = f.add(g[k][j], f.mul(s, g[k][i]));
    };
    auto swap_basis = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(t[i], t[j]);
        std::swap(g[i], g[j]);
        for (std::size_t k = 0; k < d; ++k) std::swap(g[k][i], g[k][j]);
    };

    std::vector<int> entries;
    for (std::size_t k = 0; k < d; ++k) {
        std::size_t pivot = d;
        for (std::size_t i = k; i < d && pivot == d; ++i)
            if (g[i][i] != 0) pivot = i;
        if (pivot == d) {
            for (std::size_t i = k; i < d && pivot == d; ++i)
                for (std::size_t j = i + 1; j < d; ++j)
                    if (g[i][j] != 0) {
                        add_multiple(i, j, 1);
                        pivot = i;
                        break;
                    }
        }
        if (pivot == d) break;
        swap_basis(k, pivot);
        const int inv = f.inv(g[k][k]);
        for (std::size_t j = k + 1; j < d; ++j)
            if (g[j][k] != 0) add_multiple(j, k, f.neg(f.mul(g[j][k], inv)));
        entries.push_back(g[k][k]);
    }
    return {FpMatrix::from_rows(f, d, t), std::move(entries)};
}

std::vector<int> diagonalize(const QuadraticSpace& q) { return diagonalize_with_transform(q).entries; }

SquareClass discriminant(const QuadraticSpace& q) {
    int det = 1;
    for (int a : diagonalize(q)) det = q.field().mul(det, a);
    return {q.field(), det};
}

SquareClass signed_discriminant(const QuadraticSpace& q) {
    const std::size_t r = q.rank();
    const SquareClass d = discriminant(q);
    if ((r * (r - (r > 0 ? 1 : 0)) / 2) % 2 == 0) return d;
    return d * SquareClass(q.field(), -1);
}

Complex gamma_form(const AdditiveCharacter& c, const QuadraticSpace& q) {
    Complex out = 1.0;
    for (int a : diagonalize(q)) out *= c.gamma(a);
    return out;
}

Complex gamma_by_summation(const AdditiveCharacter& c, const QuadraticSpace& q, std::uint64_t cap) {
    const PrimeField& f = q.field();
    const std::size_t d = q.dim();
    const auto p = static_cast<std::uint64_t>(f.p());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) {
        total *= p;
        if (total > cap) throw EnumerationTooLarge("form too large for direct summation");
    }
    const FpMatrix& g = q.gram();
    FpVector x(d, 0);
    // gx holds G x, updated incrementally as x steps through F_p^d.
    FpVector gx(d, 0);
    int value = 0;
    Complex sum = 0.0;
    const int half = f.half();
    for (std::uint64_t step = 0; step < total; ++step) {
        sum += c.psi(f.mul(half, value));
        std::size_t k = d;
        while (k > 0) {
            --k;
            // x_k -> x_k + 1 changes q(x) by 2 (Gx)_k + G_kk.
            value = f.add(value, f.add(f.mul(2, gx[k]), g(k, k)));
            for (std::size_t i = 0; i < d; ++i) gx[i] = f.add(gx[i], g(i, k));
            if (++x[k] < f.p()) break;
            x[k] = 0;
        }
    }
    const std::size_t r = q.rank();
    const double weight = std::pow(static_cast<double>(p), -0.5 * static_cast<double>(r) - static_cast<double>(d - r));
    return sum * weight;
}

Complex gamma_from_rank_disc(const AdditiveCharacter& c, std::size_t rank, const SquareClass& disc) {
    if (rank == 0) return 1.0;
    return c.gamma_one_pow(static_cast<long long>(rank) - 1) * c.gamma(disc);
}

WittInvariants witt_invariants(const AdditiveCharacter& c, const QuadraticSpace& q) {
    const auto entries = diagonalize(q);
    int det = 1;
    Complex gamma = 1.0;
    for (int a : entries) {
        det = q.field().mul(det, a);
        gamma *= c.gamma(a);
    }
    return {entries.size(), SquareClass(q.field(), det), gamma};
}

QuadraticSpace witt_add(const QuadraticSpace& a, const QuadraticSpace& b) {
    return QuadraticSpace(a.gram().block_diag(b.gram()));
}

QuadraticSpace witt_neg(const QuadraticSpace& q) { return QuadraticSpace(-q.gram()); }

bool witt_equal(const WittInvariants& a, const WittInvariants& b, double eps) {
    if (a.rank % 2 != b.rank % 2) return false;
    auto sign_of = [](std::size_t r) { return (r * (r == 0 ? 0 : r - 1) / 2) % 2 == 0; };
    const int p = a.disc.modulus();
    const PrimeField f(p);
    const SquareClass minus_one(f, -1);
    const SquareClass sa = sign_of(a.rank) ? a.disc : a.disc * minus_one;
    const SquareClass sb = sign_of(b.rank) ? b.disc : b.disc * minus_one;
    return sa == sb && approx_eq(a.gamma, b.gamma, 1.0, eps);
}

} // namespace weilchar
