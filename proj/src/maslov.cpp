#include "weilchar/maslov.hpp"

#include "weilchar/error.hpp"

namespace weilchar {

namespace {

FpMatrix change_of_basis(const FpMatrix& rows, const FpMatrix& target_basis) {
    const SpanSolver solver(target_basis);
    FpMatrix m(rows.field(), rows.rows(), target_basis.rows());
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        const auto coeffs = solver.solve(rows.row(i));
        if (!coeffs) throw DimensionMismatch("vector outside the oriented subspace");
        for (std::size_t j = 0; j < coeffs->size(); ++j) m.set(i, j, (*coeffs)[j]);
    }
    return m;
}

// Rows of `basis` appended greedily to those of `start` until the span is full.
std::vector<FpVector> extend_basis(const PrimeField& f, std::size_t d, const std::vector<FpVector>& start,
                                   const FpMatrix& basis) {
    std::vector<FpVector> rows = start;
    std::vector<FpVector> added;
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        const FpVector b = basis.row(i);
        if (Subspace::span(f, d, rows).contains(b)) continue;
        rows.push_back(b);
        added.push_back(b);
    }
    return added;
}

void require_common_space(std::span<const Lagrangian> ls) {
    for (const auto& l : ls)
        if (!(l.space() == ls.front().space())) throw DimensionMismatch("Lagrangians live in different spaces");
}

// Basis of {(x_i) in prod l_i : sum x_i = 0}; entry [t][i] is the component x_i of basis vector t.
std::vector<std::vector<FpVector>> sum_zero_tuples(std::span<const Lagrangian> ls) {
    const SymplecticSpace& v = ls.front().space();
    const PrimeField& f = v.field();
    const std::size_t d = v.dim();
    std::size_t cols = 0;
    for (const auto& l : ls) cols += l.dim();
    FpMatrix a(f, d, cols);
    std::size_t col = 0;
    for (const auto& l : ls)
        for (std::size_t r = 0; r < l.dim(); ++r, ++col)
            for (std::size_t k = 0; k < d; ++k) a.set(k, col, l.basis()(r, k));
    const Subspace rel = kernel(a);
    std::vector<std::vector<FpVector>> out;
    out.reserve(rel.dim());
    for (std::size_t t = 0; t < rel.dim(); ++t) {
        const FpVector coeffs = rel.basis().row(t);
        std::vector<FpVector> xs;
        std::size_t offset = 0;
        for (const auto& l : ls) {
            const FpVector part(coeffs.begin() + static_cast<std::ptrdiff_t>(offset),
                                coeffs.begin() + static_cast<std::ptrdiff_t>(offset + l.dim()));
            xs.push_back(combine(l.basis(), part));
            offset += l.dim();
        }
        out.push_back(std::move(xs));
    }
    return out;
}

template <typename Beta>
QuadraticSpace polarize(const PrimeField& f, const std::vector<std::vector<FpVector>>& t, Beta beta) {
    FpMatrix g(f, t.size(), t.size());
    for (std::size_t s = 0; s < t.size(); ++s)
        for (std::size_t u = s; u < t.size(); ++u) {
            const int b = f.mul(f.half(), f.add(beta(t[s], t[u]), beta(t[u], t[s])));
            g.set(s, u, b);
            g.set(u, s, b);
        }
    return QuadraticSpace(std::move(g));
}

} // namespace

Orientation::Orientation(Lagrangian lag, FpMatrix basis) : lag_(std::move(lag)), basis_(std::move(basis)) {
    if (basis_.rows() != lag_.dim() || !(Subspace::span(basis_) == lag_.sub()))
        throw DimensionMismatch("orientation rows must form a basis of the Lagrangian");
}

Orientation::Orientation(Lagrangian lag) : lag_(std::move(lag)), basis_(lag_.basis()) {}

Orientation Orientation::transported(const SpElement& g) const {
    FpMatrix rows = g.apply_rows(basis_);
    return {g.apply(lag_), std::move(rows)};
}

Orientation Orientation::rescaled(int s) const {
    if (lag_.dim() == 0) return *this;
    const PrimeField& f = basis_.field();
    if (f.reduce(s) == 0) throw DivisionByZero();
    FpMatrix rows = basis_;
    for (std::size_t j = 0; j < rows.cols(); ++j) rows.set(0, j, f.mul(s, rows(0, j)));
    return {lag_, std::move(rows)};
}

int Orientation::relative_det(const Orientation& other) const {
    if (!(lag_ == other.lag_)) throw DimensionMismatch("orientations of different Lagrangians");
    return change_of_basis(basis_, other.basis_).determinant();
}

SquareClass o_pairing(const Orientation& o1, const Orientation& o2) {
    const SymplecticSpace& v = o1.lagrangian().space();
    if (!(v == o2.lagrangian().space())) throw DimensionMismatch("orientations live in different spaces");
    const PrimeField& f = v.field();
    const std::size_t d = v.dim();
    const auto common = subspace_intersect(o1.lagrangian().sub(), o2.lagrangian().sub()).basis().row_vectors();
    const auto r1 = extend_basis(f, d, common, o1.basis());
    const auto r2 = extend_basis(f, d, common, o2.basis());

    auto stacked = [&](const std::vector<FpVector>& rest) {
        auto rows = common;
        rows.insert(rows.end(), rest.begin(), rest.end());
        return FpMatrix::from_rows(f, d, rows);
    };
    const int det1 = change_of_basis(stacked(r1), o1.basis()).determinant();
    const int det2 = change_of_basis(stacked(r2), o2.basis()).determinant();

    FpMatrix pairing(f, r1.size(), r2.size());
    for (std::size_t j = 0; j < r1.size(); ++j)
        for (std::size_t k = 0; k < r2.size(); ++k) pairing.set(j, k, v.pair(r1[j], r2[k]));
    const int detp = r1.empty() ? 1 : pairing.determinant();
    return {f, f.mul(detp, f.mul(det1, det2))};
}

QuadraticSpace kashiwara_form(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3) {
    const std::vector<Lagrangian> ls{l1, l2, l3};
    require_common_space(ls);
    const SymplecticSpace& v = l1.space();
    return polarize(v.field(), sum_zero_tuples(ls),
                    [&](const std::vector<FpVector>& a, const std::vector<FpVector>& b) { return v.pair(a[0], b[2]); });
}

QuadraticSpace polygon_form(std::span<const Lagrangian> ls) {
    if (ls.empty()) throw ArityError("polygon form needs at least one Lagrangian");
    require_common_space(ls);
    const SymplecticSpace& v = ls.front().space();
    const PrimeField& f = v.field();
    const std::size_t k = ls.size();
    return polarize(f, sum_zero_tuples(ls), [&](const std::vector<FpVector>& a, const std::vector<FpVector>& b) {
        int s = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j) s = f.add(s, v.pair(a[j], b[i]));
        return s;
    });
}

MaslovClass maslov(const AdditiveCharacter& c, std::span<const Lagrangian> ls) {
    if (ls.size() < 2) throw ArityError("the Maslov index needs at least two Lagrangians");
    require_common_space(ls);
    const PrimeField& f = ls.front().space().field();
    QuadraticSpace form = ls.size() == 2   ? QuadraticSpace::zero(f)
                          : ls.size() == 3 ? kashiwara_form(ls[0], ls[1], ls[2])
                                           : polygon_form(ls);
    WittInvariants inv = witt_invariants(c, form);
    return {std::move(form), inv};
}

MaslovClass maslov(const AdditiveCharacter& c, std::initializer_list<Lagrangian> ls) {
    return maslov(c, std::span<const Lagrangian>(ls.begin(), ls.size()));
}

MaslovClass maslov_chain(const AdditiveCharacter& c, std::span<const Lagrangian> ls) {
    if (ls.size() <= 3) return maslov(c, ls);
    const MaslovClass head = maslov(c, ls.subspan(0, 3));
    std::vector<Lagrangian> rest{ls[0]};
    rest.insert(rest.end(), ls.begin() + 2, ls.end());
    const MaslovClass tail = maslov_chain(c, rest);
    QuadraticSpace form = witt_add(head.form, tail.form);
    WittInvariants inv = witt_invariants(c, form);
    return {std::move(form), inv};
}

Complex gamma_tau(const AdditiveCharacter& c, std::span<const Lagrangian> ls) { return maslov(c, ls).inv.gamma; }

Complex gamma_tau(const AdditiveCharacter& c, std::initializer_list<Lagrangian> ls) {
    return maslov(c, ls).inv.gamma;
}

RankDisc predicted_rank_disc(std::span<const Orientation> os) {
    if (os.empty()) throw ArityError("need at least one Lagrangian");
    const SymplecticSpace& v = os.front().lagrangian().space();
    const PrimeField& f = v.field();
    const std::size_t k = os.size();
    const auto n = static_cast<long long>(v.half_dim());
    long long pair_dims = 0;
    SquareClass prod = SquareClass::one(f);
    Subspace all = os.front().lagrangian().sub();
    for (std::size_t i = 0; i < k; ++i) {
        const Orientation& a = os[i];
        const Orientation& b = os[(i + 1) % k];
        pair_dims += static_cast<long long>(subspace_intersect(a.lagrangian().sub(), b.lagrangian().sub()).dim());
        prod = prod * o_pairing(a, b);
        all = subspace_intersect(all, a.lagrangian().sub());
    }
    const auto common = static_cast<long long>(all.dim());
    const long long rank = (static_cast<long long>(k) - 2) * n - pair_dims + 2 * common;
    const SquareClass sign(f, (n + common) % 2 == 0 ? 1 : -1);
    return {static_cast<std::size_t>(rank), sign * prod};
}

Complex m_pair(const Orientation& o1, const Orientation& o2, const AdditiveCharacter& c) {
    const auto n = static_cast<long long>(o1.lagrangian().space().half_dim());
    const auto common =
        static_cast<long long>(subspace_intersect(o1.lagrangian().sub(), o2.lagrangian().sub()).dim());
    return c.gamma_one_pow(n - common - 1) * c.gamma(o_pairing(o1, o2));
}

} // namespace weilchar
