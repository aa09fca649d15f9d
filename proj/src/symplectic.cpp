#include "weilchar/symplectic.hpp"

#include "weilchar/error.hpp"

#include <set>

namespace weilchar {

namespace {

bool is_antisymmetric(const FpMatrix& m) {
    if (!m.is_square()) return false;
    const PrimeField& f = m.field();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, i) != 0) return false;
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != f.neg(m(j, i))) return false;
    }
    return true;
}

bool is_isotropic(const SymplecticSpace& space, const FpMatrix& rows) {
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = i + 1; j < rows.rows(); ++j)
            if (space.pair(rows.row(i), rows.row(j)) != 0) return false;
    return true;
}

// Symplectic complement of span(u, v) inside w, assuming <u, v> = 1.
std::vector<FpVector> project_out(const SymplecticSpace& space, const FpVector& u, const FpVector& v,
                                  const std::vector<FpVector>& w) {
    const PrimeField& f = space.field();
    std::vector<FpVector> out;
    out.reserve(w.size());
    for (const auto& x : w) {
        FpVector y = vec_sub(f, x, vec_scale(f, space.pair(u, x), v));
        y = vec_add(f, y, vec_scale(f, space.pair(v, x), u));
        out.push_back(std::move(y));
    }
    const Subspace s = Subspace::span(f, space.dim(), out);
    return s.basis().row_vectors();
}

FpMatrix columns_to_matrix(const PrimeField& f, std::size_t d, const std::vector<FpVector>& us,
                           const std::vector<FpVector>& vs) {
    const std::size_t n = us.size();
    FpMatrix m(f, d, d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < d; ++r) {
            m.set(r, i, us[i][r]);
            m.set(r, n + i, vs[i][r]);
        }
    }
    return m;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
    return a * b;
}

} // namespace

SymplecticSpace SymplecticSpace::standard(const PrimeField& field, std::size_t half_dim) {
    const std::size_t d = 2 * half_dim;
    FpMatrix gram(field, d, d);
    FpMatrix std_rows(field, half_dim, d);
    for (std::size_t i = 0; i < half_dim; ++i) {
        gram.set(i, half_dim + i, 1);
        gram.set(half_dim + i, i, -1);
        std_rows.set(i, i, 1);
    }
    return SymplecticSpace(std::make_shared<const Data>(Data{std::move(gram), Subspace::span(std_rows)}));
}

SymplecticSpace SymplecticSpace::from_gram(const FpMatrix& gram, const FpMatrix& standard_lagrangian) {
    if (!is_antisymmetric(gram)) throw DimensionMismatch("symplectic Gram matrix must be antisymmetric");
    if (gram.rank() != gram.rows()) throw DimensionMismatch("symplectic Gram matrix must be invertible");
    SymplecticSpace space(std::make_shared<const Data>(Data{gram, Subspace::span(standard_lagrangian)}));
    if (!Lagrangian::is_lagrangian(space, space.standard_lagrangian_subspace()))
        throw NotLagrangian("distinguished subspace is not Lagrangian");
    return space;
}

SymplecticSpace SymplecticSpace::negated() const {
    return SymplecticSpace(std::make_shared<const Data>(Data{-data_->gram, data_->standard}));
}

SymplecticSpace direct_sum(const SymplecticSpace& a, const SymplecticSpace& b) {
    const FpMatrix std_rows = a.standard_lagrangian_subspace().basis().block_diag(b.standard_lagrangian_subspace().basis());
    return SymplecticSpace::from_gram(a.gram().block_diag(b.gram()), std_rows);
}

SymplecticSpace doubled(const SymplecticSpace& v) { return direct_sum(v.negated(), v); }

// ---------------------------------------------------------------------------

Lagrangian::Lagrangian(SymplecticSpace space, Subspace sub) : space_(std::move(space)), sub_(std::move(sub)) {
    if (!is_lagrangian(space_, sub_)) throw NotLagrangian("subspace is not Lagrangian");
}

Lagrangian Lagrangian::standard(const SymplecticSpace& space) {
    return {space, space.standard_lagrangian_subspace()};
}

bool Lagrangian::is_lagrangian(const SymplecticSpace& space, const Subspace& sub) {
    if (sub.ambient_dim() != space.dim() || sub.field() != space.field()) return false;
    if (2 * sub.dim() != space.dim()) return false;
    return is_isotropic(space, sub.basis());
}

Lagrangian direct_sum(const Lagrangian& a, const Lagrangian& b) {
    const SymplecticSpace space = direct_sum(a.space(), b.space());
    return {space, Subspace::span(a.basis().block_diag(b.basis()))};
}

// ---------------------------------------------------------------------------

bool is_symplectic(const SymplecticSpace& space, const FpMatrix& m) {
    if (m.rows() != space.dim() || m.cols() != space.dim()) throw DimensionMismatch("matrix size does not match the space");
    if (m.field() != space.field()) throw DimensionMismatch("matrix over a different field");
    return m.transpose() * space.gram() * m == space.gram();
}

SpElement::SpElement(SymplecticSpace space, FpMatrix m) : space_(std::move(space)), mat_(std::move(m)) {
    if (!is_symplectic(space_, mat_)) throw NotSymplectic();
}

SpElement SpElement::identity(const SymplecticSpace& space) {
    return {space, FpMatrix::identity(space.field(), space.dim())};
}

Lagrangian SpElement::apply(const Lagrangian& l) const { return {space_, image(mat_, l.sub())}; }

FpMatrix SpElement::apply_rows(const FpMatrix& rows) const { return (mat_ * rows.transpose()).transpose(); }

SpElement SpElement::operator*(const SpElement& rhs) const {
    if (!(space_ == rhs.space_)) throw DimensionMismatch("product of elements of different groups");
    return {space_, mat_ * rhs.mat_};
}

SpElement SpElement::inverse() const { return {space_, *mat_.inverse()}; }

bool SpElement::is_identity() const { return mat_ == FpMatrix::identity(field(), space_.dim()); }

FpMatrix SpElement::minus_one() const { return mat_ - FpMatrix::identity(field(), space_.dim()); }

// ---------------------------------------------------------------------------

std::uint64_t lagrangian_count(int p, std::size_t half_dim) {
    std::uint64_t count = 1;
    std::uint64_t pi = 1;
    for (std::size_t i = 1; i <= half_dim; ++i) {
        pi = checked_mul(pi, static_cast<std::uint64_t>(p));
        count = checked_mul(count, pi + 1);
    }
    return count;
}

std::uint64_t sp_order(int p, std::size_t half_dim) {
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < half_dim * half_dim; ++i) order = checked_mul(order, static_cast<std::uint64_t>(p));
    std::uint64_t p2i = 1;
    for (std::size_t i = 1; i <= half_dim; ++i) {
        p2i = checked_mul(p2i, static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(p));
        order = checked_mul(order, p2i - 1);
    }
    return order;
}

void for_each_vector(const PrimeField& field, std::size_t d, const std::function<void(const FpVector&)>& fn) {
    FpVector v(d, 0);
    const int p = field.p();
    while (true) {
        fn(v);
        std::size_t k = d;
        while (k > 0) {
            --k;
            if (++v[k] < p) break;
            v[k] = 0;
            if (k == 0) return;
        }
        if (d == 0) return;
    }
}

std::vector<Lagrangian> all_lagrangians(const SymplecticSpace& space, std::uint64_t cap) {
    const std::uint64_t expected = lagrangian_count(space.field().p(), space.half_dim());
    if (expected > cap) {
        throw EnumerationTooLarge("Lagrangian Grassmannian has " + std::to_string(expected) +
                                  " elements, above the cap of " + std::to_string(cap));
    }
    const PrimeField& f = space.field();
    const std::size_t d = space.dim();
    std::set<Subspace> level{Subspace::zero(f, d)};
    for (std::size_t k = 0; k < space.half_dim(); ++k) {
        std::set<Subspace> next;
        for (const auto& s : level) {
            const auto rows = s.basis().row_vectors();
            for_each_vector(f, d, [&](const FpVector& v) {
                for (const auto& r : rows)
                    if (space.pair(r, v) != 0) return;
                if (s.contains(v)) return;
                auto extended = rows;
                extended.push_back(v);
                next.insert(Subspace::span(f, d, extended));
            });
        }
        level = std::move(next);
    }
    std::vector<Lagrangian> out;
    out.reserve(level.size());
    for (const auto& s : level) out.emplace_back(space, s);
    return out;
}

FpMatrix symplectic_basis(const SymplecticSpace& space) {
    const PrimeField& f = space.field();
    std::vector<FpVector> w = FpMatrix::identity(f, space.dim()).row_vectors();
    std::vector<FpVector> us;
    std::vector<FpVector> vs;
    while (!w.empty()) {
        const FpVector u = w.front();
        std::size_t j = 1;
        while (space.pair(u, w[j]) == 0) ++j;
        const FpVector v = vec_scale(f, f.inv(space.pair(u, w[j])), w[j]);
        us.push_back(u);
        vs.push_back(v);
        w = project_out(space, u, v, w);
    }
    return columns_to_matrix(f, space.dim(), us, vs);
}

std::vector<SpElement> all_sp(const SymplecticSpace& space, std::uint64_t cap) {
    const std::uint64_t expected = sp_order(space.field().p(), space.half_dim());
    if (expected > cap) {
        throw EnumerationTooLarge("Sp(V) has " + std::to_string(expected) + " elements, above the cap of " +
                                  std::to_string(cap));
    }
    const PrimeField& f = space.field();
    const std::size_t d = space.dim();
    const FpMatrix base_inv = *symplectic_basis(space).inverse();
    std::vector<SpElement> out;
    out.reserve(expected);
    std::vector<FpVector> us;
    std::vector<FpVector> vs;

    std::function<void(const std::vector<FpVector>&)> recurse = [&](const std::vector<FpVector>& w) {
        if (w.empty()) {
            out.emplace_back(space, columns_to_matrix(f, d, us, vs) * base_inv);
            return;
        }
        const FpMatrix wm = FpMatrix::from_rows(f, d, w);
        for_each_vector(f, w.size(), [&](const FpVector& cu) {
            if (is_zero(cu)) return;
            const FpVector u = combine(wm, cu);
            for_each_vector(f, w.size(), [&](const FpVector& cv) {
                const FpVector v = combine(wm, cv);
                if (space.pair(u, v) != 1) return;
                us.push_back(u);
                vs.push_back(v);
                recurse(project_out(space, u, v, w));
                us.pop_back();
                vs.pop_back();
            });
        });
    };
    recurse(FpMatrix::identity(f, d).row_vectors());
    return out;
}

SpElement random_sp(const SymplecticSpace& space, std::uint64_t seed) {
    Rng rng(seed);
    return random_sp(space, rng);
}

SpElement random_sp(const SymplecticSpace& space, Rng& rng) {
    const PrimeField& f = space.field();
    const std::size_t d = space.dim();
    const int p = f.p();
    std::vector<FpVector> w = FpMatrix::identity(f, d).row_vectors();
    std::vector<FpVector> us;
    std::vector<FpVector> vs;
    auto sample = [&](const FpMatrix& wm) {
        FpVector c(wm.rows());
        for (auto& x : c) x = rng.residue(p);
        return combine(wm, c);
    };
    while (!w.empty()) {
        const FpMatrix wm = FpMatrix::from_rows(f, d, w);
        FpVector u;
        do {
            u = sample(wm);
        } while (is_zero(u));
        FpVector v;
        int pairing = 0;
        do {
            v = sample(wm);
            pairing = space.pair(u, v);
        } while (pairing == 0);
        v = vec_scale(f, f.inv(pairing), v);
        us.push_back(u);
        vs.push_back(v);
        w = project_out(space, u, v, w);
    }
    const FpMatrix base_inv = *symplectic_basis(space).inverse();
    return {space, columns_to_matrix(f, d, us, vs) * base_inv};
}

Lagrangian random_lagrangian(const SymplecticSpace& space, Rng& rng) {
    return random_sp(space, rng).apply(Lagrangian::standard(space));
}

// ---------------------------------------------------------------------------

Lagrangian graph(const SpElement& g) {
    const SymplecticSpace dbl = doubled(g.space());
    const std::size_t d = g.space().dim();
    FpMatrix rows(g.field(), d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        rows.set(i, i, 1);
        for (std::size_t r = 0; r < d; ++r) rows.set(i, d + r, g.matrix()(r, i));
    }
    return {dbl, Subspace::span(rows)};
}

Lagrangian diagonal(const SymplecticSpace& v) { return graph(SpElement::identity(v)); }

SpElement embed_pair(const SpElement& g) {
    const SymplecticSpace dbl = doubled(g.space());
    return {dbl, FpMatrix::identity(g.field(), g.space().dim()).block_diag(g.matrix())};
}

Lagrangian doubled_lagrangian(const Lagrangian& l) {
    return direct_sum(Lagrangian(l.space().negated(), l.sub()), l);
}

Subspace fixed_space(const SpElement& g) { return kernel(g.minus_one()); }

SquareClass sigma_det(const SpElement& g) {
    const Subspace ker = fixed_space(g);
    const auto free = ker.non_pivots();
    FpMatrix complement(g.field(), free.size(), g.space().dim());
    for (std::size_t i = 0; i < free.size(); ++i) complement.set(i, free[i], 1);
    return sigma_det(g, complement);
}

SquareClass sigma_det(const SpElement& g, const FpMatrix& complement) {
    const PrimeField& f = g.field();
    const std::size_t k = complement.rows();
    if (k == 0) return SquareClass::one(f);
    const FpMatrix gm1 = g.minus_one();
    FpMatrix m(f, k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const FpVector image_i = gm1.apply(complement.row(i));
        for (std::size_t j = 0; j < k; ++j) m.set(i, j, g.space().pair(image_i, complement.row(j)));
    }
    return {f, m.determinant()};
}

} // namespace weilchar
