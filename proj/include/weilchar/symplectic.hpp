#pragma once

/**
 * @file symplectic.hpp
 * @brief Symplectic spaces over F_p, their Lagrangians and Sp(V).
 *
 * The standard space of half-dimension n is F_p^{2n} with Gram matrix
 * J = [[0, I], [-I, 0]], so <e_i, e_{n+i}> = 1. Other spaces arise as direct
 * sums and sign flips of standard ones; the doubled space used for graphs is
 * V-bar + V with Gram diag(-J, J).
 *
 * Every space carries a distinguished Lagrangian (span of e_1..e_n for the
 * standard space, direct sums of those otherwise).
 */

#include "weilchar/char_values.hpp"
#include "weilchar/gf_linear.hpp"
#include "weilchar/random.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace weilchar {

class SymplecticSpace {
public:
    static SymplecticSpace standard(const PrimeField& field, std::size_t half_dim);
    /// Throws DimensionMismatch unless `gram` is antisymmetric and invertible,
    /// NotLagrangian unless `standard_lagrangian` spans a Lagrangian.
    static SymplecticSpace from_gram(const FpMatrix& gram, const FpMatrix& standard_lagrangian);

    [[nodiscard]] const PrimeField& field() const noexcept { return data_->gram.field(); }
    [[nodiscard]] std::size_t dim() const noexcept { return data_->gram.rows(); }
    [[nodiscard]] std::size_t half_dim() const noexcept { return dim() / 2; }
    [[nodiscard]] const FpMatrix& gram() const noexcept { return data_->gram; }
    [[nodiscard]] const Subspace& standard_lagrangian_subspace() const noexcept { return data_->standard; }

    /// <u, v> = u^T gram v.
    [[nodiscard]] int pair(const FpVector& u, const FpVector& v) const { return data_->gram.pair(u, v); }

    /// The same space with the opposite form.
    [[nodiscard]] SymplecticSpace negated() const;

    friend bool operator==(const SymplecticSpace& a, const SymplecticSpace& b) {
        return a.data_ == b.data_ || (a.data_->gram == b.data_->gram && a.data_->standard == b.data_->standard);
    }

private:
    struct Data {
        FpMatrix gram;
        Subspace standard;
    };
    explicit SymplecticSpace(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    std::shared_ptr<const Data> data_;
};

SymplecticSpace direct_sum(const SymplecticSpace& a, const SymplecticSpace& b);
/// V-bar + V.
SymplecticSpace doubled(const SymplecticSpace& v);

/// Maximal isotropic subspace of a symplectic space.
class Lagrangian {
public:
    /// Throws NotLagrangian if `sub` is not isotropic of half dimension.
    Lagrangian(SymplecticSpace space, Subspace sub);

    static Lagrangian standard(const SymplecticSpace& space);
    static bool is_lagrangian(const SymplecticSpace& space, const Subspace& sub);

    [[nodiscard]] const SymplecticSpace& space() const noexcept { return space_; }
    [[nodiscard]] const Subspace& sub() const noexcept { return sub_; }
    [[nodiscard]] std::size_t dim() const noexcept { return sub_.dim(); }
    [[nodiscard]] const FpMatrix& basis() const noexcept { return sub_.basis(); }

    friend bool operator==(const Lagrangian& a, const Lagrangian& b) { return a.sub_ == b.sub_; }
    friend std::strong_ordering operator<=>(const Lagrangian& a, const Lagrangian& b) { return a.sub_ <=> b.sub_; }

private:
    SymplecticSpace space_;
    Subspace sub_;
};

Lagrangian direct_sum(const Lagrangian& a, const Lagrangian& b);

bool is_symplectic(const SymplecticSpace& space, const FpMatrix& m);

/// Element of Sp(V), acting on column vectors.
class SpElement {
public:
    /// Throws NotSymplectic unless m^T gram m = gram, DimensionMismatch on shape errors.
    SpElement(SymplecticSpace space, FpMatrix m);

    static SpElement identity(const SymplecticSpace& space);

    [[nodiscard]] const SymplecticSpace& space() const noexcept { return space_; }
    [[nodiscard]] const FpMatrix& matrix() const noexcept { return mat_; }
    [[nodiscard]] const PrimeField& field() const noexcept { return mat_.field(); }

    [[nodiscard]] FpVector apply(const FpVector& v) const { return mat_.apply(v); }
    [[nodiscard]] Lagrangian apply(const Lagrangian& l) const;
    /// Images of the rows of `rows`, as rows.
    [[nodiscard]] FpMatrix apply_rows(const FpMatrix& rows) const;

    [[nodiscard]] SpElement operator*(const SpElement& rhs) const;
    [[nodiscard]] SpElement inverse() const;
    [[nodiscard]] bool is_identity() const;
    /// g - 1 as a plain matrix.
    [[nodiscard]] FpMatrix minus_one() const;

    friend bool operator==(const SpElement& a, const SpElement& b) { return a.mat_ == b.mat_; }

private:
    SymplecticSpace space_;
    FpMatrix mat_;
};

/// prod_{i=1..n} (p^i + 1), the size of the Lagrangian Grassmannian.
std::uint64_t lagrangian_count(int p, std::size_t half_dim);
/// |Sp_{2n}(F_p)| = p^{n^2} prod_{i=1..n} (p^{2i} - 1).
std::uint64_t sp_order(int p, std::size_t half_dim);

/// Every Lagrangian of `space`, sorted canonically.
/// Throws EnumerationTooLarge if the expected count exceeds `cap`.
std::vector<Lagrangian> all_lagrangians(const SymplecticSpace& space, std::uint64_t cap = 100000);

/// Every element of Sp(V). Throws EnumerationTooLarge if |Sp(V)| exceeds `cap`.
std::vector<SpElement> all_sp(const SymplecticSpace& space, std::uint64_t cap = 100000);

/// Uniform sample of Sp(V), deterministic in `seed`.
SpElement random_sp(const SymplecticSpace& space, std::uint64_t seed);
SpElement random_sp(const SymplecticSpace& space, Rng& rng);
Lagrangian random_lagrangian(const SymplecticSpace& space, Rng& rng);

/// Columns (e_1..e_n, f_1..f_n) of a basis with <e_i, f_j> = delta_ij and the
/// other pairings zero; found by symplectic Gram-Schmidt.
FpMatrix symplectic_basis(const SymplecticSpace& space);

/// Calls `fn` on every vector of F_p^d, in lexicographic order.
void for_each_vector(const PrimeField& field, std::size_t d, const std::function<void(const FpVector&)>& fn);

/// Graph {(x, g x)} of g inside V-bar + V.
Lagrangian graph(const SpElement& g);
/// The diagonal, i.e. graph(1).
Lagrangian diagonal(const SymplecticSpace& v);
/// (1, g) acting on V-bar + V.
SpElement embed_pair(const SpElement& g);
/// l + l inside V-bar + V.
Lagrangian doubled_lagrangian(const Lagrangian& l);

/// ker(g - 1).
Subspace fixed_space(const SpElement& g);

/// Discriminant of (v, w) -> <(g - 1) v, w> on V / ker(g - 1), using the span
/// of standard basis vectors at non-pivot positions of ker(g - 1) as complement.
SquareClass sigma_det(const SpElement& g);
/// Same discriminant computed on an explicit complement of ker(g - 1), given as rows.
SquareClass sigma_det(const SpElement& g, const FpMatrix& complement);

} // namespace weilchar
