#pragma once

/**
 * @file maslov.hpp
 * @brief Oriented Lagrangians, the discriminant pairing, and the Maslov index
 *        of a tuple of Lagrangians as an explicit quadratic space.
 *
 * For a tuple (l_1, ..., l_k) the representative lives on
 *   T = {(x_1, ..., x_k) in l_1 x ... x l_k : x_1 + ... + x_k = 0}
 * with Q(x) = sum_{i<j} <x_j, x_i>. For k = 3 this is Q(x, y, z) = <x, z>.
 */

#include "weilchar/char_values.hpp"
#include "weilchar/quadform.hpp"
#include "weilchar/symplectic.hpp"

#include <span>
#include <vector>

namespace weilchar {

/// A Lagrangian with an ordered basis (rows), up to square determinant.
class Orientation {
public:
    /// Throws DimensionMismatch unless the rows of `basis` form a basis of `lag`.
    Orientation(Lagrangian lag, FpMatrix basis);
    /// Oriented by the canonical basis of the subspace.
    explicit Orientation(Lagrangian lag);

    [[nodiscard]] const Lagrangian& lagrangian() const noexcept { return lag_; }
    [[nodiscard]] const FpMatrix& basis() const noexcept { return basis_; }

    /// g l with basis g b_1, ..., g b_n.
    [[nodiscard]] Orientation transported(const SpElement& g) const;
    /// The first basis vector multiplied by s.
    [[nodiscard]] Orientation rescaled(int s) const;

    /// det of the change of basis from `other` to this; both must orient the same Lagrangian.
    [[nodiscard]] int relative_det(const Orientation& other) const;

private:
    Lagrangian lag_;
    FpMatrix basis_;
};

/// O_{l1,l2}: the discriminant of the pairing l1/(l1 n l2) x l2/(l1 n l2) -> F
/// relative to the orientations, as a square class.
SquareClass o_pairing(const Orientation& o1, const Orientation& o2);

/// Q((x, y, z)) = <x, z> on {x + y + z = 0}.
QuadraticSpace kashiwara_form(const Lagrangian& l1, const Lagrangian& l2, const Lagrangian& l3);

/// Q(x) = sum_{i<j} <x_j, x_i> on {sum x_i = 0}; agrees with kashiwara_form for three entries.
QuadraticSpace polygon_form(std::span<const Lagrangian> ls);

struct MaslovClass {
    QuadraticSpace form;
    WittInvariants inv;
};

/// tau(l_1, ..., l_k) for k >= 2. Throws ArityError for k < 2.
MaslovClass maslov(const AdditiveCharacter& c, std::span<const Lagrangian> ls);
MaslovClass maslov(const AdditiveCharacter& c, std::initializer_list<Lagrangian> ls);

/// Witt sum tau(l1, l2, l3) + tau(l1, l3, ..., lk), applied recursively.
MaslovClass maslov_chain(const AdditiveCharacter& c, std::span<const Lagrangian> ls);

/// gamma(tau(l_1, ..., l_k)).
Complex gamma_tau(const AdditiveCharacter& c, std::span<const Lagrangian> ls);
Complex gamma_tau(const AdditiveCharacter& c, std::initializer_list<Lagrangian> ls);

struct RankDisc {
    std::size_t rank;
    SquareClass disc;
};

/// rank = (k - 2) n - sum dim(l_i n l_{i+1}) + 2 dim(n_i l_i),
/// disc = (-1)^{n + dim(n_i l_i)} prod O_{l_i, l_{i+1}}, indices cyclic.
RankDisc predicted_rank_disc(std::span<const Orientation> os);

/// m(l1, l2) = gamma(1)^{n - dim(l1 n l2) - 1} gamma(O_{l1,l2}).
Complex m_pair(const Orientation& o1, const Orientation& o2, const AdditiveCharacter& c);

} // namespace weilchar
