#pragma once

/**
 * @file quadform.hpp
 * @brief Symmetric bilinear forms over F_p, possibly degenerate, and their
 *        Witt invariants.
 *
 * A form is held as its full Gram matrix; the nondegenerate part is produced
 * on demand. Over F_p a Witt class is determined by the parity of the rank
 * together with the signed discriminant, and gamma is a character on classes.
 */

#include "weilchar/char_values.hpp"
#include "weilchar/gf_linear.hpp"

#include <cstdint>
#include <vector>

namespace weilchar {

class QuadraticSpace {
public:
    /// Throws DimensionMismatch unless `gram` is square and symmetric.
    explicit QuadraticSpace(FpMatrix gram);

    static QuadraticSpace zero(const PrimeField& field, std::size_t dim = 0);
    static QuadraticSpace diagonal(const PrimeField& field, const std::vector<int>& entries);
    static QuadraticSpace hyperbolic_plane(const PrimeField& field);

    [[nodiscard]] const PrimeField& field() const noexcept { return gram_.field(); }
    [[nodiscard]] std::size_t dim() const noexcept { return gram_.rows(); }
    [[nodiscard]] const FpMatrix& gram() const noexcept { return gram_; }
    [[nodiscard]] std::size_t rank() const { return gram_.rank(); }

    [[nodiscard]] int bilinear(const FpVector& x, const FpVector& y) const { return gram_.pair(x, y); }
    /// q(x, x).
    [[nodiscard]] int value(const FpVector& x) const { return gram_.pair(x, x); }

    /// Pullback along the rows of `basis`: Gram matrix basis * G * basis^T.
    [[nodiscard]] QuadraticSpace restrict_to(const FpMatrix& basis) const;

    friend bool operator==(const QuadraticSpace&, const QuadraticSpace&) = default;

private:
    FpMatrix gram_;
};

Subspace radical(const QuadraticSpace& q);
/// The form induced on dim / radical, realized on the standard complement of the radical.
QuadraticSpace nondegenerate_quotient(const QuadraticSpace& q);

/// P with P G P^T = diag(entries, 0, ..., 0).
struct Diagonalization {
    FpMatrix transform;
    std::vector<int> entries;
};
Diagonalization diagonalize_with_transform(const QuadraticSpace& q);
/// Nonzero diagonal entries of a congruent diagonal form; one per unit of rank.
std::vector<int> diagonalize(const QuadraticSpace& q);

/// Discriminant of the nondegenerate part (class of 1 for rank 0).
SquareClass discriminant(const QuadraticSpace& q);
/// (-1)^{r(r-1)/2} times the discriminant, with r the rank.
SquareClass signed_discriminant(const QuadraticSpace& q);

/// gamma(q) as the product of gamma over a diagonalization.
Complex gamma_form(const AdditiveCharacter& c, const QuadraticSpace& q);

inline constexpr std::uint64_t kSummationCap = 1000000;
/// p^{-rank/2 - dim radical} sum_x psi(q(x,x)/2), summed over every vector.
/// Throws EnumerationTooLarge if p^dim exceeds `cap`.
Complex gamma_by_summation(const AdditiveCharacter& c, const QuadraticSpace& q, std::uint64_t cap = kSummationCap);

/// gamma(1)^{rank - 1} gamma(disc), or 1 for rank 0.
Complex gamma_from_rank_disc(const AdditiveCharacter& c, std::size_t rank, const SquareClass& disc);

struct WittInvariants {
    std::size_t rank;
    SquareClass disc;
    Complex gamma;
};

WittInvariants witt_invariants(const AdditiveCharacter& c, const QuadraticSpace& q);
QuadraticSpace witt_add(const QuadraticSpace& a, const QuadraticSpace& b);
QuadraticSpace witt_neg(const QuadraticSpace& q);

/// Same Witt class: rank parity and signed discriminant agree (gamma is checked as well).
bool witt_equal(const WittInvariants& a, const WittInvariants& b, double eps = kDefaultTolerance);

} // namespace weilchar
