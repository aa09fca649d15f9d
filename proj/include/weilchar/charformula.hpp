#pragma once

/**
 * @file charformula.hpp
 * @brief Closed-form character values and the quadratic spaces behind them.
 *
 * For g in Sp(V) and a Lagrangian l:
 *   S-hat  = {x in V/l : (g - 1) x in g l + l},      q(x, y)  = <a + b, y>
 *            where (g - 1) x = g a + b mod (g - 1) l with a, b in l;
 *   S'-hat = l n (g - 1) V,                           q'(a, b) = <a, y>
 *            where b = (g - 1) y.
 * Phi(x) = a + b carries S-hat to S'-hat.
 */

#include "weilchar/char_values.hpp"
#include "weilchar/metaplectic.hpp"
#include "weilchar/quadform.hpp"
#include "weilchar/report.hpp"
#include "weilchar/symplectic.hpp"

#include <optional>
#include <string>

namespace weilchar {

struct SgData {
    SpElement g;
    Lagrangian l;
    /// S-hat, in V/l coordinates.
    Subspace hat_s;
    /// Canonical lifts to V of the basis of hat_s, as rows.
    FpMatrix hat_s_lifts;
    /// S'-hat, a subspace of l.
    Subspace hat_s_prime;
    /// Gram matrices of q and q' on the chosen bases, as computed (not forced symmetric).
    FpMatrix q_gram;
    FpMatrix q_prime_gram;
    /// Phi applied to the basis of hat_s, as rows.
    FpMatrix phi;

    /// Throws DimensionMismatch if the computed Gram matrix is not symmetric.
    [[nodiscard]] QuadraticSpace q() const { return QuadraticSpace(q_gram); }
    [[nodiscard]] QuadraticSpace q_prime() const { return QuadraticSpace(q_prime_gram); }
    [[nodiscard]] std::size_t ker_q() const { return q_gram.rows() - q_gram.rank(); }
    [[nodiscard]] std::size_t ker_q_prime() const { return q_prime_gram.rows() - q_prime_gram.rank(); }
};

SgData build_sg(const SpElement& g, const Lagrangian& l);

/// q(x, x) for x given in V/l coordinates; nullopt unless x lies in S-hat.
std::optional<int> sg_q_diagonal(const SgData& sg, const FpVector& coords);
/// q'(a, b) for a, b in S'-hat by solving b = (g - 1) y; nullopt if b is outside (g - 1) V.
std::optional<int> sg_q_prime(const SgData& sg, const FpVector& a, const FpVector& b);

/// p^{dim ker(g-1)/2} gamma(1)^{dim V - dim ker(g-1) - 1} gamma(det sigma_g).
Complex theorem_1a(const AdditiveCharacter& c, const SpElement& g);
/// p^{dim ker(g-1)/2} gamma(1)^{dim V - dim ker(g-1)} chi(det sigma_g).
Complex theorem_1a_chi(const AdditiveCharacter& c, const SpElement& g);
/// p^{dim ker(g-1)/2} theta(e, l).
Complex theorem_2b(const MpElement& e, const Lagrangian& l);
Complex theorem_2b(const MpElement& e);

/// The SL_2 case split by trace and off-diagonal entries.
struct Sl2Case {
    /// "i", "ii", "iii" or "iv".
    std::string label;
    SquareClass det_sigma;
    Complex trace;
};
/// Requires dim V = 2.
Sl2Case sl2_case(const AdditiveCharacter& c, const SpElement& g);

/// Gram matrices of q and q' are symmetric as field matrices.
CheckReport symmetry_check(const SgData& sg);
/// q'(Phi x, Phi y) = q(x, y) on the basis of S-hat, Phi lands in S'-hat, and the
/// nondegenerate parts have equal rank and discriminant.
CheckReport phi_isometry_check(const SgData& sg);
/// q and q' have the Witt invariants of tau(graph g, diagonal, l + l), with equal rank and discriminant.
CheckReport maslov_class_check(const AdditiveCharacter& c, const SgData& sg);
/// rank q = n - dim ker(g-1) - dim(gl n l) + 2 dim(l n ker(g-1)),
/// disc q = (-1)^{dim l n (g-1)l} O_{gl,l} det sigma_g.
CheckReport rank_disc_check(const SgData& sg);
/// dim ker q = dim ker(g-1) - dim(l n ker(g-1)), together with the rank identity for q and q'.
CheckReport kernel_dim_check(const SgData& sg);
/// For invertible g - 1: q'(a, b) = <a, (g-1)^{-1} b> on a basis of l.
CheckReport invertible_q_prime_check(const SgData& sg);
/// q'(a, a) = -<a, (g^{-1} - 1)^{-1} a> for the basis of l and `samples` random a.
/// Throws SingularGMinusOne if det(g - 1) = 0.
CheckReport maktouf_identity_check(const SgData& sg, Rng& rng, std::size_t samples = 8);

/// All of the above that apply to (g, l).
CheckReport structural_suite(const AdditiveCharacter& c, const SpElement& g, const Lagrangian& l, Rng& rng);

} // namespace weilchar
