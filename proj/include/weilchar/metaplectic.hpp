#pragma once

/**
 * @file metaplectic.hpp
 * @brief Mp(V) as pairs (g, t) with t a function on Lagrangians.
 *
 * An element stores t only at one base Lagrangian l0; every other value is
 * recovered from t(l') = t(l0) gamma(tau(l0, g l0, g l', l')).
 */

#include "weilchar/char_values.hpp"
#include "weilchar/maslov.hpp"
#include "weilchar/symplectic.hpp"

namespace weilchar {

/// m(g l, l), with g l oriented by the image of the canonical basis of l.
Complex m_g(const AdditiveCharacter& c, const SpElement& g, const Lagrangian& l);
/// Same, starting from an explicit orientation of l.
Complex m_g(const AdditiveCharacter& c, const SpElement& g, const Orientation& o);

/// c_{g,h}(l) = gamma(tau(l, g l, g h l)).
Complex cocycle(const AdditiveCharacter& c, const SpElement& g, const SpElement& h, const Lagrangian& l);

class MpElement {
public:
    /// Throws InvalidLift unless t0^2 = m_g(base)^2, DimensionMismatch if base is in another space.
    MpElement(AdditiveCharacter c, SpElement g, Lagrangian base, Complex t0);

    /// (g, m_g) based at the standard Lagrangian.
    static MpElement split(const AdditiveCharacter& c, const SpElement& g);
    /// split(g) for sign = +1, its negative for sign = -1.
    static MpElement lift(const AdditiveCharacter& c, const SpElement& g, int sign);
    static MpElement identity(const AdditiveCharacter& c, const SymplecticSpace& space);

    [[nodiscard]] const AdditiveCharacter& character() const noexcept { return c_; }
    [[nodiscard]] const SpElement& g() const noexcept { return g_; }
    [[nodiscard]] const Lagrangian& base() const noexcept { return base_; }
    [[nodiscard]] Complex t0() const noexcept { return t0_; }
    [[nodiscard]] const SymplecticSpace& space() const noexcept { return g_.space(); }

    /// t(l').
    [[nodiscard]] Complex evaluate(const Lagrangian& l) const;
    /// The same element stored relative to another base.
    [[nodiscard]] MpElement rebased(const Lagrangian& l) const;

    [[nodiscard]] MpElement operator*(const MpElement& rhs) const;
    [[nodiscard]] MpElement inverse() const;
    /// (g, -t).
    [[nodiscard]] MpElement negated() const;

    /// Equal g and equal t at this element's base.
    [[nodiscard]] bool approx_equal(const MpElement& other, double eps = kDefaultTolerance) const;

private:
    struct Unchecked {};
    MpElement(Unchecked, AdditiveCharacter c, SpElement g, Lagrangian base, Complex t0)
        : c_(std::move(c)), g_(std::move(g)), base_(std::move(base)), t0_(t0) {}

    friend MpElement mp_from_product(const MpElement&, const MpElement&, Complex);

    AdditiveCharacter c_;
    SpElement g_;
    Lagrangian base_;
    Complex t0_;
};

MpElement mp_mul(const MpElement& a, const MpElement& b);
/// Product with the cocycle multiplied by `twist`; twist = 1 is mp_mul. Used for fault injection.
MpElement mp_from_product(const MpElement& a, const MpElement& b, Complex twist);
MpElement mp_split(const AdditiveCharacter& c, const SpElement& g);

/// ((1, g), f_g(t)) in Mp(V-bar + V), based at l + l with value t(l).
MpElement mp_embed(const MpElement& e);
MpElement mp_embed(const MpElement& e, const Lagrangian& seed);

/// t(l) gamma(tau(graph g, diagonal, l + l)).
Complex theta(const MpElement& e, const Lagrangian& l);
/// Value of mp_embed(e) at the diagonal.
Complex ev_diagonal(const MpElement& e);

} // namespace weilchar
