#include "weilchar/metaplectic.hpp"

#include "weilchar/error.hpp"

namespace weilchar {

Complex m_g(const AdditiveCharacter& c, const SpElement& g, const Lagrangian& l) {
    return m_g(c, g, Orientation(l));
}

Complex m_g(const AdditiveCharacter& c, const SpElement& g, const Orientation& o) {
    return m_pair(o.transported(g), o, c);
}

Complex cocycle(const AdditiveCharacter& c, const SpElement& g, const SpElement& h, const Lagrangian& l) {
    return gamma_tau(c, {l, g.apply(l), (g * h).apply(l)});
}

MpElement::MpElement(AdditiveCharacter c, SpElement g, Lagrangian base, Complex t0)
    : c_(std::move(c)), g_(std::move(g)), base_(std::move(base)), t0_(t0) {
    if (!(base_.space() == g_.space())) throw DimensionMismatch("base Lagrangian lives in another space");
    const Complex m = m_g(c_, g_, base_);
    if (!approx_eq(t0_ * t0_, m * m)) throw InvalidLift("t(l)^2 must equal m_g(l)^2");
}

MpElement MpElement::split(const AdditiveCharacter& c, const SpElement& g) {
    const Lagrangian l0 = Lagrangian::standard(g.space());
    const Complex m = m_g(c, g, l0);
    return {Unchecked{}, c, g, l0, m};
}

MpElement MpElement::lift(const AdditiveCharacter& c, const SpElement& g, int sign) {
    MpElement e = split(c, g);
    return sign < 0 ? e.negated() : e;
}

MpElement MpElement::identity(const AdditiveCharacter& c, const SymplecticSpace& space) {
    return {Unchecked{}, c, SpElement::identity(space), Lagrangian::standard(space), 1.0};
}

Complex MpElement::evaluate(const Lagrangian& l) const {
    if (l == base_) return t0_;
    return t0_ * gamma_tau(c_, {base_, g_.apply(base_), g_.apply(l), l});
}

MpElement MpElement::rebased(const Lagrangian& l) const { return {Unchecked{}, c_, g_, l, evaluate(l)}; }

MpElement mp_from_product(const MpElement& a, const MpElement& b, Complex twist) {
    if (!(a.space() == b.space())) throw DimensionMismatch("product of elements over different spaces");
    const Lagrangian& l0 = a.base();
    const Complex t = a.t0() * b.evaluate(l0) * cocycle(a.character(), a.g(), b.g(), l0) * twist;
    return {MpElement::Unchecked{}, a.character(), a.g() * b.g(), l0, t};
}

MpElement MpElement::operator*(const MpElement& rhs) const { return mp_from_product(*this, rhs, 1.0); }

MpElement MpElement::inverse() const {
    const SpElement gi = g_.inverse();
    const Complex c = cocycle(c_, g_, gi, base_);
    return {Unchecked{}, c_, gi, base_, 1.0 / (t0_ * c)};
}

MpElement MpElement::negated() const { return {Unchecked{}, c_, g_, base_, -t0_}; }

bool MpElement::approx_equal(const MpElement& other, double eps) const {
    return g_ == other.g_ && approx_eq(t0_, other.evaluate(base_), 1.0, eps);
}

MpElement mp_mul(const MpElement& a, const MpElement& b) { return a * b; }

MpElement mp_split(const AdditiveCharacter& c, const SpElement& g) { return MpElement::split(c, g); }

MpElement mp_embed(const MpElement& e) { return mp_embed(e, Lagrangian::standard(e.space())); }

MpElement mp_embed(const MpElement& e, const Lagrangian& seed) {
    return {e.character(), embed_pair(e.g()), doubled_lagrangian(seed), e.evaluate(seed)};
}

Complex theta(const MpElement& e, const Lagrangian& l) {
    return e.evaluate(l) * gamma_tau(e.character(), {graph(e.g()), diagonal(e.space()), doubled_lagrangian(l)});
}

Complex ev_diagonal(const MpElement& e) { return mp_embed(e).evaluate(diagonal(e.space())); }

} // namespace weilchar
