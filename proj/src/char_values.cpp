#include "weilchar/char_values.hpp"

#include "weilchar/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace weilchar {

bool approx_eq(Complex x, Complex y, double scale, double eps) {
    return std::abs(x - y) <= eps * std::max(1.0, scale);
}

SquareClass::SquareClass(const PrimeField& field, int a) : p_(field.p()), rep_(1) {
    const int l = field.legendre(a);
    if (l == 0) throw ZeroFormClass();
    rep_ = l == 1 ? 1 : field.nonsquare();
}

SquareClass SquareClass::operator*(const SquareClass& rhs) const {
    if (p_ != rhs.p_) throw DimensionMismatch("square classes of different fields");
    const PrimeField field(p_);
    return {field, field.mul(rep_, rhs.rep_)};
}

AdditiveCharacter::AdditiveCharacter(const PrimeField& field, int scale)
    : field_(field), scale_(field.reduce(scale)), table_(static_cast<std::size_t>(field.p())) {
    if (scale_ == 0) throw InvalidModulus("additive character scale must be nonzero");
    const int p = field_.p();
    for (int x = 0; x < p; ++x) {
        const int k = field_.mul(scale_, x);
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p);
        table_[static_cast<std::size_t>(x)] = std::polar(1.0, angle);
    }
    gamma_one_ = gamma(1);
}

Complex AdditiveCharacter::gamma(int a) const {
    a = field_.reduce(a);
    if (a == 0) throw ZeroFormClass();
    const int p = field_.p();
    const int half_a = field_.mul(field_.half(), a);
    Complex sum = 0.0;
    for (int x = 0; x < p; ++x) sum += psi(field_.mul(half_a, field_.mul(x, x)));
    return sum / std::sqrt(static_cast<double>(p));
}

Complex AdditiveCharacter::chi(int a) const { return gamma(-1) * gamma(a); }

Complex AdditiveCharacter::gamma_one_pow(long long k) const {
    // gamma(1) is an 8th root of unity for p odd, so reduce the exponent.
    Complex base = k < 0 ? std::conj(gamma_one_) : gamma_one_;
    long long e = k < 0 ? -k : k;
    e %= 8;
    Complex out = 1.0;
    for (long long i = 0; i < e; ++i) out *= base;
    return out;
}

Complex psi(const AdditiveCharacter& c, const FpElement& x) { return c.psi(x.value()); }
Complex gamma_scalar(const AdditiveCharacter& c, const FpElement& a) { return c.gamma(a.value()); }
Complex chi(const AdditiveCharacter& c, const FpElement& a) { return c.chi(a.value()); }

} // namespace weilchar
