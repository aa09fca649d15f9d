#pragma once

#include "weilchar/gf_linear.hpp"

#include <complex>
#include <vector>

namespace weilchar {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-8;

/// |x - y| <= eps * max(1, scale).
bool approx_eq(Complex x, Complex y, double scale = 1.0, double eps = kDefaultTolerance);

/// Square class in F_p^x / (F_p^x)^2, stored as its canonical representative
/// (1 for squares, the smallest nonsquare otherwise).
class SquareClass {
public:
    /// Throws ZeroFormClass for a == 0.
    SquareClass(const PrimeField& field, int a);
    static SquareClass one(const PrimeField& field) { return {field, 1}; }

    [[nodiscard]] int modulus() const noexcept { return p_; }
    [[nodiscard]] int rep() const noexcept { return rep_; }
    [[nodiscard]] bool is_square() const noexcept { return rep_ == 1; }
    [[nodiscard]] int sign() const noexcept { return is_square() ? 1 : -1; }

    SquareClass operator*(const SquareClass& rhs) const;

    friend bool operator==(const SquareClass&, const SquareClass&) = default;

private:
    SquareClass(int p, int rep) : p_(p), rep_(rep) {}

    int p_;
    int rep_;
};

/// psi(x) = exp(2 pi i * lift(scale * x) / p).
class AdditiveCharacter {
public:
    explicit AdditiveCharacter(const PrimeField& field, int scale = 1);

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] int scale() const noexcept { return scale_; }

    [[nodiscard]] Complex psi(int x) const { return table_[static_cast<std::size_t>(field_.reduce(x))]; }

    /// Weil index of the form a x^2, by the normalized Gauss sum
    /// p^{-1/2} sum_x psi(x^2 a / 2). Throws ZeroFormClass for a == 0.
    [[nodiscard]] Complex gamma(int a) const;
    [[nodiscard]] Complex gamma(const SquareClass& c) const { return gamma(c.rep()); }

    /// gamma(-1) gamma(a). Throws ZeroFormClass for a == 0.
    [[nodiscard]] Complex chi(int a) const;

    /// gamma(1)^k for any integer k, including negative k.
    [[nodiscard]] Complex gamma_one_pow(long long k) const;

private:
    PrimeField field_;
    int scale_;
    std::vector<Complex> table_;
    Complex gamma_one_;
};

Complex psi(const AdditiveCharacter& c, const FpElement& x);
Complex gamma_scalar(const AdditiveCharacter& c, const FpElement& a);
Complex chi(const AdditiveCharacter& c, const FpElement& a);

} // namespace weilchar
