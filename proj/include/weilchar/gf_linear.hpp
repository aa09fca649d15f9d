#pragma once

/**
 * @file gf_linear.hpp
 * @brief Exact arithmetic over F_p and dense linear algebra on top of it.
 *
 * Every object in this header is an immutable value once constructed.
 * Residues are stored as plain `int` in [0, p); the modulus travels with
 * the containing object, so mixing moduli is detected and rejected.
 *
 * Vectors are column vectors, so `M.apply(v)` is `M v`. Subspaces keep
 * their basis as rows of a matrix in reduced row echelon form, which makes
 * equality of subspaces a plain comparison of entries.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace weilchar {

/// Column vector of residues in [0, p). The modulus lives with the caller.
using FpVector = std::vector<int>;

/// The prime field F_p, restricted to odd primes 3 <= p <= 97.
class PrimeField {
public:
    static constexpr int kMaxPrime = 97;

    explicit PrimeField(int p);

    [[nodiscard]] int p() const noexcept { return p_; }

    [[nodiscard]] int reduce(long long x) const noexcept;
    [[nodiscard]] int add(int a, int b) const noexcept { return reduce(static_cast<long long>(a) + b); }
    [[nodiscard]] int sub(int a, int b) const noexcept { return reduce(static_cast<long long>(a) - b); }
    [[nodiscard]] int mul(int a, int b) const noexcept { return reduce(static_cast<long long>(a) * b); }
    [[nodiscard]] int neg(int a) const noexcept { return reduce(-static_cast<long long>(a)); }
    [[nodiscard]] int pow(int a, long long e) const;
    /// Throws DivisionByZero for a == 0.
    [[nodiscard]] int inv(int a) const;
    [[nodiscard]] int div(int a, int b) const { return mul(a, inv(b)); }

    /// The field element 1/2 = (p + 1) / 2.
    [[nodiscard]] int half() const noexcept { return (p_ + 1) / 2; }

    /// Euler criterion a^((p-1)/2): +1 for nonzero squares, -1 for nonsquares, 0 for 0.
    [[nodiscard]] int legendre(int a) const;

    /// Smallest nonsquare in [2, p).
    [[nodiscard]] int nonsquare() const noexcept { return nonsquare_; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    int p_;
    int nonsquare_;
};

bool is_prime(int n) noexcept;

/// A single element of F_p carrying its modulus.
class FpElement {
public:
    FpElement(const PrimeField& field, long long value);

    [[nodiscard]] int value() const noexcept { return value_; }
    [[nodiscard]] PrimeField field() const { return PrimeField(p_); }
    [[nodiscard]] int modulus() const noexcept { return p_; }
    [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }

    FpElement operator+(const FpElement& rhs) const;
    FpElement operator-(const FpElement& rhs) const;
    FpElement operator*(const FpElement& rhs) const;
    FpElement operator/(const FpElement& rhs) const;
    FpElement operator-() const;

    friend bool operator==(const FpElement&, const FpElement&) = default;

private:
    void require_same_field(const FpElement& rhs) const;

    int value_;
    int p_;
};

/// Multiplicative inverse; throws DivisionByZero on zero.
FpElement fp_inv(const FpElement& a);

/// Legendre symbol via the Euler criterion.
int legendre(const FpElement& a);

/// Dense row-major matrix over F_p.
class FpMatrix {
public:
    FpMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);

    static FpMatrix identity(const PrimeField& field, std::size_t n);
    /// Each vector becomes one row; all rows must have length `cols`.
    static FpMatrix from_rows(const PrimeField& field, std::size_t cols, std::span<const FpVector> rows);
    /// Row-major integer entries, reduced mod p.
    static FpMatrix from_values(const PrimeField& field, std::size_t rows, std::size_t cols,
                                std::span<const long long> values);

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] std::span<const int> entries() const noexcept { return data_; }

    [[nodiscard]] int operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, long long value) { data_[i * cols_ + j] = field_.reduce(value); }

    [[nodiscard]] FpVector row(std::size_t i) const;
    [[nodiscard]] FpVector column(std::size_t j) const;
    [[nodiscard]] std::vector<FpVector> row_vectors() const;

    [[nodiscard]] FpMatrix transpose() const;
    [[nodiscard]] FpMatrix operator*(const FpMatrix& rhs) const;
    [[nodiscard]] FpMatrix operator+(const FpMatrix& rhs) const;
    [[nodiscard]] FpMatrix operator-(const FpMatrix& rhs) const;
    [[nodiscard]] FpMatrix operator-() const;
    [[nodiscard]] FpMatrix scaled(int s) const;
    /// M v for a column vector v.
    [[nodiscard]] FpVector apply(const FpVector& v) const;
    /// Bilinear pairing u^T M v.
    [[nodiscard]] int pair(const FpVector& u, const FpVector& v) const;

    /// Rows of `this` followed by rows of `below`.
    [[nodiscard]] FpMatrix stack(const FpMatrix& below) const;
    /// Block-diagonal matrix diag(this, other).
    [[nodiscard]] FpMatrix block_diag(const FpMatrix& other) const;

    struct Reduction;
    [[nodiscard]] Reduction rref() const;
    [[nodiscard]] std::size_t rank() const;
    [[nodiscard]] int determinant() const;
    [[nodiscard]] std::optional<FpMatrix> inverse() const;
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_symmetric() const noexcept;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<int> data_;
};

struct FpMatrix::Reduction {
    FpMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Subspace of F_p^d with its canonical basis (rows in reduced row echelon form).
class Subspace {
public:
    /// Span of the given rows; any spanning set of the same space gives an identical value.
    static Subspace span(const FpMatrix& rows);
    static Subspace span(const PrimeField& field, std::size_t ambient_dim, std::span<const FpVector> vectors);
    static Subspace zero(const PrimeField& field, std::size_t ambient_dim);
    static Subspace full(const PrimeField& field, std::size_t ambient_dim);

    [[nodiscard]] const PrimeField& field() const noexcept { return basis_.field(); }
    [[nodiscard]] std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.rows(); }
    [[nodiscard]] const FpMatrix& basis() const noexcept { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    /// Coordinates not used as pivots; they index V / this.
    [[nodiscard]] std::vector<std::size_t> non_pivots() const;

    [[nodiscard]] bool contains(const FpVector& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;
    /// The representative of v + this whose pivot coordinates are zero.
    [[nodiscard]] FpVector reduce(const FpVector& v) const;
    /// Coordinates of v in V / this (entries of reduce(v) at non-pivot positions).
    [[nodiscard]] FpVector quotient_coords(const FpVector& v) const;
    /// Inverse of quotient_coords: zeros at pivot positions.
    [[nodiscard]] FpVector lift(const FpVector& coords) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

private:
    explicit Subspace(FpMatrix basis, std::vector<std::size_t> pivots)
        : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    FpMatrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : M v = 0} in canonical form.
Subspace kernel(const FpMatrix& m);
/// Column space of M.
Subspace image(const FpMatrix& m);
/// Image M(S) of a subspace.
Subspace image(const FpMatrix& m, const Subspace& s);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const FpVector& v);

/// Solves sum_i c_i r_i = v for the rows r_i of a fixed matrix.
///
/// The rows may be linearly dependent; any one solution is returned.
/// Construction does one elimination, each solve is O(d^2).
class SpanSolver {
public:
    explicit SpanSolver(const FpMatrix& rows);

    [[nodiscard]] std::optional<FpVector> solve(const FpVector& v) const;
    [[nodiscard]] std::size_t rank() const noexcept { return pivots_.size(); }

private:
    PrimeField field_;
    std::size_t nvectors_;
    std::size_t dim_;
    FpMatrix transform_;
    std::vector<std::size_t> pivots_;
};

// Vector helpers; all inputs share the modulus of `field`.
FpVector vec_add(const PrimeField& field, const FpVector& a, const FpVector& b);
FpVector vec_sub(const PrimeField& field, const FpVector& a, const FpVector& b);
FpVector vec_scale(const PrimeField& field, int s, const FpVector& a);
/// sum_i c_i rows_i
FpVector combine(const FpMatrix& rows, const FpVector& coeffs);
bool is_zero(const FpVector& v) noexcept;

} // namespace weilchar
