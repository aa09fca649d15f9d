#include "weilchar/gf_linear.hpp"

#include "weilchar/error.hpp"

#include <algorithm>
#include <sstream>

namespace weilchar {

bool is_prime(int n) noexcept {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(int p) : p_(p), nonsquare_(0) {
    if (p < 3 || p > kMaxPrime || !is_prime(p)) {
        throw InvalidModulus("modulus must be an odd prime in [3, 97], got " + std::to_string(p));
    }
    for (int a = 2; a < p; ++a) {
        if (legendre(a) == -1) {
            nonsquare_ = a;
            break;
        }
    }
}

int PrimeField::reduce(long long x) const noexcept {
    long long r = x % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
}

int PrimeField::pow(int a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    long long result = 1;
    long long base = reduce(a);
    while (e > 0) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<int>(result);
}

int PrimeField::inv(int a) const {
    a = reduce(a);
    if (a == 0) throw DivisionByZero();
    return pow(a, p_ - 2);
}

int PrimeField::legendre(int a) const {
    a = reduce(a);
    if (a == 0) return 0;
    return pow(a, (p_ - 1) / 2) == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------

FpElement::FpElement(const PrimeField& field, long long value)
    : value_(field.reduce(value)), p_(field.p()) {}

void FpElement::require_same_field(const FpElement& rhs) const {
    if (p_ != rhs.p_) throw DimensionMismatch("elements of different prime fields");
}

FpElement FpElement::operator+(const FpElement& rhs) const {
    require_same_field(rhs);
    return {field(), static_cast<long long>(value_) + rhs.value_};
}

FpElement FpElement::operator-(const FpElement& rhs) const {
    require_same_field(rhs);
    return {field(), static_cast<long long>(value_) - rhs.value_};
}

FpElement FpElement::operator*(const FpElement& rhs) const {
    require_same_field(rhs);
    return {field(), static_cast<long long>(value_) * rhs.value_};
}

FpElement FpElement::operator/(const FpElement& rhs) const {
    require_same_field(rhs);
    return *this * fp_inv(rhs);
}

FpElement FpElement::operator-() const { return {field(), -static_cast<long long>(value_)}; }

FpElement fp_inv(const FpElement& a) {
    const PrimeField field = a.field();
    return {field, field.inv(a.value())};
}

int legendre(const FpElement& a) { return a.field().legendre(a.value()); }

// ---------------------------------------------------------------------------

FpMatrix::FpMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(const PrimeField& field, std::size_t n) {
    FpMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(const PrimeField& field, std::size_t cols, std::span<const FpVector> rows) {
    FpMatrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("row length does not match column count");
        for (std::size_t j = 0; j < cols; ++j) m.data_[i * cols + j] = field.reduce(rows[i][j]);
    }
    return m;
}

FpMatrix FpMatrix::from_values(const PrimeField& field, std::size_t rows, std::size_t cols,
                               std::span<const long long> values) {
    if (values.size() != rows * cols) throw DimensionMismatch("entry count does not match shape");
    FpMatrix m(field, rows, cols);
    for (std::size_t k = 0; k < values.size(); ++k) m.data_[k] = field.reduce(values[k]);
    return m;
}

FpVector FpMatrix::row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

FpVector FpMatrix::column(std::size_t j) const {
    FpVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = data_[i * cols_ + j];
    return c;
}

std::vector<FpVector> FpMatrix::row_vectors() const {
    std::vector<FpVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
    }
    return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
    if (cols_ != rhs.rows_ || field_ != rhs.field_) throw DimensionMismatch("matrix product shape mismatch");
    FpMatrix out(field_, rows_, rhs.cols_);
    const long long p = field_.p();
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            long long acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) acc += static_cast<long long>(data_[i * cols_ + k]) * rhs.data_[k * rhs.cols_ + j];
            out.data_[i * rhs.cols_ + j] = static_cast<int>(acc % p);
        }
    }
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_) throw DimensionMismatch("matrix sum shape mismatch");
    FpMatrix out(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.add(data_[k], rhs.data_[k]);
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_) throw DimensionMismatch("matrix difference shape mismatch");
    FpMatrix out(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.sub(data_[k], rhs.data_[k]);
    return out;
}

FpMatrix FpMatrix::operator-() const { return scaled(-1); }

FpMatrix FpMatrix::scaled(int s) const {
    FpMatrix out(field_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = field_.mul(data_[k], field_.reduce(s));
    return out;
}

FpVector FpMatrix::apply(const FpVector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("vector length does not match column count");
    FpVector out(rows_);
    const long long p = field_.p();
    for (std::size_t i = 0; i < rows_; ++i) {
        long long acc = 0;
        for (std::size_t k = 0; k < cols_; ++k) acc += static_cast<long long>(data_[i * cols_ + k]) * v[k];
        out[i] = static_cast<int>(acc % p);
    }
    return out;
}

int FpMatrix::pair(const FpVector& u, const FpVector& v) const {
    if (u.size() != rows_ || v.size() != cols_) throw DimensionMismatch("pairing shape mismatch");
    long long acc = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (u[i] == 0) continue;
        long long inner = 0;
        for (std::size_t j = 0; j < cols_; ++j) inner += static_cast<long long>(data_[i * cols_ + j]) * v[j];
        acc += (inner % field_.p()) * u[i];
    }
    return field_.reduce(acc);
}

FpMatrix FpMatrix::stack(const FpMatrix& below) const {
    if (cols_ != below.cols_ || field_ != below.field_) throw DimensionMismatch("stacked matrices differ in width");
    FpMatrix out(field_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

FpMatrix FpMatrix::block_diag(const FpMatrix& other) const {
    if (field_ != other.field_) throw DimensionMismatch("block matrices over different fields");
    FpMatrix out(field_, rows_ + other.rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.data_[i * out.cols_ + j] = data_[i * cols_ + j];
    for (std::size_t i = 0; i < other.rows_; ++i)
        for (std::size_t j = 0; j < other.cols_; ++j)
            out.data_[(rows_ + i) * out.cols_ + cols_ + j] = other.data_[i * other.cols_ + j];
    return out;
}

FpMatrix::Reduction FpMatrix::rref() const {
    FpMatrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t pr = r;
        while (pr < rows_ && m.data_[pr * cols_ + c] == 0) ++pr;
        if (pr == rows_) continue;
        if (pr != r) {
            std::swap_ranges(m.data_.begin() + static_cast<std::ptrdiff_t>(pr * cols_),
                             m.data_.begin() + static_cast<std::ptrdiff_t>((pr + 1) * cols_),
                             m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
        }
        const int inv = field_.inv(m.data_[r * cols_ + c]);
        for (std::size_t j = c; j < cols_; ++j) m.data_[r * cols_ + j] = field_.mul(m.data_[r * cols_ + j], inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            const int f = m.data_[i * cols_ + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols_; ++j) {
                m.data_[i * cols_ + j] = field_.sub(m.data_[i * cols_ + j], field_.mul(f, m.data_[r * cols_ + j]));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t FpMatrix::rank() const { return rref().pivots.size(); }

int FpMatrix::determinant() const {
    if (!is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    FpMatrix m = *this;
    const std::size_t n = rows_;
    int det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && m.data_[pr * n + c] == 0) ++pr;
        if (pr == n) return 0;
        if (pr != c) {
            std::swap_ranges(m.data_.begin() + static_cast<std::ptrdiff_t>(pr * n),
                             m.data_.begin() + static_cast<std::ptrdiff_t>((pr + 1) * n),
                             m.data_.begin() + static_cast<std::ptrdiff_t>(c * n));
            det = field_.neg(det);
        }
        const int pivot = m.data_[c * n + c];
        det = field_.mul(det, pivot);
        const int inv = field_.inv(pivot);
        for (std::size_t i = c + 1; i < n; ++i) {
            const int f = field_.mul(m.data_[i * n + c], inv);
            if (f == 0) continue;
            for (std::size_t j = c; j < n; ++j) {
                m.data_[i * n + j] = field_.sub(m.data_[i * n + j], field_.mul(f, m.data_[c * n + j]));
            }
        }
    }
    return det;
}

std::optional<FpMatrix> FpMatrix::inverse() const {
    if (!is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = rows_;
    FpMatrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.data_[i * 2 * n + j] = data_[i * n + j];
        aug.data_[i * 2 * n + n + i] = 1;
    }
    const auto red = aug.rref();
    if (red.pivots.size() < n || red.pivots[n - 1] != n - 1) return std::nullopt;
    FpMatrix out(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.data_[i * n + j] = red.reduced.data_[i * 2 * n + n + j];
    return out;
}

bool FpMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](int x) { return x == 0; });
}

bool FpMatrix::is_symmetric() const noexcept {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (data_[i * cols_ + j] != data_[j * cols_ + i]) return false;
    return true;
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << data_[i * cols_ + j];
        os << ']';
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(const FpMatrix& rows) {
    auto red = rows.rref();
    FpMatrix basis(rows.field(), red.pivots.size(), rows.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) basis.set(i, j, red.reduced(i, j));
    return Subspace(std::move(basis), std::move(red.pivots));
}

Subspace Subspace::span(const PrimeField& field, std::size_t ambient_dim, std::span<const FpVector> vectors) {
    return span(FpMatrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::zero(const PrimeField& field, std::size_t ambient_dim) {
    return Subspace(FpMatrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(const PrimeField& field, std::size_t ambient_dim) {
    std::vector<std::size_t> piv(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
    return Subspace(FpMatrix::identity(field, ambient_dim), std::move(piv));
}

std::vector<std::size_t> Subspace::non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

FpVector Subspace::reduce(const FpVector& v) const {
    if (v.size() != ambient_dim()) throw DimensionMismatch("vector not in the ambient space");
    const PrimeField& f = field();
    FpVector r(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) r[j] = f.reduce(v[j]);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const int c = r[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.sub(r[j], f.mul(c, basis_(i, j)));
    }
    return r;
}

bool Subspace::contains(const FpVector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("subspaces of different ambient spaces");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

FpVector Subspace::quotient_coords(const FpVector& v) const {
    const FpVector r = reduce(v);
    FpVector out;
    for (std::size_t c : non_pivots()) out.push_back(r[c]);
    return out;
}

FpVector Subspace::lift(const FpVector& coords) const {
    const auto free = non_pivots();
    if (coords.size() != free.size()) throw DimensionMismatch("quotient coordinates have the wrong length");
    FpVector v(ambient_dim(), 0);
    for (std::size_t k = 0; k < free.size(); ++k) v[free[k]] = field().reduce(coords[k]);
    return v;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.ambient_dim() <=> b.ambient_dim(); c != 0) return c;
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    const auto ea = a.basis_.entries();
    const auto eb = b.basis_.entries();
    return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

Subspace kernel(const FpMatrix& m) {
    const auto red = m.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : red.pivots) is_pivot[c] = true;
    std::vector<FpVector> vecs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        FpVector v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = m.field().neg(red.reduced(i, f));
        vecs.push_back(std::move(v));
    }
    return Subspace::span(m.field(), m.cols(), vecs);
}

Subspace image(const FpMatrix& m) { return Subspace::span(m.transpose()); }

Subspace image(const FpMatrix& m, const Subspace& s) {
    if (m.cols() != s.ambient_dim()) throw DimensionMismatch("map does not act on the subspace's ambient space");
    std::vector<FpVector> vecs;
    for (std::size_t i = 0; i < s.dim(); ++i) vecs.push_back(m.apply(s.basis().row(i)));
    return Subspace::span(m.field(), m.rows(), vecs);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field()) throw DimensionMismatch("subspace sum across ambient spaces");
    return Subspace::span(a.basis().stack(b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field()) throw DimensionMismatch("subspace intersection across ambient spaces");
    // Columns: basis of a, then minus basis of b; kernel vectors give common elements.
    const std::size_t ka = a.dim();
    const std::size_t kb = b.dim();
    const std::size_t d = a.ambient_dim();
    FpMatrix m(a.field(), d, ka + kb);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < ka; ++i) m.set(j, i, a.basis()(i, j));
        for (std::size_t i = 0; i < kb; ++i) m.set(j, ka + i, -static_cast<long long>(b.basis()(i, j)));
    }
    const Subspace rel = kernel(m);
    std::vector<FpVector> vecs;
    for (std::size_t r = 0; r < rel.dim(); ++r) {
        FpVector coeffs = rel.basis().row(r);
        coeffs.resize(ka);
        vecs.push_back(combine(a.basis(), coeffs));
    }
    return Subspace::span(a.field(), d, vecs);
}

bool contains(const Subspace& a, const FpVector& v) { return a.contains(v); }

// ---------------------------------------------------------------------------

SpanSolver::SpanSolver(const FpMatrix& rows)
    : field_(rows.field()), nvectors_(rows.rows()), dim_(rows.cols()), transform_(rows.field(), rows.cols(), rows.cols()) {
    // Reduce [A | I] with A = rows^T; the right block records the row operations.
    FpMatrix aug(field_, dim_, nvectors_ + dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        for (std::size_t i = 0; i < nvectors_; ++i) aug.set(j, i, rows(i, j));
        aug.set(j, nvectors_ + j, 1);
    }
    auto red = aug.rref();
    for (auto c : red.pivots) {
        if (c >= nvectors_) break;
        pivots_.push_back(c);
    }
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) transform_.set(i, j, red.reduced(i, nvectors_ + j));
}

std::optional<FpVector> SpanSolver::solve(const FpVector& v) const {
    const FpVector u = transform_.apply(v);
    for (std::size_t i = pivots_.size(); i < dim_; ++i)
        if (u[i] != 0) return std::nullopt;
    FpVector c(nvectors_, 0);
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[pivots_[i]] = u[i];
    return c;
}

// ---------------------------------------------------------------------------

FpVector vec_add(const PrimeField& field, const FpVector& a, const FpVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sum length mismatch");
    FpVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.add(a[i], b[i]);
    return out;
}

FpVector vec_sub(const PrimeField& field, const FpVector& a, const FpVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector difference length mismatch");
    FpVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.sub(a[i], b[i]);
    return out;
}

FpVector vec_scale(const PrimeField& field, int s, const FpVector& a) {
    FpVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.mul(s, a[i]);
    return out;
}

FpVector combine(const FpMatrix& rows, const FpVector& coeffs) {
    if (coeffs.size() != rows.rows()) throw DimensionMismatch("coefficient count does not match row count");
    const PrimeField& f = rows.field();
    std::vector<long long> acc(rows.cols(), 0);
    for (std::size_t i = 0; i < rows.rows(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < rows.cols(); ++j) acc[j] += static_cast<long long>(coeffs[i]) * rows(i, j);
    }
    FpVector out(rows.cols());
    for (std::size_t j = 0; j < rows.cols(); ++j) out[j] = f.reduce(acc[j]);
    return out;
}

bool is_zero(const FpVector& v) noexcept {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

} // namespace weilchar
