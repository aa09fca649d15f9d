#pragma once

/**
 * @file schrodinger.hpp
 * @brief The Schrodinger model over F_p: sections over V/l, the kernels
 *        K_{l1,l2}, intertwiners between models, and rho(g, t) as a matrix.
 *
 * A section over V/l is stored by its values at the canonical coset
 * representatives (zeros at the pivot coordinates of l); the rest follows
 * from f(v + a) = psi(<v, a>/2) f(v) for a in l.
 */

#include "weilchar/char_values.hpp"
#include "weilchar/metaplectic.hpp"
#include "weilchar/report.hpp"
#include "weilchar/symplectic.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace weilchar {

/// The p^n canonical representatives of V/l, in lexicographic order of their
/// free coordinates.
class SectionBasis {
public:
    explicit SectionBasis(Lagrangian l);

    [[nodiscard]] const Lagrangian& lagrangian() const noexcept { return lag_; }
    [[nodiscard]] std::size_t size() const noexcept { return reps_.size(); }
    [[nodiscard]] const FpVector& rep(std::size_t i) const { return reps_.at(i); }
    [[nodiscard]] const std::vector<FpVector>& reps() const noexcept { return reps_; }

    /// Index of the coset v + l.
    [[nodiscard]] std::size_t index_of(const FpVector& v) const;
    /// Representative for the given V/l coordinates.
    [[nodiscard]] FpVector lift(const FpVector& coords) const { return lag_.sub().lift(coords); }

private:
    Lagrangian lag_;
    std::vector<FpVector> reps_;
};

/// A linear map between section spaces, as a complex matrix indexed [codomain][domain].
struct RepOperator {
    SectionBasis domain;
    SectionBasis codomain;
    Eigen::MatrixXcd mat;

    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(mat.rows()); }
    [[nodiscard]] Complex trace() const { return mat.trace(); }
};

/// this after rhs; throws DimensionMismatch unless rhs lands where this starts.
RepOperator compose(const RepOperator& lhs, const RepOperator& rhs);

/// Evaluates K_{l1,l2} repeatedly with one elimination.
class KernelContext {
public:
    KernelContext(const AdditiveCharacter& c, const Lagrangian& l1, const Lagrangian& l2);

    /// Zero unless v - w = a1 + a2 with a_i in l_i; then
    /// psi((<a1, v> + <a2, w>)/2) p^{-dim(l1 / l1 n l2)/2}.
    [[nodiscard]] Complex operator()(const FpVector& v, const FpVector& w) const;

    /// Q(v, w) = <a1, v> + <a2, w>, or nullopt off the support.
    [[nodiscard]] std::optional<int> phase(const FpVector& v, const FpVector& w) const;
    /// Same, with an explicit decomposition v - w = a1 + a2.
    [[nodiscard]] int phase_with(const FpVector& v, const FpVector& w, const FpVector& a1, const FpVector& a2) const;

    [[nodiscard]] double weight() const noexcept { return weight_; }

private:
    const AdditiveCharacter* c_;
    SymplecticSpace space_;
    FpMatrix b1_;
    FpMatrix b2_;
    SpanSolver solver_;
    double weight_;
};

Complex kernel_value(const AdditiveCharacter& c, const Lagrangian& l1, const Lagrangian& l2, const FpVector& v,
                     const FpVector& w);

/// Sections over V/l1 to sections over V/l2: M[y][x] = K_{l1,l2}(x, y).
RepOperator intertwiner(const AdditiveCharacter& c, const Lagrangian& l1, const Lagrangian& l2);

/// rho(g, t) on sections over V/l: M[y][x] = t(l) K_{gl,l}(g x, y).
RepOperator rho_matrix(const MpElement& e, const Lagrangian& l);
RepOperator rho_matrix(const MpElement& e);

/// Trace of rho_matrix(e, l).
Complex trace_oracle(const MpElement& e, const Lagrangian& l);
Complex trace_oracle(const MpElement& e);

/// max |M M^* - 1| entrywise.
double unitarity_defect(const RepOperator& op);

/// Checks that the diagonal x -> K_{gl,l}(g x, x) vanishes off the S-hat subspace
/// and equals psi(q(x, x)/2) p^{-dim(l / gl n l)/2} on it.
CheckReport diagonal_kernel_check(const AdditiveCharacter& c, const SpElement& g, const Lagrangian& l);

} // namespace weilchar
