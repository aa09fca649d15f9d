#include "weilchar/schrodinger.hpp"

#include "weilchar/charformula.hpp"
#include "weilchar/error.hpp"

#include <cmath>
#include <sstream>

namespace weilchar {

SectionBasis::SectionBasis(Lagrangian l) : lag_(std::move(l)) {
    const std::size_t n = lag_.space().dim() - lag_.dim();
    for_each_vector(lag_.space().field(), n, [&](const FpVector& coords) { reps_.push_back(lag_.sub().lift(coords)); });
}

std::size_t SectionBasis::index_of(const FpVector& v) const {
    const FpVector coords = lag_.sub().quotient_coords(v);
    const auto p = static_cast<std::size_t>(lag_.space().field().p());
    std::size_t index = 0;
    for (int c : coords) index = index * p + static_cast<std::size_t>(c);
    return index;
}

RepOperator compose(const RepOperator& lhs, const RepOperator& rhs) {
    if (!(rhs.codomain.lagrangian() == lhs.domain.lagrangian()))
        throw DimensionMismatch("operators do not compose: section spaces differ");
    return {rhs.domain, lhs.codomain, lhs.mat * rhs.mat};
}

KernelContext::KernelContext(const AdditiveCharacter& c, const Lagrangian& l1, const Lagrangian& l2)
    : c_(&c), space_(l1.space()), b1_(l1.basis()), b2_(l2.basis()), solver_(l1.basis().stack(l2.basis())),
      weight_(1.0) {
    if (!(l1.space() == l2.space())) throw DimensionMismatch("kernel between different spaces");
    const std::size_t meet = subspace_intersect(l1.sub(), l2.sub()).dim();
    weight_ = std::pow(static_cast<double>(c.field().p()), -0.5 * static_cast<double>(l1.dim() - meet));
}

int KernelContext::phase_with(const FpVector& v, const FpVector& w, const FpVector& a1, const FpVector& a2) const {
    return space_.field().add(space_.pair(a1, v), space_.pair(a2, w));
}

std::optional<int> KernelContext::phase(const FpVector& v, const FpVector& w) const {
    const PrimeField& f = space_.field();
    const auto sol = solver_.solve(vec_sub(f, v, w));
    if (!sol) return std::nullopt;
    const std::size_t k1 = b1_.rows();
    const FpVector c1(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(k1));
    const FpVector c2(sol->begin() + static_cast<std::ptrdiff_t>(k1), sol->end());
    return phase_with(v, w, combine(b1_, c1), combine(b2_, c2));
}

Complex KernelContext::operator()(const FpVector& v, const FpVector& w) const {
    const auto q = phase(v, w);
    if (!q) return 0.0;
    return c_->psi(space_.field().mul(space_.field().half(), *q)) * weight_;
}

Complex kernel_value(const AdditiveCharacter& c, const Lagrangian& l1, const Lagrangian& l2, const FpVector& v,
                     const FpVector& w) {
    return KernelContext(c, l1, l2)(v, w);
}

RepOperator intertwiner(const AdditiveCharacter& c, const Lagrangian& l1, const Lagrangian& l2) {
    SectionBasis dom(l1);
    SectionBasis cod(l2);
    const KernelContext k(c, l1, l2);
    const auto rows = static_cast<Eigen::Index>(cod.size());
    const auto cols = static_cast<Eigen::Index>(dom.size());
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index x = 0; x < cols; ++x)
        for (Eigen::Index y = 0; y < rows; ++y)
            m(y, x) = k(dom.rep(static_cast<std::size_t>(x)), cod.rep(static_cast<std::size_t>(y)));
    return {std::move(dom), std::move(cod), std::move(m)};
}

RepOperator rho_matrix(const MpElement& e, const Lagrangian& l) {
    const SpElement& g = e.g();
    const Complex t = e.evaluate(l);
    const KernelContext k(e.character(), g.apply(l), l);
    SectionBasis basis(l);
    const auto size = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd m(size, size);
    for (Eigen::Index x = 0; x < size; ++x) {
        const FpVector gx = g.apply(basis.rep(static_cast<std::size_t>(x)));
        for (Eigen::Index y = 0; y < size; ++y) m(y, x) = t * k(gx, basis.rep(static_cast<std::size_t>(y)));
    }
    return {basis, basis, std::move(m)};
}

RepOperator rho_matrix(const MpElement& e) { return rho_matrix(e, Lagrangian::standard(e.space())); }

Complex trace_oracle(const MpElement& e, const Lagrangian& l) { return rho_matrix(e, l).trace(); }

Complex trace_oracle(const MpElement& e) { return trace_oracle(e, Lagrangian::standard(e.space())); }

double unitarity_defect(const RepOperator& op) {
    const auto n = op.mat.rows();
    return (op.mat * op.mat.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

CheckReport diagonal_kernel_check(const AdditiveCharacter& c, const SpElement& g, const Lagrangian& l) {
    CheckReport r{"diagonal of the pulled-back kernel"};
    const PrimeField& f = g.field();
    const Lagrangian gl = g.apply(l);
    const KernelContext k(c, gl, l);
    const SgData sg = build_sg(g, l);
    const double weight =
        std::pow(static_cast<double>(f.p()), -0.5 * static_cast<double>(l.dim() - subspace_intersect(gl.sub(), l.sub()).dim()));
    for_each_vector(f, g.space().dim() - l.dim(), [&](const FpVector& coords) {
        const FpVector x = l.sub().lift(coords);
        const Complex actual = k(g.apply(x), x);
        const auto q = sg_q_diagonal(sg, coords);
        const Complex expected = q ? c.psi(f.mul(f.half(), *q)) * weight : Complex(0.0);
        if (!approx_eq(actual, expected)) {
            std::ostringstream w;
            w << "coset x=(";
            for (std::size_t i = 0; i < coords.size(); ++i) w << (i ? "," : "") << coords[i];
            w << ") g=" << g.matrix().to_string();
            r.record(false, w.str());
        } else {
            r.record(true, "");
        }
    });
    return r;
}

} // namespace weilchar
