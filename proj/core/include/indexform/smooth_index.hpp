#ifndef INDEXFORM_SMOOTH_INDEX_HPP
#define INDEXFORM_SMOOTH_INDEX_HPP

#include "indexform/germ_problem.hpp"
#include "indexform/quotient_algebra.hpp"
#include "indexform/symmetric_matrix.hpp"

namespace indexform {

/// The class of the Jacobian determinant det(dA_i/dx_j) in the quotient
/// algebra (k=0). It spans the socle when the colength is finite.
Poly hessian_class(const GermProblem &g, const QuotAlg &alg);

/// The linear functional on the quotient-algebra basis dual to the socle:
/// supported on the highest-degree basis monomial appearing in the
/// hessian class, scaled so ell(hessian_class) = dim. Throws
/// PreconditionError when the hessian class reduces to zero (an internal
/// inconsistency for finite-colength input).
std::vector<Rat> socle_functional(const QuotAlg &alg, const Poly &hessian_cls);

/// Gram matrix Q(a,b) = ell([phi_a][phi_b]) via the multiplication table.
SymMat gram(const QuotAlg &alg, const std::vector<Rat> &ell);

/// Detailed result of the smooth-case (k=0) real index computation.
struct SmoothIndexReport {
    QuotAlg algebra;
    Poly hessian_cls;
    std::vector<Rat> functional;
    SymMat gram_matrix;
    SignatureTriple inertia;
    long real_index = 0;
};

/// Real index of omega at the origin of R^n for k=0: the signature of the
/// bilinear form ell(ab) on the local algebra. Throws
/// DegenerateConfiguration on infinite colength.
SmoothIndexReport real_index_smooth(const GermProblem &g, int degree_cap = 64);

}  // namespace indexform

#endif
