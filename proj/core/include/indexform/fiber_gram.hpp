#ifndef INDEXFORM_FIBER_GRAM_HPP
#define INDEXFORM_FIBER_GRAM_HPP

#include "indexform/plane_fiber.hpp"
#include "indexform/quotient_algebra.hpp"
#include "indexform/symmetric_matrix.hpp"

namespace indexform {

/// The quadratic-form route to the real index at fixed rational fiber
/// parameters (plane-curve case): the functional ell(psi) = sum over fiber
/// zeros of psi / (h * Delta(P)^2), realized as exact traces over the
/// univariate zero algebra, the Gram matrix ell(phi_a phi_b) on the
/// quotient-algebra basis of the origin ideal, and its exact signature.
struct FiberGramReport {
    std::vector<Mono> basis;      // quotient basis of the origin ideal
    SymMat gram_matrix{0};
    SignatureTriple inertia;
    long euler_characteristic = 0;
    long recovered_index = 0;     // signature - chi + 1
    bool rotated = false;
};

/// Values of the functional on the quotient basis (one exact rational per
/// basis monomial): ell(phi) = trace of multiplication by
/// phi * (h Delta^2)^{-1} on Q[t]/(r). Requires all zeros simple
/// (r squarefree) and nondegenerate (h Delta^2 invertible modulo r).
std::vector<Rat> fiber_functional(const PlaneFiber &fiber, const std::vector<Mono> &basis);

/// Gram matrix of the functional on the quotient basis.
SymMat fiber_gram(const PlaneFiber &fiber, const std::vector<Mono> &basis);

/// Full pipeline: solves the fiber, checks the zero algebra matches the
/// complex index (all zeros captured inside the disc), assembles the Gram
/// matrix and recovers the real index via the Euler characteristic.
/// The optional perturbation applies to the zero locus only; the quotient
/// basis always comes from the unperturbed origin ideal.
FiberGramReport real_index_via_fiber(const GermProblem &g, const FiberSpec &spec);

}  // namespace indexform

#endif
