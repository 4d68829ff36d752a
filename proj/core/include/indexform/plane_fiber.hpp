#ifndef INDEXFORM_PLANE_FIBER_HPP
#define INDEXFORM_PLANE_FIBER_HPP

#include <optional>
#include <string>
#include <vector>

#include "indexform/algebraic_real.hpp"
#include "indexform/germ_problem.hpp"

namespace indexform {

/// Parameters of a smoothed fiber: the fiber value, the disc radius and an
/// optional perturbation omega - lambda * eta of the 1-form.
struct FiberSpec {
    std::vector<Rat> epsilon;  // k components
    Rat delta = Rat(1);
    std::vector<Poly> eta;     // empty: no perturbation
    Rat lambda = Rat(0);

    void validate(const GermProblem &g) const;
};

/// Bivariate resultant eliminating the given variable (Sylvester
/// determinant over the other variable's polynomial ring). Returns a
/// polynomial not involving `var`.
Poly resultant_wrt(const Poly &p, const Poly &q, std::size_t var);

/// Degree of p in variable var (-1 for zero polynomial).
int degree_in(const Poly &p, std::size_t var);

/// First subresultant of (p, q) with respect to var, as (s1, s0) with
/// S_1 = s1 * x_var + s0. Wherever the specialized gcd has degree one,
/// the common root is -s0/s1. Requires both degrees >= 1 in var;
/// orientation (which argument is larger in var) is handled internally.
std::pair<Poly, Poly> first_subresultant_wrt(const Poly &p, const Poly &q, std::size_t var);

/// Converts a polynomial involving only variable `var` to dense
/// univariate form.
UniPoly to_unipoly(const Poly &p, std::size_t var);

/// Zeros of the system (f - eps, M) on a plane fiber in univariate
/// representation: elimination polynomial r in the first coordinate plus
/// the second coordinate as -param_s0/param_s1 evaluated at each root.
struct SolutionSet {
    UniPoly r;                 // elimination polynomial, multiplicities intact
    UniPoly r_squarefree;
    std::vector<std::pair<UniPoly, int>> multiplicities;  // squarefree decomposition of r
    UniPoly param_s1, param_s0;  // second coordinate = -s0(t)/s1(t), gcd(r_squarefree, s1) = 1
    std::vector<AlgebraicReal> real_roots;                // of r_squarefree, increasing
    long total_multiplicity = 0;                          // deg r
};

/// A solved plane fiber: the (possibly rotated) problem, the fiber and
/// zero-locus polynomials, and the solution set. Rational rotations keep
/// the disc |x|^2+|y|^2 < delta^2 intact.
struct PlaneFiber {
    GermProblem problem;     // rotated, perturbation applied to A
    GermProblem unperturbed; // rotated, original A
    std::vector<std::vector<Rat>> rotation;  // identity when trivial
    bool rotated = false;
    Poly fiber_poly;  // f - eps in the rotated frame
    Poly zero_poly;   // bordered minor M in the rotated frame
    Rat delta;
    SolutionSet solutions;
};

/// Eliminates y from (f - eps, M) after certifying genericity: constant
/// leading y-coefficient of the fiber polynomial, nonzero resultant, and
/// a single y-partner per x-root (gcd(r, s1) = 1). Retries with a fixed
/// sequence of rational rotations; throws DegenerateConfiguration when
/// the system has a shared component or no rotation certifies.
/// Requires n=2, k=1.
PlaneFiber solve_plane_fiber(const GermProblem &g, const FiberSpec &spec);

/// Number of zeros of omega on the fiber inside the open delta-disc,
/// counted with multiplicities. When exact root-radius bounds certify
/// that every affine solution lies inside the disc, this is the degree of
/// the elimination polynomial; otherwise each root is classified exactly:
/// real roots by sign evaluation, complex root pairs through the real
/// system of the real/imaginary parts. A zero exactly on the boundary
/// throws DegenerateConfiguration (perturb delta).
long count_zeros_on_fiber(const GermProblem &g, const FiberSpec &spec);
long count_zeros_on_fiber(const PlaneFiber &fiber);

/// True iff root-radius bounds certify that every affine solution of the
/// system lies strictly inside the delta-disc.
bool all_zeros_certified_in_disc(const PlaneFiber &fiber);

/// Real and imaginary parts of p(u + i v) as polynomials over the ring
/// (u, v): returns (Re, Im). Im is divisible by v.
std::pair<Poly, Poly> complex_split(const UniPoly &p, const RingPtr &uv_ring);

/// Sum of sign(h * Delta(P)^2) over the real zeros inside the open disc.
/// Charts are permuted per zero when the default Delta vanishes; a zero
/// with degenerate Hessian or a zero exactly on the disc boundary throws
/// DegenerateConfiguration.
long real_zero_signs(const GermProblem &g, const FiberSpec &spec);
long real_zero_signs(const PlaneFiber &fiber);

/// Euler characteristic of the real fiber {f = eps} inside the closed
/// delta-disc: half the number of transversal boundary crossings, counted
/// exactly through the rational circle parameterization plus the point at
/// t = infinity. Requires the crossing polynomial squarefree and the
/// degree drop at infinity <= 1; otherwise throws
/// DegenerateConfiguration (perturb delta).
long euler_char_real_curve(const Poly &f, const Rat &eps, const Rat &delta);

/// Certifies the affine complex fiber is smooth: the pairwise resultants
/// of (f-eps, df/dx) and (f-eps, df/dy) share no root. Conservative:
/// throws DegenerateConfiguration when the certificate fails.
void require_fiber_smooth(const Poly &f, const std::vector<Rat> &eps);

/// Real index recovered through the smoothed fiber:
/// real_zero_signs - euler_char + 1.
struct RecoveredIndexReport {
    long sign_sum = 0;
    long euler_characteristic = 0;
    long recovered_index = 0;
    long zero_count = 0;       // complex count with multiplicity
    long real_zero_count = 0;  // real zeros inside the disc
    bool rotated = false;
};
RecoveredIndexReport recovered_real_index(const GermProblem &g, const FiberSpec &spec);

/// Exact sign of the bivariate polynomial w at the real zero with first
/// coordinate xi, using the solution set's parameterization.
int sign_at_zero(const Poly &w, const SolutionSet &sol, const AlgebraicReal &xi);

}  // namespace indexform

#endif
