#ifndef INDEXFORM_HESSIAN_IDENTITY_HPP
#define INDEXFORM_HESSIAN_IDENTITY_HPP

#include <cstdint>
#include <string>

#include "indexform/fiber_chart.hpp"

namespace indexform {

/// Outcome of checking hessian_formula against hessian_direct.
struct HessianVerdict {
    bool ok = false;             // symbolic_ok && evaluations_ok
    bool symbolic_ok = false;    // cross-difference vanishes on the germ
    bool ambient_identity = false;  // cross-difference is identically zero
    int saturation_power = 0;    // delta power needed by the membership test
    int points_evaluated = 0;
    int points_requested = 0;
    bool evaluations_ok = false;
    std::string note;            // set when no rational test points were found
};

/// Checks the two Hessian computations agree as rational functions on the
/// fibers of f. Symbolically: the cross-multiplied difference, possibly
/// multiplied by a small power of delta, reduces to zero against a
/// standard basis of (f_1..f_k) in the local ring. Numerically: both sides
/// are evaluated at `trials` random rational points with delta != 0 (every
/// rational point lies on the rational fiber through itself, and both
/// Hessians depend only on derivatives, so no fiber shift is needed).
/// Requires k >= 1 and n-k >= 1.
HessianVerdict verify_hessian_identity(const GermProblem &g, int trials, std::uint64_t seed);

/// Same check for an explicit chart.
HessianVerdict verify_chart_identity(const FiberChart &chart, int trials, std::uint64_t seed);

/// Core comparison: do lhs and rhs agree as rational functions on the
/// fibers of g where delta != 0? Exposed so broken candidates (for
/// example a chart with a mutated border minor) can be checked against a
/// sound reference.
HessianVerdict verify_identity_pair(const GermProblem &g, const Poly &delta, const RatFunc &lhs,
                                    const RatFunc &rhs, int trials, std::uint64_t seed);

}  // namespace indexform

#endif
