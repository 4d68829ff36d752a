#ifndef INDEXFORM_FIBER_CHART_HPP
#define INDEXFORM_FIBER_CHART_HPP

#include "indexform/germ_problem.hpp"
#include "indexform/rational_function.hpp"

namespace indexform {

/// A chart on the fibers of f: the k variables in `eliminated` are treated
/// as dependent, the remaining n-k as fiber coordinates. delta is the k x k
/// Jacobian minor over the eliminated columns; border_minors[i] is the
/// (k+1) x (k+1) bordered determinant with last row A and last column the
/// i-th remaining variable. The restriction of omega to a fiber is
/// sum_i (border_minors[i]/delta) d x_{remaining[i]} wherever delta != 0.
struct FiberChart {
    GermProblem problem;
    std::vector<std::size_t> eliminated;  // k indices, ascending
    std::vector<std::size_t> remaining;   // n-k indices, ascending
    Poly delta;
    std::vector<Poly> border_minors;  // one per remaining variable
};

/// Builds the chart for a choice of dependent variables (default: the
/// first k). Throws DegenerateConfiguration when delta is identically
/// zero (the caller must permute variables) and PreconditionError on an
/// invalid eliminated set.
FiberChart make_fiber_chart(const GermProblem &g, std::vector<std::size_t> eliminated = {});

/// Coefficients of the restricted 1-form: [m_i / delta] over the
/// remaining variables. For k=0 this is just A.
std::vector<RatFunc> restriction_coefficients(const FiberChart &chart);

/// Hessian of the restricted 1-form in the chart coordinates, computed by
/// total derivatives along the fiber: the determinant of
/// d/dx_j (m_i/delta) with the dependent-variable contributions expanded
/// by Cramer's rule.
RatFunc hessian_direct(const FiberChart &chart);

/// The same Hessian by the closed bordered-determinant formula: the
/// (n+1) x (n+1) determinant with first row (delta, grad delta), rows
/// (0, grad f_i), rows (m_i, grad m_i), divided by delta^(2 + (n-k)).
/// Columns are ordered eliminated-first, matching the derivation.
RatFunc hessian_formula(const FiberChart &chart);

}  // namespace indexform

#endif
