#include "indexform/fiber_chart.hpp"

#include <algorithm>

#include "indexform/poly_matrix.hpp"

namespace indexform {

namespace {

// Jacobian of f over the given columns.
PolyMat jacobian_block(const GermProblem &g, const std::vector<std::size_t> &cols) {
    PolyMat m(g.k(), cols.size(), g.ring);
    for (std::size_t i = 0; i < g.k(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = g.f[i].derivative(cols[j]);
    return m;
}

}  // namespace

FiberChart make_fiber_chart(const GermProblem &g, std::vector<std::size_t> eliminated) {
    g.validate();
    const std::size_t n = g.n(), k = g.k();
    if (eliminated.empty())
        for (std::size_t i = 0; i < k; ++i) eliminated.push_back(i);
    std::sort(eliminated.begin(), eliminated.end());
    if (eliminated.size() != k)
        throw PreconditionError("fiber chart: exactly k variables must be eliminated");
    for (std::size_t e : eliminated)
        if (e >= n) throw PreconditionError("fiber chart: variable index out of range");
    if (std::adjacent_find(eliminated.begin(), eliminated.end()) != eliminated.end())
        throw PreconditionError("fiber chart: repeated variable index");

    FiberChart chart;
    chart.problem = g;
    chart.eliminated = eliminated;
    for (std::size_t i = 0; i < n; ++i)
        if (!std::binary_search(eliminated.begin(), eliminated.end(), i))
            chart.remaining.push_back(i);

    chart.delta = k == 0 ? Poly::constant(g.ring, Rat(1))
                         : determinant(jacobian_block(g, eliminated));
    if (chart.delta.is_zero())
        throw DegenerateConfiguration("fiber chart: delta identically zero, permute variables");

    for (std::size_t r : chart.remaining) {
        std::vector<std::size_t> cols = eliminated;
        cols.push_back(r);
        PolyMat bordered(k + 1, k + 1, g.ring);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                bordered.at(i, j) = g.f[i].derivative(cols[j]);
        for (std::size_t j = 0; j < cols.size(); ++j) bordered.at(k, j) = g.A[cols[j]];
        chart.border_minors.push_back(determinant(bordered));
    }
    return chart;
}

std::vector<RatFunc> restriction_coefficients(const FiberChart &chart) {
    std::vector<RatFunc> out;
    out.reserve(chart.border_minors.size());
    for (const auto &m : chart.border_minors) out.emplace_back(m, chart.delta);
    return out;
}

RatFunc hessian_direct(const FiberChart &chart) {
    const GermProblem &g = chart.problem;
    const std::size_t k = g.k();
    const std::size_t nk = chart.remaining.size();
    const Poly &delta = chart.delta;

    // D(l,j) = delta * d x_{eliminated[l]} / d x_{remaining[j]}: minus the
    // determinant of the eliminated Jacobian with column l replaced by the
    // partials with respect to the j-th remaining variable.
    PolyMat D(k, nk, g.ring);
    if (k > 0) {
        PolyMat JE = jacobian_block(g, chart.eliminated);
        for (std::size_t l = 0; l < k; ++l) {
            for (std::size_t j = 0; j < nk; ++j) {
                PolyMat repl = JE;
                for (std::size_t i = 0; i < k; ++i)
                    repl.at(i, l) = g.f[i].derivative(chart.remaining[j]);
                D.at(l, j) = -determinant(repl);
            }
        }
    }

    // Entry (i,j) of the total-derivative matrix has denominator delta^3;
    // assemble the numerators and divide once at the end.
    PolyMat N(nk, nk, g.ring);
    for (std::size_t i = 0; i < nk; ++i) {
        const Poly &mi = chart.border_minors[i];
        for (std::size_t j = 0; j < nk; ++j) {
            std::size_t xj = chart.remaining[j];
            Poly acc = (mi.derivative(xj) * delta - mi * delta.derivative(xj)) * delta;
            for (std::size_t l = 0; l < k; ++l) {
                std::size_t xl = chart.eliminated[l];
                acc += (mi.derivative(xl) * delta - mi * delta.derivative(xl)) * D.at(l, j);
            }
            N.at(i, j) = acc;
        }
    }
    return RatFunc(determinant(N), delta.pow(static_cast<unsigned>(3 * nk)));
}

RatFunc hessian_formula(const FiberChart &chart) {
    const GermProblem &g = chart.problem;
    const std::size_t n = g.n(), k = g.k();
    const std::size_t nk = chart.remaining.size();
    const Poly &delta = chart.delta;

    // Column order: border, eliminated variables, remaining variables.
    std::vector<std::size_t> cols = chart.eliminated;
    cols.insert(cols.end(), chart.remaining.begin(), chart.remaining.end());

    PolyMat M(n + 1, n + 1, g.ring);
    M.at(0, 0) = delta;
    for (std::size_t c = 0; c < n; ++c) M.at(0, c + 1) = delta.derivative(cols[c]);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < n; ++c) M.at(1 + i, c + 1) = g.f[i].derivative(cols[c]);
    for (std::size_t r = 0; r < nk; ++r) {
        const Poly &mr = chart.border_minors[r];
        M.at(1 + k + r, 0) = mr;
        for (std::size_t c = 0; c < n; ++c) M.at(1 + k + r, c + 1) = mr.derivative(cols[c]);
    }
    return RatFunc(determinant(M), delta.pow(static_cast<unsigned>(2 + nk)));
}

}  // namespace indexform
