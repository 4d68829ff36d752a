#include "indexform/smooth_index.hpp"

#include "indexform/index_engine.hpp"
#include "indexform/poly_matrix.hpp"

namespace indexform {

Poly hessian_class(const GermProblem &g, const QuotAlg &alg) {
    const std::size_t n = g.n();
    PolyMat jac(n, n, g.ring);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) jac.at(i, j) = g.A[i].derivative(j);
    return normal_form(determinant(jac), alg.basis_of_ideal());
}

std::vector<Rat> socle_functional(const QuotAlg &alg, const Poly &hessian_cls) {
    if (hessian_cls.is_zero())
        throw PreconditionError(
            "socle_functional: hessian class is zero in the quotient (inconsistent input)");
    // Highest-degree basis monomial carrying a nonzero coefficient; the
    // local order breaks degree ties deterministically.
    const Mono *socle = nullptr;
    for (const auto &[m, c] : hessian_cls.terms()) {
        if (!socle || m.degree() > socle->degree() ||
            (m.degree() == socle->degree() && LocalOrder::less(m, *socle)))
            socle = &m;
    }
    std::vector<Rat> ell(alg.dim(), Rat(0));
    Rat c = hessian_cls.coeff(*socle);
    ell[alg.basis_index(*socle)] = Rat(static_cast<long>(alg.dim())) / c;
    return ell;
}

SymMat gram(const QuotAlg &alg, const std::vector<Rat> &ell) {
    const std::size_t L = alg.dim();
    if (ell.size() != L) throw std::invalid_argument("gram: functional dimension mismatch");
    SymMat q(L);
    for (std::size_t a = 0; a < L; ++a) {
        for (std::size_t b = a; b < L; ++b) {
            Rat v(0);
            for (std::size_t e = 0; e < L; ++e) {
                const Rat &t = alg.table(a, b, e);
                if (!t.is_zero()) v += t * ell[e];
            }
            q.set(a, b, v);
        }
    }
    return q;
}

SmoothIndexReport real_index_smooth(const GermProblem &g, int degree_cap) {
    g.validate();
    if (g.k() != 0) throw PreconditionError("real_index_smooth: requires k = 0");
    std::vector<Poly> gens;
    for (const auto &a : g.A)
        if (!a.is_zero()) gens.push_back(a);
    if (gens.empty()) throw DegenerateConfiguration("real_index_smooth: omega is zero");
    StdBasis sb = standard_basis(gens, degree_cap);
    if (!sb.colength())
        throw DegenerateConfiguration("real_index_smooth: infinite colength");

    SmoothIndexReport report{QuotAlg(std::move(sb)), Poly(), {}, SymMat(0), {}, 0};
    report.hessian_cls = hessian_class(g, report.algebra);
    report.functional = socle_functional(report.algebra, report.hessian_cls);
    report.gram_matrix = gram(report.algebra, report.functional);
    report.inertia = signature(report.gram_matrix);
    report.real_index = report.inertia.signature();
    return report;
}

}  // namespace indexform
