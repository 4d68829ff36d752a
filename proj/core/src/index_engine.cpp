#include "indexform/index_engine.hpp"

namespace indexform {

PolyMat index_matrix(const GermProblem &g) {
    const std::size_t n = g.n(), k = g.k();
    PolyMat m(k + 1, n, g.ring);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = g.f[i].derivative(j);
    for (std::size_t j = 0; j < n; ++j) m.at(k, j) = g.A[j];
    return m;
}

std::vector<Poly> build_index_ideal(const GermProblem &g) {
    g.validate();
    std::vector<Poly> gens = g.f;
    for (Poly &m : minors(index_matrix(g), g.k() + 1)) gens.push_back(std::move(m));
    return gens;
}

IndexReport complex_index(const GermProblem &g, int degree_cap) {
    IndexReport report;
    report.ideal_generators = build_index_ideal(g);

    std::vector<Poly> nonzero;
    for (const auto &p : report.ideal_generators)
        if (!p.is_zero()) nonzero.push_back(p);
    if (nonzero.empty()) {
        // Identically zero 1-form on V: nowhere isolated.
        report.index = std::nullopt;
        return report;
    }

    StdBasis sb = standard_basis(nonzero, degree_cap);
    report.leading_monomials = sb.leading_monomials();
    report.index = sb.colength();
    if (report.index) report.quotient_basis = sb.staircase_complement();
    return report;
}

bool check_icis(const GermProblem &g, int degree_cap) {
    g.validate();
    const std::size_t k = g.k();
    if (k == 0) return true;

    PolyMat jac(k, g.n(), g.ring);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < g.n(); ++j) jac.at(i, j) = g.f[i].derivative(j);

    std::vector<Poly> gens = g.f;
    for (Poly &m : minors(jac, k)) gens.push_back(std::move(m));
    std::vector<Poly> nonzero;
    for (const auto &p : gens)
        if (!p.is_zero()) nonzero.push_back(p);
    if (nonzero.empty()) return false;
    return standard_basis(nonzero, degree_cap).colength().has_value();
}

}  // namespace indexform
