#include "indexform/germ_problem.hpp"

namespace indexform {

void GermProblem::validate() const {
    if (!ring) throw PreconditionError("germ problem: missing variable context");
    const std::size_t nv = ring->nvars();
    if (nv == 0) throw PreconditionError("germ problem: no variables");
    if (f.size() >= nv)
        throw PreconditionError("germ problem: needs k < n (got k=" + std::to_string(f.size()) +
                                ", n=" + std::to_string(nv) + ")");
    if (A.size() != nv)
        throw PreconditionError("germ problem: omega must have exactly n coefficients");
    Poly probe = Poly::zero(ring);
    for (const auto &fi : f) {
        if (!fi.same_ring(probe)) throw PreconditionError("germ problem: context mismatch in f");
        if (!fi.constant_term().is_zero())
            throw PreconditionError("germ problem: f must vanish at the origin");
    }
    for (const auto &ai : A)
        if (!ai.same_ring(probe)) throw PreconditionError("germ problem: context mismatch in omega");
}

GermProblem GermProblem::perturbed(const std::vector<Poly> &eta, const Rat &lambda) const {
    if (eta.size() != A.size())
        throw PreconditionError("perturbation: eta must have n coefficients");
    GermProblem out = *this;
    for (std::size_t i = 0; i < A.size(); ++i) out.A[i] = A[i] - eta[i].scaled(lambda);
    return out;
}

GermProblem GermProblem::linear_change(const std::vector<std::vector<Rat>> &J) const {
    const std::size_t nv = n();
    if (J.size() != nv) throw PreconditionError("linear_change: matrix must be n x n");
    for (const auto &row : J)
        if (row.size() != nv) throw PreconditionError("linear_change: matrix must be n x n");

    // images[i] = sum_j J[i][j] x'_j, the substitution for x_i.
    std::vector<Poly> images;
    images.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        Poly s = Poly::zero(ring);
        for (std::size_t j = 0; j < nv; ++j)
            s += Poly::variable(ring, j).scaled(J[i][j]);
        images.push_back(s);
    }

    GermProblem out;
    out.ring = ring;
    out.f.reserve(f.size());
    for (const auto &fi : f) out.f.push_back(fi.compose(images));
    // omega = sum_i A_i dx_i with x = J x' gives dx_i = sum_j J_ij dx'_j,
    // so A'_j = sum_i J_ij * (A_i composed with the substitution).
    out.A.assign(nv, Poly::zero(ring));
    for (std::size_t i = 0; i < nv; ++i) {
        Poly Ai = A[i].compose(images);
        for (std::size_t j = 0; j < nv; ++j) {
            if (J[i][j].is_zero()) continue;
            out.A[j] += Ai.scaled(J[i][j]);
        }
    }
    return out;
}

}  // namespace indexform
