#include "indexform/symmetric_matrix.hpp"

#include <stdexcept>

namespace indexform {

bool SymMat::is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

SignatureTriple signature(const SymMat &m) {
    if (!m.is_symmetric()) throw std::invalid_argument("signature: matrix not symmetric");
    const std::size_t n = m.dim();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < n; ++i) active.push_back(i);

    SignatureTriple out;
    while (!active.empty()) {
        // 1x1 pivot on a nonzero diagonal entry.
        std::size_t pivot = n;
        for (std::size_t idx : active)
            if (!a[idx][idx].is_zero()) {
                pivot = idx;
                break;
            }
        if (pivot != n) {
            const Rat d = a[pivot][pivot];
            (d.sign() > 0 ? out.positive : out.negative) += 1;
            std::vector<std::size_t> rest;
            for (std::size_t idx : active)
                if (idx != pivot) rest.push_back(idx);
            for (std::size_t p : rest)
                for (std::size_t q : rest) a[p][q] -= a[p][pivot] * a[pivot][q] / d;
            active = std::move(rest);
            continue;
        }
        // Zero diagonal: look for an off-diagonal entry. The 2x2 block
        // [[0,c],[c,0]] contributes one positive and one negative
        // eigenvalue; eliminate by its Schur complement.
        std::size_t bi = n, bj = n;
        for (std::size_t x = 0; x < active.size() && bi == n; ++x)
            for (std::size_t y = x + 1; y < active.size(); ++y)
                if (!a[active[x]][active[y]].is_zero()) {
                    bi = active[x];
                    bj = active[y];
                    break;
                }
        if (bi == n) {
            out.zero += static_cast<long>(active.size());
            break;
        }
        const Rat c = a[bi][bj];
        out.positive += 1;
        out.negative += 1;
        std::vector<std::size_t> rest;
        for (std::size_t idx : active)
            if (idx != bi && idx != bj) rest.push_back(idx);
        for (std::size_t p : rest)
            for (std::size_t q : rest)
                a[p][q] -= (a[p][bi] * a[bj][q] + a[p][bj] * a[bi][q]) / c;
        active = std::move(rest);
    }
    return out;
}

}  // namespace indexform
