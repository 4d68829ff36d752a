#include "indexform/quotient_algebra.hpp"

namespace indexform {

QuotAlg::QuotAlg(StdBasis sb) : sb_(std::move(sb)) {
    auto len = sb_.colength();
    if (!len) throw std::domain_error("QuotAlg: infinite colength");
    basis_ = sb_.staircase_complement();
    const std::size_t L = basis_.size();
    table_.assign(L * L * L, Rat(0));
    for (std::size_t a = 0; a < L; ++a) {
        for (std::size_t b = a; b < L; ++b) {
            Poly prod = Poly::monomial(ring(), basis_[a] * basis_[b], Rat(1));
            Poly nf = normal_form(prod, sb_);
            for (const auto &[m, c] : nf.terms()) {
                std::size_t e = basis_index(m);
                table_[(a * L + b) * L + e] = c;
                table_[(b * L + a) * L + e] = c;
            }
        }
    }
}

std::size_t QuotAlg::basis_index(const Mono &m) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == m) return i;
    throw std::out_of_range("QuotAlg: monomial not in basis");
}

std::vector<Rat> QuotAlg::coordinates(const Poly &p) const {
    Poly nf = normal_form(p, sb_);
    std::vector<Rat> coords(basis_.size(), Rat(0));
    for (const auto &[m, c] : nf.terms()) coords[basis_index(m)] = c;
    return coords;
}

std::vector<Rat> QuotAlg::multiply(const std::vector<Rat> &a, const std::vector<Rat> &b) const {
    const std::size_t L = basis_.size();
    if (a.size() != L || b.size() != L)
        throw std::invalid_argument("QuotAlg::multiply: dimension mismatch");
    std::vector<Rat> out(L, Rat(0));
    for (std::size_t i = 0; i < L; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < L; ++j) {
            if (b[j].is_zero()) continue;
            Rat c = a[i] * b[j];
            for (std::size_t e = 0; e < L; ++e) {
                const Rat &t = table(i, j, e);
                if (!t.is_zero()) out[e] += c * t;
            }
        }
    }
    return out;
}

Poly QuotAlg::basis_poly(std::size_t a) const {
    return Poly::monomial(ring(), basis_.at(a), Rat(1));
}

}  // namespace indexform
