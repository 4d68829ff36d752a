#include "indexform/poly_matrix.hpp"

#include <stdexcept>

namespace indexform {

PolyMat::PolyMat(std::size_t rows, std::size_t cols, RingPtr ring)
    : rows_(rows), cols_(cols), ring_(std::move(ring)),
      entries_(rows * cols, Poly::zero(ring_)) {}

PolyMat PolyMat::identity(std::size_t n, const RingPtr &ring) {
    PolyMat m(n, n, ring);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(ring, Rat(1));
    return m;
}

PolyMat PolyMat::submatrix(const std::vector<std::size_t> &row_idx,
                           const std::vector<std::size_t> &col_idx) const {
    PolyMat s(row_idx.size(), col_idx.size(), ring_);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) s.at(i, j) = at(row_idx[i], col_idx[j]);
    return s;
}

Poly determinant(const PolyMat &m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    const std::size_t n = m.rows();
    const RingPtr &ring = m.ring();
    if (n == 0) return Poly::constant(ring, Rat(1));

    PolyMat work = m;
    Poly prev = Poly::constant(ring, Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (work.at(k, k).is_zero()) {
            std::size_t pivot = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!work.at(i, k).is_zero()) { pivot = i; break; }
            if (pivot == k) return Poly::zero(ring);  // whole column zero
            for (std::size_t j = 0; j < n; ++j) std::swap(work.at(k, j), work.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = work.at(i, j) * work.at(k, k) - work.at(i, k) * work.at(k, j);
                work.at(i, j) = divexact(num, prev);
            }
            work.at(i, k) = Poly::zero(ring);
        }
        prev = work.at(k, k);
    }
    Poly det = work.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

namespace {

// All size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        std::size_t i = k;
        bool can_advance = false;
        while (i-- > 0) {
            if (cur[i] < i + n - k) {
                can_advance = true;
                break;
            }
        }
        if (!can_advance) break;
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace

std::vector<Poly> minors(const PolyMat &m, std::size_t size) {
    if (size > m.rows() || size > m.cols())
        throw std::invalid_argument("minors: size exceeds matrix dimensions");
    std::vector<Poly> out;
    auto row_sets = subsets(m.rows(), size);
    auto col_sets = subsets(m.cols(), size);
    out.reserve(row_sets.size() * col_sets.size());
    for (const auto &rs : row_sets)
        for (const auto &cs : col_sets) out.push_back(determinant(m.submatrix(rs, cs)));
    return out;
}

PolyMat assemble_blocks(const PolyMat &A, const PolyMat &B, const PolyMat &C, const PolyMat &D) {
    const std::size_t l = A.rows(), m = D.rows();
    if (A.cols() != l || B.rows() != l || B.cols() != m || C.rows() != m || C.cols() != l ||
        D.cols() != m)
        throw std::invalid_argument("assemble_blocks: incompatible block dimensions");
    PolyMat full(l + m, l + m, A.ring());
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) full.at(i, j) = A.at(i, j);
        for (std::size_t j = 0; j < m; ++j) full.at(i, l + j) = B.at(i, j);
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < l; ++j) full.at(l + i, j) = C.at(i, j);
        for (std::size_t j = 0; j < m; ++j) full.at(l + i, l + j) = D.at(i, j);
    }
    return full;
}

namespace {

// N = detA * (D - C A^{-1} B), entrywise polynomial via Cramer's rule:
// (A^{-1} B)_{sj} = det(A with column s replaced by b_j) / det A.
PolyMat schur_numerator(const PolyMat &A, const PolyMat &B, const PolyMat &C, const PolyMat &D,
                        const Poly &detA) {
    const std::size_t l = A.rows(), m = D.rows();
    PolyMat cramer(l, m, A.ring());  // cramer(s,j) = det(A with col s := b_j)
    for (std::size_t s = 0; s < l; ++s) {
        for (std::size_t j = 0; j < m; ++j) {
            PolyMat repl = A;
            for (std::size_t r = 0; r < l; ++r) repl.at(r, s) = B.at(r, j);
            cramer.at(s, j) = determinant(repl);
        }
    }
    PolyMat N(m, m, A.ring());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            Poly acc = D.at(i, j) * detA;
            for (std::size_t s = 0; s < l; ++s) acc -= C.at(i, s) * cramer.at(s, j);
            N.at(i, j) = acc;
        }
    }
    return N;
}

}  // namespace

std::pair<Poly, Poly> block_det_product(const PolyMat &A, const PolyMat &B, const PolyMat &C,
                                        const PolyMat &D) {
    PolyMat full = assemble_blocks(A, B, C, D);
    Poly detA = determinant(A);
    if (detA.is_zero()) throw std::domain_error("block_det_product: det A = 0");
    const std::size_t m = D.rows();
    Poly lhs = determinant(full);
    // detA * det(D - C A^{-1} B) = det(N) / detA^{m-1} with N as above.
    Poly detN = determinant(schur_numerator(A, B, C, D, detA));
    Poly rhs = m <= 1 ? detN : divexact(detN, detA.pow(static_cast<unsigned>(m - 1)));
    return {lhs, rhs};
}

PolyMat bordered_minor_matrix(const PolyMat &A, const PolyMat &B, const PolyMat &C,
                              const PolyMat &D) {
    const std::size_t l = A.rows(), m = D.rows();
    if (A.cols() != l || B.rows() != l || B.cols() != m || C.rows() != m || C.cols() != l ||
        D.cols() != m)
        throw std::invalid_argument("bordered_minor_matrix: incompatible block dimensions");
    if (determinant(A).is_zero()) throw std::domain_error("bordered_minor_matrix: det A = 0");
    PolyMat H(m, m, A.ring());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            PolyMat bordered(l + 1, l + 1, A.ring());
            for (std::size_t r = 0; r < l; ++r) {
                for (std::size_t c = 0; c < l; ++c) bordered.at(r, c) = A.at(r, c);
                bordered.at(r, l) = B.at(r, j);
            }
            for (std::size_t c = 0; c < l; ++c) bordered.at(l, c) = C.at(i, c);
            bordered.at(l, l) = D.at(i, j);
            H.at(i, j) = determinant(bordered);
        }
    }
    return H;
}

std::pair<Poly, Poly> bordered_minor_identity(const PolyMat &A, const PolyMat &B,
                                              const PolyMat &C, const PolyMat &D) {
    PolyMat H = bordered_minor_matrix(A, B, C, D);
    Poly lhs = determinant(H);
    Poly detA = determinant(A);
    const std::size_t m = D.rows();
    Poly rhs = determinant(assemble_blocks(A, B, C, D));
    if (m >= 1) rhs *= detA.pow(static_cast<unsigned>(m - 1));
    return {lhs, rhs};
}

}  // namespace indexform
