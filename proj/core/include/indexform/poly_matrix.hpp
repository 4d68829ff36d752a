#ifndef INDEXFORM_POLY_MATRIX_HPP
#define INDEXFORM_POLY_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "indexform/polynomial.hpp"

namespace indexform {

/// Dense matrix of polynomials, row-major.
class PolyMat {
  public:
    PolyMat(std::size_t rows, std::size_t cols, RingPtr ring);
    static PolyMat identity(std::size_t n, const RingPtr &ring);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RingPtr &ring() const { return ring_; }

    Poly &at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Poly &at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    PolyMat submatrix(const std::vector<std::size_t> &row_idx,
                      const std::vector<std::size_t> &col_idx) const;

  private:
    std::size_t rows_, cols_;
    RingPtr ring_;
    std::vector<Poly> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. Agrees with cofactor expansion; avoids rational-function
/// intermediates.
Poly determinant(const PolyMat &m);

/// All size x size minors, ordered by the lexicographic enumeration of
/// row index subsets, then column index subsets. Deterministic; the count
/// is C(rows,size)*C(cols,size).
std::vector<Poly> minors(const PolyMat &m, std::size_t size);

/// Both sides of the block-determinant identity
///   det [[A,B],[C,D]] = det A * det(D - C A^{-1} B):
/// first the assembled determinant, then the right side computed over the
/// fraction field with denominators cleared. A must be square with nonzero
/// determinant; dimensions must be compatible.
std::pair<Poly, Poly> block_det_product(const PolyMat &A, const PolyMat &B, const PolyMat &C,
                                        const PolyMat &D);

/// The m x m matrix H of bordered determinants H_ij = det [[A, b_j],[c^i, d_ij]]
/// (b_j the j-th column of B, c^i the i-th row of C).
PolyMat bordered_minor_matrix(const PolyMat &A, const PolyMat &B, const PolyMat &C,
                              const PolyMat &D);

/// The checkable pair for the bordered-minor identity:
///   (det H, (det A)^{m-1} * det [[A,B],[C,D]]).
std::pair<Poly, Poly> bordered_minor_identity(const PolyMat &A, const PolyMat &B,
                                              const PolyMat &C, const PolyMat &D);

/// Assembles [[A,B],[C,D]].
PolyMat assemble_blocks(const PolyMat &A, const PolyMat &B, const PolyMat &C, const PolyMat &D);

}  // namespace indexform

#endif
