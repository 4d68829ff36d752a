#ifndef INDEXFORM_SYMMETRIC_MATRIX_HPP
#define INDEXFORM_SYMMETRIC_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "indexform/rational.hpp"

namespace indexform {

/// Dense symmetric matrix of exact rationals.
class SymMat {
  public:
    explicit SymMat(std::size_t dim) : dim_(dim), a_(dim * dim, Rat(0)) {}

    std::size_t dim() const { return dim_; }
    const Rat &at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    /// Sets both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, const Rat &v) {
        a_[i * dim_ + j] = v;
        a_[j * dim_ + i] = v;
    }

    bool is_symmetric() const;

  private:
    std::size_t dim_;
    std::vector<Rat> a_;
};

/// Exact inertia: counts of positive, negative and zero eigenvalues.
struct SignatureTriple {
    long positive = 0;
    long negative = 0;
    long zero = 0;
    long signature() const { return positive - negative; }
};

/// Exact inertia by symmetric rational elimination: 1x1 pivots on nonzero
/// diagonal entries, hyperbolic 2x2 pivots when the active diagonal is
/// all zero. No floating point.
SignatureTriple signature(const SymMat &m);

}  // namespace indexform

#endif
