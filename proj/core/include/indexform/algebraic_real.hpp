#ifndef INDEXFORM_ALGEBRAIC_REAL_HPP
#define INDEXFORM_ALGEBRAIC_REAL_HPP

#include "indexform/univariate.hpp"

namespace indexform {

/// A real algebraic number: a root of a squarefree defining polynomial,
/// pinned down either exactly (a rational) or by an isolating interval
/// with non-root endpoints. Supports exact sign evaluation of arbitrary
/// rational polynomials at the number; all decisions are tolerance-free.
/// Refinement only sharpens the representation, so it is const.
class AlgebraicReal {
  public:
    AlgebraicReal(UniPoly defining_squarefree, RootInterval iv);

    bool is_rational() const { return exact_; }
    const Rat &rational_value() const { return point_; }
    Rat lower() const { return exact_ ? point_ : lo_; }
    Rat upper() const { return exact_ ? point_ : hi_; }
    const UniPoly &defining() const { return poly_; }

    /// Halves the isolating interval (no-op for rational points). May
    /// discover the root is rational.
    void refine() const;

    /// Exact sign of q at this number: -1, 0 or +1.
    int sign_of(const UniPoly &q) const;

    /// Exact comparison against a rational: sign of (this - x).
    int compare(const Rat &x) const;

  private:
    UniPoly poly_;
    std::vector<UniPoly> chain_;
    mutable bool exact_;
    mutable Rat point_;
    mutable Rat lo_, hi_;
};

/// All real roots of p (squarefree part taken internally), increasing.
std::vector<AlgebraicReal> real_roots_of(const UniPoly &p);

}  // namespace indexform

#endif
