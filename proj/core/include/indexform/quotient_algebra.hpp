#ifndef INDEXFORM_QUOTIENT_ALGEBRA_HPP
#define INDEXFORM_QUOTIENT_ALGEBRA_HPP

#include <vector>

#include "indexform/standard_basis.hpp"

namespace indexform {

/// Finite-dimensional quotient of the local ring by a finite-colength
/// ideal: the staircase-complement monomial basis together with the full
/// multiplication table. [phi_a]*[phi_b] = sum_e table(a,b,e) [phi_e].
class QuotAlg {
  public:
    /// Builds basis and multiplication table. Throws std::domain_error on
    /// infinite colength.
    explicit QuotAlg(StdBasis sb);

    const StdBasis &basis_of_ideal() const { return sb_; }
    const RingPtr &ring() const { return sb_.ring(); }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Mono> &basis() const { return basis_; }

    /// Index of a basis monomial; throws if m is not in the basis.
    std::size_t basis_index(const Mono &m) const;

    /// Structure constants: coefficient of phi_e in [phi_a][phi_b].
    const Rat &table(std::size_t a, std::size_t b, std::size_t e) const {
        return table_[(a * basis_.size() + b) * basis_.size() + e];
    }

    /// Coordinates of the class of p in the monomial basis.
    std::vector<Rat> coordinates(const Poly &p) const;

    /// Product of two coordinate vectors via the multiplication table.
    std::vector<Rat> multiply(const std::vector<Rat> &a, const std::vector<Rat> &b) const;

    /// The basis monomial as a polynomial.
    Poly basis_poly(std::size_t a) const;

  private:
    StdBasis sb_;
    std::vector<Mono> basis_;
    std::vector<Rat> table_;
};

}  // namespace indexform

#endif
