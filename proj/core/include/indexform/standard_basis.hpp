#ifndef INDEXFORM_STANDARD_BASIS_HPP
#define INDEXFORM_STANDARD_BASIS_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "indexform/polynomial.hpp"

namespace indexform {

/// Thrown when a reduction exceeds the configured safety degree cap.
/// Mora's algorithm terminates on polynomial input, so hitting the cap
/// means a pathological example rather than an expected outcome.
class SafetyCapExceeded : public std::runtime_error {
  public:
    explicit SafetyCapExceeded(const std::string &what) : std::runtime_error(what) {}
};

/// Standard basis of an ideal in the local ring at the origin under the
/// anti-graded reverse-lexicographic order (see LocalOrder). Generators
/// are monic with pairwise non-divisible leading monomials; the source
/// ideal generators are retained for audit.
class StdBasis {
  public:
    const RingPtr &ring() const { return ring_; }
    const std::vector<Poly> &generators() const { return gens_; }
    const std::vector<Poly> &source_generators() const { return source_; }
    const std::vector<Mono> &leading_monomials() const { return lead_; }

    /// Number of monomials outside the leading-term staircase, or nullopt
    /// when that number is infinite (some variable has no pure power among
    /// the leading monomials).
    std::optional<long> colength() const;

    /// Monomials outside the staircase, sorted by ascending total degree
    /// with the local order breaking ties. Throws on infinite colength.
    std::vector<Mono> staircase_complement() const;

    /// True iff some generator is a unit of the local ring.
    bool is_unit_ideal() const;

  private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    std::vector<Poly> source_;
    std::vector<Mono> lead_;

    friend StdBasis standard_basis(const std::vector<Poly> &, int);
};

/// Mora's tangent-cone algorithm with ecart-minimizing reducer selection
/// and degree-ascending pair selection. Deterministic for a fixed input
/// order. Always terminates for polynomial input; degree_cap aborts with
/// SafetyCapExceeded instead of grinding on pathological cases.
StdBasis standard_basis(const std::vector<Poly> &gens, int degree_cap = 64);

/// Result of Mora head reduction. The exact identity
///   unit * p = sum_i cofactors_i * g_i + head
/// holds in the polynomial ring, unit has constant term 1 (a unit of the
/// local ring), and head is zero or has a leading monomial divisible by no
/// generator's leading monomial.
struct HeadReduction {
    Poly head;
    Poly unit;
    std::vector<Poly> cofactors;  // aligned with sb.generators()
};

HeadReduction mora_head_reduce(const Poly &p, const StdBasis &sb, int degree_cap = 64);

/// Normal form of p modulo the ideal: no term of the result is divisible
/// by a generator's leading monomial. For a finite-colength basis this is
/// the exact class representative supported on the staircase complement
/// (p - result lies in the ideal of the local ring); terms above the
/// staircase top degree may be dropped during reduction because every
/// monomial beyond it lies in the ideal. For infinite colength the result
/// is the weak normal form obtained by iterated head reduction: each of
/// its terms is outside the leading-term staircase, and p is congruent to
/// it only up to local units.
Poly normal_form(const Poly &p, const StdBasis &sb, int degree_cap = 64);

/// Ideal membership in the local ring: true iff head reduction reaches 0.
bool ideal_contains(const StdBasis &sb, const Poly &p, int degree_cap = 64);

}  // namespace indexform

#endif
