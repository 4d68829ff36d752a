#ifndef INDEXFORM_UNIVARIATE_HPP
#define INDEXFORM_UNIVARIATE_HPP

#include <utility>
#include <vector>

#include "indexform/rational.hpp"

namespace indexform {

/// Dense univariate polynomial over Rat. Coefficient i belongs to t^i;
/// the top coefficient is nonzero (the zero polynomial has no
/// coefficients).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    static UniPoly constant(const Rat &c);
    static UniPoly from_long(std::initializer_list<long> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat &coeff(std::size_t i) const;
    const Rat &lc() const;
    const std::vector<Rat> &coeffs() const { return c_; }

    Rat eval(const Rat &x) const;

    UniPoly operator+(const UniPoly &o) const;
    UniPoly operator-(const UniPoly &o) const;
    UniPoly operator*(const UniPoly &o) const;
    UniPoly operator-() const;
    UniPoly scaled(const Rat &c) const;
    UniPoly shifted(std::size_t k) const;  // * t^k
    UniPoly pow(unsigned e) const;

    bool operator==(const UniPoly &o) const { return c_ == o.c_; }

    UniPoly derivative() const;
    /// Quotient and remainder; divisor nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly &divisor) const;
    /// Monic normalization (zero stays zero).
    UniPoly monic() const;
    /// Coefficients scaled to integers with gcd 1, sign of lc kept.
    UniPoly primitive() const;

  private:
    void trim();
    std::vector<Rat> c_;
};

/// Monic gcd.
UniPoly gcd(const UniPoly &a, const UniPoly &b);

/// p / gcd(p, p'): same roots, all simple.
UniPoly squarefree_part(const UniPoly &p);

/// Yun decomposition: list of (factor, multiplicity) with factors
/// squarefree, pairwise coprime, and p = lc * prod factor^multiplicity.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly &p);

/// Sturm chain of p (signed-remainder sequence, content-normalized).
std::vector<UniPoly> sturm_chain(const UniPoly &p);

/// Number of distinct real roots in (a, b], via a precomputed chain.
long sturm_count(const std::vector<UniPoly> &chain, const Rat &a, const Rat &b);

/// Number of distinct real roots of p (whole line).
long count_real_roots(const UniPoly &p);

/// Cauchy bound: every complex root has |z| <= 1 + max |a_i / a_d|.
Rat cauchy_root_bound(const UniPoly &p);

/// Certificate that every complex root of p satisfies |z| <= t, by the
/// Fujiwara inequalities sharpened with Graeffe root-squaring. Sound;
/// complete in the limit of iterations.
bool roots_within(const UniPoly &p, const Rat &t, int graeffe_steps = 8);

/// A certified upper bound on the largest root modulus, tightened by
/// binary search over roots_within.
Rat certified_root_radius(const UniPoly &p, int refine_steps = 40);

/// Isolating interval for one real root of a squarefree polynomial:
/// either an exact rational root or an open interval (lo, hi) containing
/// exactly one root, with lo, hi non-roots.
struct RootInterval {
    bool exact = false;
    Rat point;    // valid when exact
    Rat lo, hi;   // valid when !exact
};

/// Disjoint isolating intervals for all real roots of a squarefree p,
/// in increasing root order.
std::vector<RootInterval> isolate_real_roots(const UniPoly &p);

/// Arithmetic in Q[t]/(modulus). Used for trace computations over the
/// algebra of fiber zeros.
UniPoly mod_reduce(const UniPoly &p, const UniPoly &modulus);
UniPoly mod_mul(const UniPoly &a, const UniPoly &b, const UniPoly &modulus);
UniPoly mod_pow(const UniPoly &a, unsigned e, const UniPoly &modulus);
/// Inverse modulo the modulus; throws std::domain_error when not coprime.
UniPoly mod_inverse(const UniPoly &a, const UniPoly &modulus);
/// Trace of the multiplication-by-w operator on Q[t]/(modulus).
Rat trace_of_multiplication(const UniPoly &w, const UniPoly &modulus);

}  // namespace indexform

#endif
