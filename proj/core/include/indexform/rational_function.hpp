#ifndef INDEXFORM_RATIONAL_FUNCTION_HPP
#define INDEXFORM_RATIONAL_FUNCTION_HPP

#include "indexform/polynomial.hpp"

namespace indexform {

/// Quotient of two polynomials with a nonzero denominator. No canonical
/// gcd reduction is performed; equality is cross-multiplicative
/// (a/b == c/d iff a*d == c*b). Rational content is stripped to keep
/// coefficient sizes in check.
class RatFunc {
  public:
    RatFunc() = default;
    explicit RatFunc(Poly num);
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const RingPtr &ring, const Rat &c) {
        return RatFunc(Poly::constant(ring, c));
    }

    const Poly &num() const { return num_; }
    const Poly &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc &o) const;
    RatFunc operator-(const RatFunc &o) const;
    RatFunc operator*(const RatFunc &o) const;
    RatFunc operator/(const RatFunc &o) const;
    RatFunc operator-() const;
    RatFunc &operator+=(const RatFunc &o) { *this = *this + o; return *this; }
    RatFunc &operator-=(const RatFunc &o) { *this = *this - o; return *this; }
    RatFunc &operator*=(const RatFunc &o) { *this = *this * o; return *this; }

    /// Cross-multiplied exact equality.
    bool equals(const RatFunc &o) const;

    /// num*den' - num'*den against another representative; zero iff equal.
    Poly cross_difference(const RatFunc &o) const;

    /// d/dx_i by the quotient rule.
    RatFunc derivative(std::size_t var_index) const;

    /// Exact evaluation; throws std::domain_error when the denominator
    /// vanishes at the point.
    Rat evaluate(const std::vector<Rat> &point) const;

    std::string str() const;

  private:
    void normalize();

    Poly num_;
    Poly den_;
};

}  // namespace indexform

#endif
