#ifndef INDEXFORM_RATIONAL_HPP
#define INDEXFORM_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace indexform {

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator. Thin value wrapper around GMP's mpq_class so the
/// rest of the library never touches GMP directly.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den);
    explicit Rat(const mpq_class &q) : v_(q) { canonicalize(); }
    explicit Rat(const mpz_class &z) : v_(z) {}

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk
    /// or a zero denominator.
    static Rat parse(const std::string &text);

    Rat operator+(const Rat &o) const { return Rat(mpq_class(v_ + o.v_), NoCanon{}); }
    Rat operator-(const Rat &o) const { return Rat(mpq_class(v_ - o.v_), NoCanon{}); }
    Rat operator*(const Rat &o) const { return Rat(mpq_class(v_ * o.v_), NoCanon{}); }
    Rat operator/(const Rat &o) const;
    Rat operator-() const { return Rat(mpq_class(-v_), NoCanon{}); }

    Rat &operator+=(const Rat &o) { v_ += o.v_; return *this; }
    Rat &operator-=(const Rat &o) { v_ -= o.v_; return *this; }
    Rat &operator*=(const Rat &o) { v_ *= o.v_; return *this; }
    Rat &operator/=(const Rat &o) { *this = *this / o; return *this; }

    bool operator==(const Rat &o) const { return v_ == o.v_; }
    bool operator!=(const Rat &o) const { return v_ != o.v_; }
    bool operator<(const Rat &o) const { return v_ < o.v_; }
    bool operator<=(const Rat &o) const { return v_ <= o.v_; }
    bool operator>(const Rat &o) const { return v_ > o.v_; }
    bool operator>=(const Rat &o) const { return v_ >= o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    /// -1, 0 or +1.
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rat abs() const { return Rat(mpq_class(::abs(v_)), NoCanon{}); }
    Rat inverse() const;
    Rat pow(unsigned e) const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const;

    /// Inexact conversion, used only by diagnostics/benchmark glue.
    double to_double() const { return v_.get_d(); }

    friend std::ostream &operator<<(std::ostream &os, const Rat &r);

  private:
    struct NoCanon {};
    Rat(mpq_class q, NoCanon) : v_(std::move(q)) {}
    void canonicalize() { v_.canonicalize(); }

    mpq_class v_;
};

inline Rat abs(const Rat &r) { return r.abs(); }

}  // namespace indexform

#endif
