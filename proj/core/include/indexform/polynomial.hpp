#ifndef INDEXFORM_POLYNOMIAL_HPP
#define INDEXFORM_POLYNOMIAL_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "indexform/monomial.hpp"
#include "indexform/rational.hpp"

namespace indexform {

/// Ambient variable context: an ordered list of variable names. Shared
/// immutably by every polynomial built over it.
class PolyRing {
  public:
    explicit PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    std::size_t nvars() const { return vars_.size(); }
    const std::string &var_name(std::size_t i) const { return vars_.at(i); }
    const std::vector<std::string> &var_names() const { return vars_; }

    /// Index of a variable name, or npos.
    std::size_t find(const std::string &name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool operator==(const PolyRing &o) const { return vars_ == o.vars_; }

  private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const PolyRing>(std::move(vars));
}

/// Sparse multivariate polynomial over Rat in canonical form: a term map
/// with no stored zero coefficients. Two polynomials over the same context
/// are equal iff their term maps are equal. All operations are pure.
class Poly {
  public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, const Rat &c);

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, const Rat &c) { return Poly(std::move(ring), c); }
    static Poly variable(RingPtr ring, std::size_t i);
    static Poly monomial(RingPtr ring, Mono m, const Rat &c);

    const RingPtr &ring() const { return ring_; }
    std::size_t nvars() const { return ring_ ? ring_->nvars() : 0; }
    bool same_ring(const Poly &o) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Rat> &terms() const { return terms_; }

    /// Max total degree over terms; -1 for the zero polynomial.
    int total_degree() const;
    Rat coeff(const Mono &m) const;
    Rat constant_term() const { return coeff(Mono(nvars())); }

    Poly operator+(const Poly &o) const;
    Poly operator-(const Poly &o) const;
    Poly operator*(const Poly &o) const;
    Poly operator-() const;
    Poly &operator+=(const Poly &o) { *this = *this + o; return *this; }
    Poly &operator-=(const Poly &o) { *this = *this - o; return *this; }
    Poly &operator*=(const Poly &o) { *this = *this * o; return *this; }

    Poly scaled(const Rat &c) const;
    Poly times_monomial(const Mono &m, const Rat &c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly &o) const;
    bool operator!=(const Poly &o) const { return !(*this == o); }

    /// Exact formal partial derivative with respect to variable var_index.
    Poly derivative(std::size_t var_index) const;

    /// Exact evaluation at a rational point (one value per variable).
    Rat evaluate(const std::vector<Rat> &point) const;

    /// Capture-free substitution of q for variable var_index.
    Poly substitute(std::size_t var_index, const Poly &q) const;

    /// Simultaneous substitution x_i := images[i].
    Poly compose(const std::vector<Poly> &images) const;

    /// Leading monomial / coefficient / term under the local order.
    /// Undefined on zero (throws).
    const Mono &leading_monomial() const;
    const Rat &leading_coeff() const;

    /// Drops every term of total degree strictly greater than bound.
    Poly truncated_above(int bound) const;

    /// Largest positive rational c with p/c having integer, gcd-1
    /// coefficients (sign not normalized). Zero polynomial yields 1.
    Rat content() const;
    /// this / content(), keeping the leading sign.
    Poly primitive_part() const;

    /// Canonical text form, parseable by parse_poly. Terms are printed by
    /// ascending total degree, ties broken lexicographically.
    std::string str() const;

    friend std::ostream &operator<<(std::ostream &os, const Poly &p);

  private:
    void add_term(const Mono &m, const Rat &c);
    void require_same_ring(const Poly &o) const;

    RingPtr ring_;
    std::map<Mono, Rat> terms_;

    friend class PolyBuilder;
};

/// Accumulates terms without intermediate canonicalization cost.
class PolyBuilder {
  public:
    explicit PolyBuilder(RingPtr ring) : poly_(std::move(ring)) {}
    void add(const Mono &m, const Rat &c) { poly_.add_term(m, c); }
    Poly take() { return std::move(poly_); }

  private:
    Poly poly_;
};

/// Exact division: returns q with q*divisor == dividend. Throws
/// std::domain_error if the division is not exact.
Poly divexact(const Poly &dividend, const Poly &divisor);

}  // namespace indexform

#endif
