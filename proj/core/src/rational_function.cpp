#include "indexform/rational_function.hpp"

#include <stdexcept>

namespace indexform {

RatFunc::RatFunc(Poly num) : num_(std::move(num)) {
    den_ = Poly::constant(num_.ring(), Rat(1));
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (!num_.same_ring(den_)) throw std::invalid_argument("RatFunc: context mismatch");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.ring(), Rat(1));
        return;
    }
    // Scale both sides by the denominator's content: value unchanged,
    // denominator primitive.
    Rat cd = den_.content();
    if (!cd.is_one()) {
        Rat inv = cd.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator+(const RatFunc &o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc &o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc &o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc &o) const {
    if (o.num_.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

bool RatFunc::equals(const RatFunc &o) const { return cross_difference(o).is_zero(); }

Poly RatFunc::cross_difference(const RatFunc &o) const {
    return num_ * o.den_ - o.num_ * den_;
}

RatFunc RatFunc::derivative(std::size_t var_index) const {
    Poly dn = num_.derivative(var_index);
    Poly dd = den_.derivative(var_index);
    return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

Rat RatFunc::evaluate(const std::vector<Rat> &point) const {
    Rat d = den_.evaluate(point);
    if (d.is_zero()) throw std::domain_error("RatFunc: denominator vanishes at point");
    return num_.evaluate(point) / d;
}

std::string RatFunc::str() const {
    if (den_.is_constant() && den_.constant_term().is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace indexform
