#include "indexform/rational.hpp"

#include <cctype>
#include <ostream>

namespace indexform {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(num, den);
    canonicalize();
}

Rat Rat::parse(const std::string &text) {
    if (text.empty()) throw std::invalid_argument("Rat: empty string");
    auto check_digits = [](const std::string &s, const char *what) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument(std::string("Rat: missing digits in ") + what);
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument(std::string("Rat: invalid character in ") + what);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        check_digits(text, "integer");
        return Rat(mpq_class(mpz_class(text)));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_digits(num, "numerator");
    check_digits(den, "denominator");
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return Rat(q);
}

Rat Rat::operator/(const Rat &o) const {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(mpq_class(v_ / o.v_), NoCanon{});
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(mpq_class(1 / v_), NoCanon{});
}

Rat Rat::pow(unsigned e) const {
    Rat result(1);
    Rat base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream &operator<<(std::ostream &os, const Rat &r) { return os << r.str(); }

}  // namespace indexform
