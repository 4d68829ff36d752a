#include "indexform/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace indexform {

std::size_t PolyRing::find(const std::string &name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return npos;
}

Poly::Poly(RingPtr ring, const Rat &c) : ring_(std::move(ring)) {
    if (!c.is_zero()) terms_.emplace(Mono(ring_->nvars()), c);
}

Poly Poly::variable(RingPtr ring, std::size_t i) {
    if (i >= ring->nvars()) throw std::out_of_range("Poly::variable: index out of range");
    Poly p(ring);
    p.terms_.emplace(Mono::var(ring->nvars(), i), Rat(1));
    return p;
}

Poly Poly::monomial(RingPtr ring, Mono m, const Rat &c) {
    if (m.nvars() != ring->nvars()) throw std::invalid_argument("Poly::monomial: arity mismatch");
    Poly p(ring);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Poly::same_ring(const Poly &o) const {
    if (ring_ == o.ring_) return true;
    return ring_ && o.ring_ && *ring_ == *o.ring_;
}

void Poly::require_same_ring(const Poly &o) const {
    if (!same_ring(o)) throw std::invalid_argument("Poly: variable context mismatch");
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto &[m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rat Poly::coeff(const Mono &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Mono &m, const Rat &c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly &o) const {
    require_same_ring(o);
    Poly r = *this;
    for (const auto &[m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly &o) const {
    require_same_ring(o);
    Poly r = *this;
    for (const auto &[m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto &[m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly &o) const {
    require_same_ring(o);
    Poly r(ring_);
    for (const auto &[ma, ca] : terms_)
        for (const auto &[mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::scaled(const Rat &c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto &[m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::times_monomial(const Mono &m, const Rat &c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto &[mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result = Poly::constant(ring_, Rat(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        if (e >>= 1u) base *= base;
    }
    return result;
}

bool Poly::operator==(const Poly &o) const {
    if (!same_ring(o)) return false;
    return terms_ == o.terms_;
}

Poly Poly::derivative(std::size_t var_index) const {
    if (var_index >= nvars()) throw std::out_of_range("Poly::derivative: index out of range");
    Poly r(ring_);
    for (const auto &[m, c] : terms_) {
        int e = m.exp(var_index);
        if (e == 0) continue;
        std::vector<int> exps = m.exps();
        exps[var_index] -= 1;
        r.add_term(Mono(std::move(exps)), c * Rat(e));
    }
    return r;
}

Rat Poly::evaluate(const std::vector<Rat> &point) const {
    if (point.size() != nvars()) throw std::invalid_argument("Poly::evaluate: point length mismatch");
    Rat total(0);
    for (const auto &[m, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            int e = m.exp(i);
            if (e > 0) t *= point[i].pow(static_cast<unsigned>(e));
        }
        total += t;
    }
    return total;
}

Poly Poly::substitute(std::size_t var_index, const Poly &q) const {
    if (var_index >= nvars()) throw std::out_of_range("Poly::substitute: index out of range");
    require_same_ring(q);
    Poly r(ring_);
    for (const auto &[m, c] : terms_) {
        std::vector<int> exps = m.exps();
        int e = exps[var_index];
        exps[var_index] = 0;
        Poly t = Poly::monomial(ring_, Mono(std::move(exps)), c);
        if (e > 0) t *= q.pow(static_cast<unsigned>(e));
        r += t;
    }
    return r;
}

Poly Poly::compose(const std::vector<Poly> &images) const {
    if (images.size() != nvars()) throw std::invalid_argument("Poly::compose: arity mismatch");
    RingPtr target = images.empty() ? ring_ : images.front().ring();
    Poly r(target);
    for (const auto &[m, c] : terms_) {
        Poly t = Poly::constant(target, c);
        for (std::size_t i = 0; i < images.size(); ++i) {
            int e = m.exp(i);
            if (e > 0) t *= images[i].pow(static_cast<unsigned>(e));
        }
        r += t;
    }
    return r;
}

const Mono &Poly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("Poly: leading monomial of zero");
    const Mono *best = &terms_.begin()->first;
    for (const auto &[m, c] : terms_)
        if (LocalOrder::greater(m, *best)) best = &m;
    return *best;
}

const Rat &Poly::leading_coeff() const { return terms_.at(leading_monomial()); }

Poly Poly::truncated_above(int bound) const {
    Poly r(ring_);
    for (const auto &[m, c] : terms_)
        if (m.degree() <= bound) r.terms_.emplace(m, c);
    return r;
}

Rat Poly::content() const {
    if (terms_.empty()) return Rat(1);
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto &[m, c] : terms_) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        num_gcd = g;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        den_lcm = l;
    }
    return Rat(mpq_class(num_gcd, den_lcm));
}

Poly Poly::primitive_part() const {
    if (terms_.empty()) return *this;
    return scaled(content().inverse());
}

namespace {

// Print order: ascending total degree, then descending lexicographic on
// the exponent vector (x-heavy terms first within a degree).
bool print_before(const Mono &a, const Mono &b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps() > b.exps();
}

}  // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Mono, Rat> *> order;
    order.reserve(terms_.size());
    for (const auto &t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](auto *a, auto *b) { return print_before(a->first, b->first); });

    std::ostringstream os;
    bool first = true;
    for (const auto *t : order) {
        const Mono &m = t->first;
        Rat c = t->second;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        bool printed_coeff = false;
        if (m.is_one() || !c.is_one()) {
            os << c.str();
            printed_coeff = true;
        }
        bool first_var = !printed_coeff;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m.exp(i) == 0) continue;
            if (!first_var || printed_coeff) os << "*";
            os << ring_->var_name(i);
            if (m.exp(i) > 1) os << "^" << m.exp(i);
            first_var = false;
        }
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Poly &p) { return os << p.str(); }

Poly divexact(const Poly &dividend, const Poly &divisor) {
    if (divisor.is_zero()) throw std::domain_error("divexact: zero divisor");
    Poly rem = dividend;
    Poly quot(dividend.ring());
    // Division by leading terms under a degree-increasing scan terminates
    // because the remainder's top degree never grows.
    auto lead_global = [](const Poly &p) {
        // Max total degree, tie broken by the lexicographically largest
        // exponent vector: a global order, so plain division terminates.
        const Mono *best = nullptr;
        for (const auto &[m, c] : p.terms()) {
            if (!best) { best = &m; continue; }
            int dm = m.degree(), db = best->degree();
            if (dm > db || (dm == db && best->exps() < m.exps())) best = &m;
        }
        return best;
    };
    while (!rem.is_zero()) {
        const Mono *lr = lead_global(rem);
        const Mono *ld = lead_global(divisor);
        if (!ld->divides(*lr)) throw std::domain_error("divexact: division not exact");
        Mono q = *lr / *ld;
        Rat qc = rem.coeff(*lr) / divisor.coeff(*ld);
        quot += Poly::monomial(rem.ring(), q, qc);
        rem -= divisor.times_monomial(q, qc);
    }
    return quot;
}

}  // namespace indexform
