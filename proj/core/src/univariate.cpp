#include "indexform/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace indexform {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat &c) {
    UniPoly p;
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

UniPoly UniPoly::from_long(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.push_back(Rat(c));
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat &UniPoly::coeff(std::size_t i) const {
    static const Rat zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const Rat &UniPoly::lc() const {
    if (c_.empty()) throw std::domain_error("UniPoly: leading coefficient of zero");
    return c_.back();
}

Rat UniPoly::eval(const Rat &x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly &o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly &o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    std::vector<Rat> v;
    v.reserve(c_.size());
    for (const auto &c : c_) v.push_back(-c);
    UniPoly p;
    p.c_ = std::move(v);
    return p;
}

UniPoly UniPoly::operator*(const UniPoly &o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rat &c) const {
    if (c.is_zero()) return UniPoly();
    std::vector<Rat> v;
    v.reserve(c_.size());
    for (const auto &a : c_) v.push_back(a * c);
    UniPoly p;
    p.c_ = std::move(v);
    return p;
}

UniPoly UniPoly::shifted(std::size_t k) const {
    if (is_zero()) return UniPoly();
    std::vector<Rat> v(k, Rat(0));
    v.insert(v.end(), c_.begin(), c_.end());
    UniPoly p;
    p.c_ = std::move(v);
    return p;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly result = UniPoly::constant(Rat(1));
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        if (e >>= 1u) base = base * base;
    }
    return result;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> v(c_.size() - 1, Rat(0));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly &divisor) const {
    if (divisor.is_zero()) throw std::domain_error("UniPoly: division by zero");
    UniPoly rem = *this;
    std::vector<Rat> q(rem.c_.size() > divisor.c_.size() ? rem.c_.size() - divisor.c_.size() + 1 : 1,
                       Rat(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - divisor.degree());
        Rat factor = rem.lc() / divisor.lc();
        q[shift] += factor;
        rem = rem - divisor.shifted(shift).scaled(factor);
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return scaled(lc().inverse());
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return UniPoly();
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto &c : c_) {
        if (c.is_zero()) continue;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        num_gcd = g;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        den_lcm = l;
    }
    Rat content(mpq_class(num_gcd, den_lcm));
    return scaled(content.inverse());
}

UniPoly gcd(const UniPoly &a, const UniPoly &b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divrem(y).second.primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly squarefree_part(const UniPoly &p) {
    if (p.degree() <= 0) return p.monic();
    UniPoly g = gcd(p, p.derivative());
    return p.divrem(g).first.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly &p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() <= 0) return out;
    // Yun's algorithm over characteristic zero.
    UniPoly d = p.derivative();
    UniPoly a = gcd(p, d);
    UniPoly b = p.divrem(a).first;
    UniPoly c = d.divrem(a).first;
    int mult = 1;
    for (;;) {
        UniPoly w = c - b.derivative();
        UniPoly factor = gcd(b, w);
        if (factor.degree() > 0) out.emplace_back(factor, mult);
        b = b.divrem(factor).first;
        c = w.divrem(factor).first;
        ++mult;
        if (b.degree() <= 0) break;
    }
    return out;
}

std::vector<UniPoly> sturm_chain(const UniPoly &p) {
    std::vector<UniPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p.primitive());
    UniPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive());
    for (;;) {
        const UniPoly &g1 = chain[chain.size() - 2];
        const UniPoly &g2 = chain[chain.size() - 1];
        UniPoly r = g1.divrem(g2).second;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive());
    }
    return chain;
}

namespace {

int sign_variations(const std::vector<UniPoly> &chain, const Rat &x) {
    int count = 0, last = 0;
    for (const auto &p : chain) {
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

long sturm_count(const std::vector<UniPoly> &chain, const Rat &a, const Rat &b) {
    if (chain.empty()) return 0;
    return sign_variations(chain, a) - sign_variations(chain, b);
}

long count_real_roots(const UniPoly &p) {
    UniPoly sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    Rat b = cauchy_root_bound(sf) + Rat(1);
    auto chain = sturm_chain(sf);
    return sturm_count(chain, -b, b);
}

Rat cauchy_root_bound(const UniPoly &p) {
    if (p.degree() <= 0) return Rat(0);
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat r = (p.coeff(static_cast<std::size_t>(i)) / p.lc()).abs();
        if (r > m) m = r;
    }
    return Rat(1) + m;
}

namespace {

// q(y) with |roots of q| = |roots of p|^2 (Graeffe root-squaring step):
// the even part of p(x) * p(-x).
UniPoly graeffe_step(const UniPoly &p) {
    std::vector<Rat> neg;
    neg.reserve(p.coeffs().size());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        neg.push_back(i % 2 == 0 ? p.coeff(i) : -p.coeff(i));
    UniPoly prod = p * UniPoly(std::move(neg));
    std::vector<Rat> even;
    for (std::size_t i = 0; i < prod.coeffs().size(); i += 2) even.push_back(prod.coeff(i));
    return UniPoly(std::move(even));
}

// Fujiwara: all roots have |z| <= 2 max(|a_{d-1}/a_d|, |a_{d-2}/a_d|^{1/2},
// ..., |a_0/(2 a_d)|^{1/d}). Certifies |z| <= t without extracting roots.
bool fujiwara_certifies(const UniPoly &p, const Rat &t) {
    int d = p.degree();
    if (d <= 0) return true;
    if (t.sign() < 0) return false;
    Rat half = t / Rat(2);
    Rat lc_abs = p.lc().abs();
    Rat power(1);
    for (int i = 1; i <= d; ++i) {
        power *= half;  // (t/2)^i
        Rat bound = lc_abs * power;
        if (i == d) bound *= Rat(2);
        if (p.coeff(static_cast<std::size_t>(d - i)).abs() > bound) return false;
    }
    return true;
}

// Divides out the t^m factor; those roots are exactly zero.
UniPoly strip_zero_roots(const UniPoly &p) {
    if (p.is_zero()) return p;
    std::size_t m = 0;
    while (p.coeff(m).is_zero()) ++m;
    if (m == 0) return p;
    std::vector<Rat> v(p.coeffs().begin() + static_cast<long>(m), p.coeffs().end());
    return UniPoly(std::move(v));
}

}  // namespace

bool roots_within(const UniPoly &p, const Rat &t, int graeffe_steps) {
    if (p.is_zero()) throw std::domain_error("roots_within: zero polynomial");
    if (t.sign() < 0) return false;
    UniPoly q = strip_zero_roots(p);
    if (q.degree() <= 0) return true;
    Rat power = t;
    for (int s = 0; s <= graeffe_steps; ++s) {
        if (fujiwara_certifies(q, power)) return true;
        if (s == graeffe_steps) break;
        q = graeffe_step(q);
        power *= power;
    }
    return false;
}

Rat certified_root_radius(const UniPoly &p, int refine_steps) {
    UniPoly q = strip_zero_roots(p);
    if (q.degree() <= 0) return Rat(0);
    Rat hi = cauchy_root_bound(q);
    if (!roots_within(q, hi)) return hi;  // fall back to Cauchy itself
    Rat lo(0);
    for (int i = 0; i < refine_steps; ++i) {
        Rat mid = (lo + hi) / Rat(2);
        if (roots_within(q, mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

std::vector<RootInterval> isolate_real_roots(const UniPoly &p) {
    std::vector<RootInterval> out;
    if (p.degree() <= 0) return out;
    auto chain = sturm_chain(p);
    Rat bound = cauchy_root_bound(p) + Rat(1);

    struct Seg {
        Rat lo, hi;
        long count;
    };
    std::vector<Seg> stack;
    long total = sturm_count(chain, -bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});

    while (!stack.empty()) {
        Seg seg = stack.back();
        stack.pop_back();
        if (seg.count == 1) {
            // Shrink until endpoints are non-roots (they are by
            // construction) -- record directly.
            out.push_back(RootInterval{false, Rat(0), seg.lo, seg.hi});
            continue;
        }
        Rat mid = (seg.lo + seg.hi) / Rat(2);
        if (p.eval(mid).is_zero()) {
            out.push_back(RootInterval{true, mid, mid, mid});
            // Exclude an interval around mid containing no other root.
            Rat w = (seg.hi - seg.lo) / Rat(4);
            for (;;) {
                if (!p.eval(mid - w).is_zero() && !p.eval(mid + w).is_zero() &&
                    sturm_count(chain, mid - w, mid + w) == 1)
                    break;
                w /= Rat(2);
            }
            long left = sturm_count(chain, seg.lo, mid - w);
            long right = sturm_count(chain, mid + w, seg.hi);
            if (left > 0) stack.push_back({seg.lo, mid - w, left});
            if (right > 0) stack.push_back({mid + w, seg.hi, right});
        } else {
            long left = sturm_count(chain, seg.lo, mid);
            long right = sturm_count(chain, mid, seg.hi);
            if (left > 0) stack.push_back({seg.lo, mid, left});
            if (right > 0) stack.push_back({mid, seg.hi, right});
        }
    }
    std::sort(out.begin(), out.end(), [](const RootInterval &a, const RootInterval &b) {
        Rat am = a.exact ? a.point : (a.lo + a.hi) / Rat(2);
        Rat bm = b.exact ? b.point : (b.lo + b.hi) / Rat(2);
        return am < bm;
    });
    return out;
}

UniPoly mod_reduce(const UniPoly &p, const UniPoly &modulus) {
    if (modulus.degree() < 1) throw std::domain_error("mod_reduce: modulus must have degree >= 1");
    return p.divrem(modulus).second;
}

UniPoly mod_mul(const UniPoly &a, const UniPoly &b, const UniPoly &modulus) {
    return mod_reduce(a * b, modulus);
}

UniPoly mod_pow(const UniPoly &a, unsigned e, const UniPoly &modulus) {
    UniPoly result = UniPoly::constant(Rat(1));
    UniPoly base = mod_reduce(a, modulus);
    while (e > 0) {
        if (e & 1u) result = mod_mul(result, base, modulus);
        if (e >>= 1u) base = mod_mul(base, base, modulus);
    }
    return result;
}

UniPoly mod_inverse(const UniPoly &a, const UniPoly &modulus) {
    // Extended Euclid: maintain r = u * a (mod modulus).
    UniPoly r0 = modulus, r1 = mod_reduce(a, modulus);
    UniPoly u0, u1 = UniPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, rem] = r0.divrem(r1);
        UniPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = mod_reduce(u2, modulus);
    }
    if (r0.degree() != 0) throw std::domain_error("mod_inverse: element not invertible");
    return mod_reduce(u0.scaled(r0.lc().inverse()), modulus);
}

Rat trace_of_multiplication(const UniPoly &w, const UniPoly &modulus) {
    const int n = modulus.degree();
    if (n < 1) throw std::domain_error("trace_of_multiplication: modulus degree < 1");
    UniPoly wr = mod_reduce(w, modulus);
    Rat tr(0);
    UniPoly cur = wr;  // t^0 * w
    tr += cur.coeff(0);
    UniPoly t = UniPoly::from_long({0, 1});
    for (int i = 1; i < n; ++i) {
        cur = mod_mul(cur, t, modulus);  // t^i * w
        tr += cur.coeff(static_cast<std::size_t>(i));
    }
    return tr;
}

}  // namespace indexform
