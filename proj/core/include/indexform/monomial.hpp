#ifndef INDEXFORM_MONOMIAL_HPP
#define INDEXFORM_MONOMIAL_HPP

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace indexform {

/// Exponent vector of a power product. Its length is fixed by the ambient
/// variable context; all exponents are non-negative.
class Mono {
  public:
    Mono() = default;
    explicit Mono(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Mono(std::vector<int> exps) : exps_(std::move(exps)) {
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("Mono: negative exponent");
    }

    static Mono one(std::size_t nvars) { return Mono(nvars); }
    static Mono var(std::size_t nvars, std::size_t i, int e = 1) {
        Mono m(nvars);
        m.exps_.at(i) = e;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    int exp(std::size_t i) const { return exps_[i]; }
    const std::vector<int> &exps() const { return exps_; }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
    bool is_one() const {
        for (int e : exps_)
            if (e != 0) return false;
        return true;
    }

    bool divides(const Mono &m) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    Mono operator*(const Mono &m) const {
        Mono r = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += m.exps_[i];
        return r;
    }

    /// Exact quotient; caller guarantees divisibility.
    Mono operator/(const Mono &m) const {
        Mono r = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            r.exps_[i] -= m.exps_[i];
            if (r.exps_[i] < 0) throw std::domain_error("Mono: non-divisible quotient");
        }
        return r;
    }

    Mono lcm(const Mono &m) const {
        Mono r = *this;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (m.exps_[i] > r.exps_[i]) r.exps_[i] = m.exps_[i];
        return r;
    }

    bool coprime(const Mono &m) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && m.exps_[i] > 0) return false;
        return true;
    }

    bool operator==(const Mono &m) const { return exps_ == m.exps_; }
    bool operator!=(const Mono &m) const { return exps_ != m.exps_; }
    /// Plain lexicographic compare on the exponent vector. Storage order
    /// only; the algebra never depends on it.
    bool operator<(const Mono &m) const { return exps_ < m.exps_; }

  private:
    std::vector<int> exps_;
};

/// The local degree order used throughout: anti-graded, reverse
/// lexicographic tiebreak. 1 is the largest monomial; lower total degree
/// compares larger; within a degree the monomial with the smaller exponent
/// in the last differing variable (scanning from the last variable) is
/// larger. Compatible with multiplication, and a well-order on each slice
/// of bounded degree.
struct LocalOrder {
    /// Returns true when a is strictly larger than b in the order.
    static bool greater(const Mono &a, const Mono &b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        for (std::size_t i = a.nvars(); i-- > 0;) {
            if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i);
        }
        return false;
    }
    static bool less(const Mono &a, const Mono &b) { return greater(b, a); }
};

}  // namespace indexform

#endif
