#ifndef INDEXFORM_TESTS_HELPERS_HPP
#define INDEXFORM_TESTS_HELPERS_HPP

#include <random>
#include <stdexcept>
#include <vector>

#include "indexform/germ_problem.hpp"
#include "indexform/plane_fiber.hpp"
#include "indexform/poly_matrix.hpp"
#include "indexform/poly_parser.hpp"

namespace testutil {

using namespace indexform;

inline RingPtr ring2() {
    static RingPtr r = make_ring({"x", "y"});
    return r;
}

inline RingPtr ring3() {
    static RingPtr r = make_ring({"x", "y", "z"});
    return r;
}

inline Poly P(const std::string &text, const RingPtr &ring) { return parse_poly(text, ring); }

inline Rat rr(long num, long den = 1) { return Rat(num, den); }

/// Independent determinant oracle: recursive cofactor expansion along the
/// first row.
inline Poly cofactor_det(const PolyMat &m) {
    const std::size_t n = m.rows();
    if (n == 0) return Poly::constant(m.ring(), Rat(1));
    if (n == 1) return m.at(0, 0);
    Poly acc = Poly::zero(m.ring());
    std::vector<std::size_t> rows;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        Poly sub = cofactor_det(m.submatrix(rows, cols));
        Poly term = m.at(0, j) * sub;
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline Rat random_rat(std::mt19937_64 &rng, long lo = -5, long hi = 5, long dmax = 3) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, dmax);
    return Rat(num(rng), den(rng));
}

/// Random polynomial of total degree <= deg with ~density nonzero terms.
inline Poly random_poly(std::mt19937_64 &rng, const RingPtr &ring, int deg,
                        bool zero_constant = false) {
    const std::size_t n = ring->nvars();
    Poly p = Poly::zero(ring);
    std::vector<int> e(n, 0);
    std::uniform_int_distribution<int> coin(0, 2);
    for (;;) {
        int total = 0;
        for (std::size_t i = 0; i < n; ++i) total += e[i];
        if (total <= deg && !(zero_constant && total == 0) && coin(rng) == 0) {
            Rat c = random_rat(rng);
            if (!c.is_zero()) p += Poly::monomial(ring, Mono(std::vector<int>(e)), c);
        }
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] <= deg) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return p;
}

struct Fixture {
    const char *name;
    GermProblem germ;
};

inline GermProblem germ2(const std::string &f, const std::string &a1, const std::string &a2) {
    GermProblem g;
    g.ring = ring2();
    g.f = {P(f, g.ring)};
    g.A = {P(a1, g.ring), P(a2, g.ring)};
    g.validate();
    return g;
}

inline GermProblem germ2_smooth(const std::string &a1, const std::string &a2) {
    GermProblem g;
    g.ring = ring2();
    g.A = {P(a1, g.ring), P(a2, g.ring)};
    g.validate();
    return g;
}

inline GermProblem cusp_paper() { return germ2("x^2 + y^3", "3*y^2", "-2*x"); }
inline GermProblem cusp_dy() { return germ2("x^2 + y^3", "0", "1"); }
inline GermProblem cusp_dx() { return germ2("x^2 + y^3", "1", "0"); }
inline GermProblem morse_dx() { return germ2("x^2 + y^2", "1", "0"); }
inline GermProblem xpow2_ypow5_dy() { return germ2("x^2 + y^5", "0", "1"); }
inline GermProblem x3y4_linear() { return germ2("x^3 + y^4", "2", "3"); }
// d(xy) on the cusp: quasihomogeneous zero system (2x^2 - 3y^3 with the
// cusp's weights), so all six affine zeros collapse to the origin with
// epsilon and the trace functional sees exactly the local algebra.
inline GermProblem cusp_dxy() { return germ2("x^2 + y^3", "y", "x"); }

/// Brute-force oracle for the smooth (k=0, n=2) real index: perturb omega
/// by small constants, solve the perturbed plane system exactly by
/// elimination, and sum the signs of the Jacobian determinant over the
/// real zeros. Fully independent of the quadratic-form route.
inline long perturbed_sign_count_oracle(const GermProblem &g, const Rat &a, const Rat &b) {
    const RingPtr &r = g.ring;
    Poly p1 = g.A[0] - Poly::constant(r, a);
    Poly p2 = g.A[1] - Poly::constant(r, b);
    Poly res = resultant_wrt(p1, p2, 1);  // eliminate y
    if (res.is_zero()) throw std::runtime_error("oracle: shared component");
    SolutionSet sol;
    sol.r = to_unipoly(res, 0);
    sol.r_squarefree = squarefree_part(sol.r);
    auto [s1, s0] = first_subresultant_wrt(p1, p2, 1);
    sol.param_s1 = to_unipoly(s1, 0);
    sol.param_s0 = to_unipoly(s0, 0);
    if (gcd(sol.r_squarefree, sol.param_s1).degree() != 0)
        throw std::runtime_error("oracle: perturbation not generic");

    Poly jac = g.A[0].derivative(0) * g.A[1].derivative(1) -
               g.A[0].derivative(1) * g.A[1].derivative(0);
    long sum = 0;
    for (const auto &xr : real_roots_of(sol.r_squarefree)) {
        int s = sign_at_zero(jac, sol, xr);
        if (s == 0) throw std::runtime_error("oracle: degenerate perturbed zero");
        sum += s;
    }
    return sum;
}

}  // namespace testutil

#endif
