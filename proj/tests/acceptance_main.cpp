// Acceptance suite: runs every acceptance criterion at its stated
// tolerance (all exact) and prints one pass/fail line per criterion.
// Exit code 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"

#include "indexform/fiber_gram.hpp"
#include "indexform/hessian_identity.hpp"
#include "indexform/index_engine.hpp"
#include "indexform/quotient_algebra.hpp"
#include "indexform/smooth_index.hpp"

using namespace indexform;
using namespace testutil;

namespace {

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;  // 0: no stated budget
    std::function<bool(std::ostream &)> run;
};

FiberSpec spec1(const Rat &eps, const Rat &delta) {
    FiberSpec s;
    s.epsilon = {eps};
    s.delta = delta;
    return s;
}

bool criterion1(std::ostream &log) {
    IndexReport report = complex_index(cusp_paper());
    if (!report.index || *report.index != 6) {
        log << "expected index 6, got "
            << (report.index ? std::to_string(*report.index) : std::string("infinite"));
        return false;
    }
    return true;
}

bool criterion2(std::ostream &log) {
    struct Case {
        const char *name;
        GermProblem germ;
        std::vector<Rat> eps;
    };
    std::vector<Case> cases = {
        {"cusp 3y^2dx-2xdy", cusp_paper(), {rr(1, 8), rr(-1, 8), rr(1, 27)}},
        {"cusp dy", cusp_dy(), {rr(1, 8), rr(-1, 8), rr(1, 27)}},
        {"cusp dx", cusp_dx(), {rr(1, 8), rr(-1, 8), rr(1, 27)}},
        {"x^2+y^5 dy", xpow2_ypow5_dy(), {rr(1, 32), rr(-1, 32), rr(1, 243)}},
        {"x^3+y^4 2dx+3dy", x3y4_linear(), {rr(1, 16), rr(-1, 16), rr(1, 81)}},
    };
    bool ok = true;
    for (const auto &c : cases) {
        auto idx = complex_index(c.germ).index;
        if (!idx) {
            log << c.name << ": infinite index; ";
            ok = false;
            continue;
        }
        for (const Rat &eps : c.eps) {
            long count = count_zeros_on_fiber(c.germ, spec1(eps, rr(1)));
            if (count != *idx) {
                log << c.name << " at eps=" << eps.str() << ": index " << *idx << " vs count "
                    << count << "; ";
                ok = false;
            }
        }
    }
    return ok;
}

bool criterion3(std::ostream &log) {
    std::mt19937_64 rng(1234567);
    const std::vector<std::pair<std::size_t, std::size_t>> shapes = {{2, 1}, {3, 1}, {3, 2}};
    int verified = 0;
    int attempts = 0;
    while (verified < 51 && attempts < 4000) {
        ++attempts;
        const auto &[n, k] = shapes[static_cast<std::size_t>(verified) % shapes.size()];
        RingPtr ring = n == 2 ? ring2() : ring3();
        GermProblem g;
        g.ring = ring;
        bool bad = false;
        for (std::size_t i = 0; i < k; ++i) {
            Poly f = random_poly(rng, ring, 3, true);
            if (f.is_zero()) bad = true;
            g.f.push_back(f);
        }
        if (bad) continue;
        for (std::size_t i = 0; i < n; ++i) g.A.push_back(random_poly(rng, ring, 2));
        bool some_a = false;
        for (const auto &a : g.A) some_a |= !a.is_zero();
        if (!some_a) continue;
        HessianVerdict v;
        try {
            v = verify_hessian_identity(g, 20, 9000 + verified);
        } catch (const DegenerateConfiguration &) {
            continue;
        }
        if (!v.symbolic_ok || (v.points_evaluated > 0 && !v.evaluations_ok)) {
            log << "identity failed on a random germ (seed offset " << verified << "); ";
            return false;
        }
        ++verified;
    }
    if (verified < 50) {
        log << "only " << verified << " random germs verified; ";
        return false;
    }
    // mutation test: a perturbed border minor must be caught
    FiberChart chart = make_fiber_chart(cusp_paper());
    chart.border_minors[0] += Poly::constant(chart.problem.ring, Rat(1));
    HessianVerdict mutated = verify_chart_identity(chart, 20, 77);
    if (mutated.ok) {
        log << "mutated minor was not rejected; ";
        return false;
    }
    return true;
}

bool criterion4(std::ostream &log) {
    std::mt19937_64 rng(20240405);
    auto r = ring2();
    auto random_rat_mat = [&](std::size_t rows, std::size_t cols) {
        PolyMat m(rows, cols, r);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = Poly::constant(r, random_rat(rng));
        return m;
    };
    int done1 = 0, done2 = 0;
    while (done1 < 100 || done2 < 100) {
        std::size_t l = 1 + static_cast<std::size_t>(done1 + done2) % 3;
        std::size_t m = 1 + static_cast<std::size_t>(done1 / 2 + done2) % 3;
        PolyMat A = random_rat_mat(l, l);
        if (determinant(A).is_zero()) continue;
        PolyMat B = random_rat_mat(l, m);
        PolyMat C = random_rat_mat(m, l);
        PolyMat D = random_rat_mat(m, m);
        if (done1 < 100) {
            auto [lhs, rhs] = block_det_product(A, B, C, D);
            if (!(lhs == rhs)) {
                log << "block determinant identity failed; ";
                return false;
            }
            ++done1;
        }
        if (done2 < 100) {
            auto [lhs, rhs] = bordered_minor_identity(A, B, C, D);
            if (!(lhs == rhs)) {
                log << "bordered minor identity failed; ";
                return false;
            }
            ++done2;
        }
    }
    return true;
}

struct FiberFixture {
    const char *name;
    GermProblem germ;
    std::vector<Rat> eps;
    bool has_expected;
    long expected;  // frozen derivation, see comments at the call site
};

std::vector<FiberFixture> fiber_fixtures() {
    return {
        // Pullback through (t^3, -t^2): dy pulls back to -2t dt, index -1.
        {"cusp dy", cusp_dy(), {rr(1, 8), rr(-1, 8), rr(1, 27), rr(-1, 27)}, true, -1},
        // Pullback through (t^3, -t^2): 3y^2dx - 2xdy pulls back to
        // t^4(9t^2+4) dt, positive on both sides, index 0.
        {"cusp 3y^2dx-2xdy", cusp_paper(), {rr(1, 8), rr(-1, 8), rr(1, 27)}, true, 0},
        // dx on the cone point x^2+y^2: the real germ is the origin only;
        // the recovered index is chi(point) = 1 in every chamber.
        {"morse dx", morse_dx(), {rr(1, 4), rr(-1, 4), rr(1, 9)}, true, 1},
        // Pullback through (t^5, -t^2): dy pulls back to -2t dt, index -1.
        {"x^2+y^5 dy", xpow2_ypow5_dy(), {rr(1, 32), rr(-1, 32), rr(1, 243)}, true, -1},
        // Pullback through (-t^4, t^3): 2dx+3dy pulls back to
        // t^2(9 - 8t) dt, positive near 0 on both sides, index 0.
        {"x^3+y^4 2dx+3dy", x3y4_linear(), {rr(1, 16), rr(-1, 16), rr(1, 81)}, true, 0},
    };
}

bool criterion5(std::ostream &log) {
    bool ok = true;
    for (const auto &fx : fiber_fixtures()) {
        bool first = true;
        long first_value = 0;
        for (const Rat &eps : fx.eps) {
            FiberSpec s = spec1(eps, rr(1));
            RecoveredIndexReport oracle = recovered_real_index(fx.germ, s);
            FiberGramReport gram_rep = real_index_via_fiber(fx.germ, s);
            if (gram_rep.recovered_index != oracle.recovered_index) {
                log << fx.name << " at eps=" << eps.str() << ": gram route "
                    << gram_rep.recovered_index << " vs oracle " << oracle.recovered_index
                    << "; ";
                ok = false;
            }
            if (first) {
                first_value = oracle.recovered_index;
                first = false;
            } else if (oracle.recovered_index != first_value) {
                log << fx.name << ": chamber dependence (" << first_value << " vs "
                    << oracle.recovered_index << " at eps=" << eps.str() << "); ";
                ok = false;
            }
            if (fx.has_expected && oracle.recovered_index != fx.expected) {
                log << fx.name << " at eps=" << eps.str() << ": expected " << fx.expected
                    << ", got " << oracle.recovered_index << "; ";
                ok = false;
            }
        }
    }
    return ok;
}

bool criterion6(std::ostream &log) {
    bool ok = true;
    for (const auto &fx : fiber_fixtures()) {
        for (const Rat &eps : fx.eps) {
            FiberGramReport rep = real_index_via_fiber(fx.germ, spec1(eps, rr(1)));
            if (rep.inertia.zero != 0) {
                log << fx.name << " at eps=" << eps.str() << ": zero inertia "
                    << rep.inertia.zero << "; ";
                ok = false;
            }
        }
    }
    return ok;
}

bool criterion7(std::ostream &log) {
    bool ok = true;
    auto expect = [&](const GermProblem &g, long want, const char *name) {
        long got = real_index_smooth(g).real_index;
        if (got != want) {
            log << name << ": expected " << want << ", got " << got << "; ";
            ok = false;
        }
    };
    expect(germ2_smooth("x", "y"), 1, "x dx + y dy");
    {
        GermProblem g;
        g.ring = make_ring({"x"});
        g.A = {parse_poly("x^2", g.ring)};
        expect(g, 0, "x^2 dx");
    }
    GermProblem harmonic = germ2_smooth("3*x^2 - 3*y^2", "-6*x*y");
    expect(harmonic, -2, "d(x^3 - 3xy^2)");
    for (const auto &[a, b] : std::vector<std::pair<Rat, Rat>>{
             {rr(1, 50), rr(1, 70)}, {rr(-1, 60), rr(1, 90)}, {rr(1, 40), rr(-1, 80)}}) {
        long oracle = perturbed_sign_count_oracle(harmonic, a, b);
        if (oracle != -2) {
            log << "perturbed-zero oracle got " << oracle << "; ";
            ok = false;
        }
    }

    // functional-choice independence, >= 5 admissible functionals each
    std::mt19937_64 rng(31337);
    for (const auto &g : {germ2_smooth("x", "y"), germ2_smooth("3*x^2", "4*y^3"), harmonic}) {
        auto rep = real_index_smooth(g);
        auto hclass = rep.algebra.coordinates(rep.hessian_cls);
        int done = 0;
        while (done < 5) {
            std::vector<Rat> ell(rep.algebra.dim());
            for (auto &v : ell) v = random_rat(rng);
            Rat val(0);
            for (std::size_t i = 0; i < ell.size(); ++i) val += ell[i] * hclass[i];
            if (val.is_zero()) continue;
            if (val.sign() < 0)
                for (auto &v : ell) v = -v;
            if (signature(gram(rep.algebra, ell)).signature() != rep.real_index) {
                log << "functional choice changed the signature; ";
                ok = false;
            }
            ++done;
        }
    }
    return ok;
}

bool criterion8(std::ostream &log) {
    bool ok = true;
    std::mt19937_64 rng(28182818);
    auto r = ring2();

    // colength invariance under variable permutation and linear changes
    for (int trial = 0; trial < 10; ++trial) {
        Poly p = random_poly(rng, r, 3, true);
        Poly q = random_poly(rng, r, 3, true);
        if (p.is_zero() || q.is_zero()) continue;
        std::vector<Poly> swap_img = {Poly::variable(r, 1), Poly::variable(r, 0)};
        auto a = standard_basis({p, q}).colength();
        auto b = standard_basis({p.compose(swap_img), q.compose(swap_img)}).colength();
        if (a.has_value() != b.has_value() || (a && b && *a != *b)) {
            log << "permutation invariance failed; ";
            ok = false;
        }
        Rat m00 = random_rat(rng), m01 = random_rat(rng);
        Rat m10 = random_rat(rng), m11 = random_rat(rng);
        if ((m00 * m11 - m01 * m10).is_zero()) continue;
        std::vector<Poly> lin_img = {
            Poly::variable(r, 0).scaled(m00) + Poly::variable(r, 1).scaled(m01),
            Poly::variable(r, 0).scaled(m10) + Poly::variable(r, 1).scaled(m11)};
        auto c = standard_basis({p.compose(lin_img), q.compose(lin_img)}).colength();
        if (a.has_value() != c.has_value() || (a && c && *a != *c)) {
            log << "coordinate invariance failed; ";
            ok = false;
        }
    }

    // normal form idempotence
    {
        StdBasis sb = standard_basis({parse_poly("x^2 + y^3", r), parse_poly("2*x + y^2", r)});
        for (int trial = 0; trial < 20; ++trial) {
            Poly p = random_poly(rng, r, 4);
            Poly nf = normal_form(p, sb);
            if (!(normal_form(nf, sb) == nf)) {
                log << "normal form not idempotent; ";
                ok = false;
            }
        }
    }

    // multiplication-table associativity, dim <= 12
    {
        QuotAlg alg(standard_basis({parse_poly("x^2 + y^3", r), parse_poly("-4*x^2 - 9*y^4", r)}));
        const std::size_t L = alg.dim();
        for (std::size_t a = 0; a < L && ok; ++a)
            for (std::size_t b = 0; b < L && ok; ++b)
                for (std::size_t c = 0; c < L && ok; ++c) {
                    std::vector<Rat> va(L, Rat(0)), vb(L, Rat(0)), vc(L, Rat(0));
                    va[a] = Rat(1);
                    vb[b] = Rat(1);
                    vc[c] = Rat(1);
                    if (alg.multiply(alg.multiply(va, vb), vc) !=
                        alg.multiply(va, alg.multiply(vb, vc))) {
                        log << "associativity failed; ";
                        ok = false;
                    }
                }
    }

    // Sylvester congruence invariance
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + trial % 3;
        SymMat m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m.set(i, j, random_rat(rng));
        std::vector<std::vector<Rat>> S(n, std::vector<Rat>(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i) {
            S[i][i] = Rat(1 + static_cast<long>(i % 2));
            for (std::size_t j = i + 1; j < n; ++j) S[i][j] = random_rat(rng);
        }
        SymMat c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Rat acc(0);
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) acc += S[p][i] * m.at(p, q) * S[q][j];
                c.set(i, j, acc);
            }
        auto s1 = signature(m), s2 = signature(c);
        if (s1.positive != s2.positive || s1.negative != s2.negative || s1.zero != s2.zero) {
            log << "Sylvester invariance failed; ";
            ok = false;
        }
    }

    // derivation rule
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = random_poly(rng, r, 3);
        Poly q = random_poly(rng, r, 3);
        for (std::size_t v = 0; v < 2; ++v) {
            if (!((p * q).derivative(v) == p * q.derivative(v) + q * p.derivative(v))) {
                log << "derivation rule failed; ";
                ok = false;
            }
        }
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "paper example: index of 3y^2dx-2xdy on the cusp is 6", 1.0, criterion1},
        {2, "complex index equals fiber zero count on 5 germs x 3 epsilons", 30.0, criterion2},
        {3, "Hessian identity on 50+ random germs; mutation rejected", 60.0, criterion3},
        {4, "block/bordered determinant identities, 100+ random blocks", 5.0, criterion4},
        {5, "recovered real index: chamber independence + gram agreement", 60.0, criterion5},
        {6, "fiber Gram matrices nondegenerate off the discriminant", 0.0, criterion6},
        {7, "smooth-case suite: +1, 0, -2 with oracle; functional independence", 0.0, criterion7},
        {8, "property suite: invariances, idempotence, associativity", 0.0, criterion8},
    };

    int failures = 0;
    for (auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::ostringstream log;
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception &e) {
            log << "exception: " << e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = c.budget_seconds <= 0.0 || seconds <= c.budget_seconds;
        if (!in_budget) log << "runtime " << seconds << "s exceeds " << c.budget_seconds << "s";
        bool pass = ok && in_budget;
        std::printf("criterion %d: %s  [%s] (%.2fs)%s%s\n", c.number,
                    pass ? "PASS" : "FAIL", c.title.c_str(), seconds,
                    log.str().empty() ? "" : " -- ", log.str().c_str());
        if (!pass) ++failures;
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
