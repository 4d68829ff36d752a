#include "indexform/plane_fiber.hpp"

#include <algorithm>

#include "indexform/fiber_chart.hpp"
#include "indexform/poly_matrix.hpp"

namespace indexform {

void FiberSpec::validate(const GermProblem &g) const {
    if (epsilon.size() != g.k())
        throw PreconditionError("fiber spec: epsilon must have k components");
    if (delta.sign() <= 0) throw PreconditionError("fiber spec: delta must be positive");
    if (!eta.empty()) {
        if (eta.size() != g.n())
            throw PreconditionError("fiber spec: eta must have n coefficients");
        if (lambda.is_zero())
            throw PreconditionError("fiber spec: lambda must be nonzero with a perturbation");
    }
}

int degree_in(const Poly &p, std::size_t var) {
    int d = -1;
    for (const auto &[m, c] : p.terms()) d = std::max(d, m.exp(var));
    return d;
}

namespace {

// Coefficients of p as a polynomial in `var`: index j holds the
// coefficient of var^j, a polynomial with var-degree 0.
std::vector<Poly> coefficients_in(const Poly &p, std::size_t var) {
    int d = degree_in(p, var);
    std::vector<Poly> out(static_cast<std::size_t>(d + 1), Poly::zero(p.ring()));
    if (d < 0) return out;
    for (const auto &[m, c] : p.terms()) {
        std::vector<int> e = m.exps();
        int j = e[var];
        e[var] = 0;
        out[static_cast<std::size_t>(j)] += Poly::monomial(p.ring(), Mono(std::move(e)), c);
    }
    return out;
}

}  // namespace

Poly resultant_wrt(const Poly &p, const Poly &q, std::size_t var) {
    if (p.is_zero() || q.is_zero()) return Poly::zero(p.ring());
    auto a = coefficients_in(p, var);
    auto b = coefficients_in(q, var);
    const std::size_t dp = a.size() - 1, dq = b.size() - 1;
    const RingPtr &ring = p.ring();
    if (dp == 0 && dq == 0) return Poly::constant(ring, Rat(1));
    if (dp == 0) return a[0].pow(static_cast<unsigned>(dq));
    if (dq == 0) return b[0].pow(static_cast<unsigned>(dp));

    PolyMat syl(dp + dq, dp + dq, ring);
    for (std::size_t i = 0; i < dq; ++i)
        for (std::size_t j = 0; j <= dp; ++j) syl.at(i, i + j) = a[dp - j];
    for (std::size_t i = 0; i < dp; ++i)
        for (std::size_t j = 0; j <= dq; ++j) syl.at(dq + i, i + j) = b[dq - j];
    return determinant(syl);
}

UniPoly to_unipoly(const Poly &p, std::size_t var) {
    std::vector<Rat> coeffs(static_cast<std::size_t>(std::max(0, degree_in(p, var) + 1)), Rat(0));
    for (const auto &[m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.nvars(); ++i)
            if (i != var && m.exp(i) != 0)
                throw std::invalid_argument("to_unipoly: polynomial involves other variables");
        coeffs[static_cast<std::size_t>(m.exp(var))] = c;
    }
    return UniPoly(std::move(coeffs));
}

namespace {

// As first_subresultant_wrt, assuming deg p >= deg q >= 1 in var.
// For deg q == 1 the subresultant is q itself.
std::pair<Poly, Poly> first_subresultant(const Poly &p, const Poly &q, std::size_t var) {
    auto a = coefficients_in(p, var);
    auto b = coefficients_in(q, var);
    const std::size_t dp = a.size() - 1, dq = b.size() - 1;
    const RingPtr &ring = p.ring();
    if (dq == 1) return {b[1], b[0]};

    // Determinant-polynomial form: rows are y^(dq-2)..y^0 times p and
    // y^(dp-2)..y^0 times q; columns cover y-degrees dp+dq-2..2 plus the
    // degree-e column, e = 1 for s1 and e = 0 for s0.
    const std::size_t rows = dp + dq - 2;
    auto build = [&](std::size_t e) {
        PolyMat m(rows, rows, ring);
        for (std::size_t i = 0; i < dq - 1; ++i) {
            // row: coefficients of y^(dq-2-i) * p
            std::size_t shift = dq - 2 - i;
            for (std::size_t c = 0; c < rows; ++c) {
                // column c < rows-1 is y-degree dp+dq-2-c; last column is degree e
                std::size_t degree = c + 1 < rows ? dp + dq - 2 - c : e;
                long idx = static_cast<long>(degree) - static_cast<long>(shift);
                m.at(i, c) = (idx >= 0 && idx <= static_cast<long>(dp))
                                 ? a[static_cast<std::size_t>(idx)]
                                 : Poly::zero(ring);
            }
        }
        for (std::size_t i = 0; i < dp - 1; ++i) {
            std::size_t shift = dp - 2 - i;
            for (std::size_t c = 0; c < rows; ++c) {
                std::size_t degree = c + 1 < rows ? dp + dq - 2 - c : e;
                long idx = static_cast<long>(degree) - static_cast<long>(shift);
                m.at(dq - 1 + i, c) = (idx >= 0 && idx <= static_cast<long>(dq))
                                          ? b[static_cast<std::size_t>(idx)]
                                          : Poly::zero(ring);
            }
        }
        return determinant(m);
    };
    return {build(1), build(0)};
}

const std::vector<std::vector<std::vector<Rat>>> &rational_rotations() {
    // Pythagorean rotations: exactly orthogonal, so the disc is preserved.
    static const std::vector<std::vector<std::vector<Rat>>> rots = [] {
        std::vector<std::vector<std::vector<Rat>>> out;
        auto add = [&](long a, long b, long c) {
            out.push_back({{Rat(a, c), Rat(-b, c)}, {Rat(b, c), Rat(a, c)}});
        };
        add(3, 4, 5);
        add(4, 3, 5);
        add(5, 12, 13);
        add(12, 5, 13);
        add(8, 15, 17);
        add(20, 21, 29);
        return out;
    }();
    return rots;
}

// The bordered minor M = f_x A_2 - f_y A_1 whose joint zeros with the
// fiber polynomial are the zeros of the restricted 1-form.
Poly plane_zero_poly(const GermProblem &g) {
    return g.f[0].derivative(0) * g.A[1] - g.f[0].derivative(1) * g.A[0];
}

struct GenericityFailure {
    std::string reason;
};

// Attempts the elimination in the current frame; returns nullopt with a
// reason when a genericity certificate fails (caller rotates).
std::optional<SolutionSet> try_eliminate(const Poly &fiber_poly, const Poly &zero_poly,
                                         std::string &why_not) {
    const std::size_t X = 0, Y = 1;
    int dpy = degree_in(fiber_poly, Y);
    int dqy = degree_in(zero_poly, Y);
    if (dpy < 1) {
        why_not = "fiber polynomial does not involve the eliminated variable";
        return std::nullopt;
    }
    if (dqy < 1) {
        why_not = "zero polynomial does not involve the eliminated variable";
        return std::nullopt;
    }
    // Constant leading y-coefficient keeps the projection proper and the
    // resultant's root multiplicities equal to intersection multiplicities.
    Poly lc = coefficients_in(fiber_poly, Y).back();
    if (!lc.is_constant()) {
        why_not = "fiber polynomial is not monic in the eliminated variable";
        return std::nullopt;
    }

    Poly res = resultant_wrt(fiber_poly, zero_poly, Y);
    if (res.is_zero())
        throw DegenerateConfiguration(
            "plane fiber: shared component, zeros on the fiber are not isolated");

    SolutionSet sol;
    sol.r = to_unipoly(res, X);
    sol.total_multiplicity = sol.r.degree();
    sol.r_squarefree = squarefree_part(sol.r);
    sol.multiplicities = squarefree_decomposition(sol.r);

    auto [s1p, s0p] = dpy >= dqy ? first_subresultant(fiber_poly, zero_poly, Y)
                                 : first_subresultant(zero_poly, fiber_poly, Y);
    sol.param_s1 = to_unipoly(s1p, X);
    sol.param_s0 = to_unipoly(s0p, X);
    if (sol.param_s1.is_zero() ||
        gcd(sol.r_squarefree, sol.param_s1).degree() > 0) {
        why_not = "projection not generic: an x-root has multiple y-partners";
        return std::nullopt;
    }
    sol.real_roots = real_roots_of(sol.r_squarefree);
    return sol;
}

}  // namespace

std::pair<Poly, Poly> first_subresultant_wrt(const Poly &p, const Poly &q, std::size_t var) {
    int dp = degree_in(p, var), dq = degree_in(q, var);
    if (dp < 1 || dq < 1)
        throw std::invalid_argument("first_subresultant_wrt: both degrees must be >= 1");
    return dp >= dq ? first_subresultant(p, q, var) : first_subresultant(q, p, var);
}

PlaneFiber solve_plane_fiber(const GermProblem &g, const FiberSpec &spec) {
    g.validate();
    spec.validate(g);
    if (g.n() != 2 || g.k() != 1)
        throw PreconditionError("plane fiber: requires n=2, k=1");

    // Perturb first (rotation and perturbation commute for linear maps).
    GermProblem perturbed_g = spec.eta.empty() ? g : g.perturbed(spec.eta, spec.lambda);

    std::vector<std::vector<std::vector<Rat>>> frames;
    frames.push_back({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    for (const auto &r : rational_rotations()) frames.push_back(r);

    std::string last_reason = "no frame attempted";
    for (std::size_t fi = 0; fi < frames.size(); ++fi) {
        GermProblem base = fi == 0 ? g : g.linear_change(frames[fi]);
        GermProblem pert = fi == 0 ? perturbed_g : perturbed_g.linear_change(frames[fi]);
        Poly fiber_poly = base.f[0] - Poly::constant(g.ring, spec.epsilon[0]);
        Poly zero_poly = plane_zero_poly(pert);
        if (zero_poly.is_zero())
            throw DegenerateConfiguration("plane fiber: restricted 1-form vanishes identically");

        PlaneFiber out;
        if (zero_poly.is_constant()) {
            // The restricted form never vanishes: empty solution set.
            out.solutions.r = UniPoly::constant(Rat(1));
            out.solutions.r_squarefree = out.solutions.r;
            out.solutions.param_s1 = UniPoly::constant(Rat(1));
            out.solutions.param_s0 = UniPoly();
            out.solutions.total_multiplicity = 0;
        } else {
            std::string why_not;
            auto sol = try_eliminate(fiber_poly, zero_poly, why_not);
            if (!sol) {
                last_reason = why_not;
                continue;
            }
            out.solutions = std::move(*sol);
        }
        out.problem = std::move(pert);
        out.unperturbed = std::move(base);
        out.rotation = frames[fi];
        out.rotated = fi != 0;
        out.fiber_poly = std::move(fiber_poly);
        out.zero_poly = std::move(zero_poly);
        out.delta = spec.delta;
        return out;
    }
    throw DegenerateConfiguration("plane fiber: no rotation certified genericity (" +
                                  last_reason + ")");
}

bool all_zeros_certified_in_disc(const PlaneFiber &fiber) {
    if (fiber.solutions.total_multiplicity == 0) return true;
    // Combine certified radius bounds for the x-coordinates (elimination
    // polynomial) and the y-coordinates (the mirrored elimination).
    Poly res_y = resultant_wrt(fiber.fiber_poly, fiber.zero_poly, 0);
    if (res_y.is_zero())
        throw DegenerateConfiguration("plane fiber: shared component in mirror elimination");
    UniPoly ry = to_unipoly(res_y, 1);
    Rat bx = certified_root_radius(fiber.solutions.r);
    Rat by = certified_root_radius(ry);
    return bx * bx + by * by < fiber.delta * fiber.delta;
}

std::pair<Poly, Poly> complex_split(const UniPoly &p, const RingPtr &uv_ring) {
    if (uv_ring->nvars() != 2)
        throw std::invalid_argument("complex_split: need a two-variable ring");
    PolyBuilder re(uv_ring), im(uv_ring);
    // (u + iv)^k expanded by binomials; i^j cycles through 1, i, -1, -i.
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Rat &c = p.coeff(k);
        if (c.is_zero()) continue;
        Rat binom(1);
        for (std::size_t j = 0; j <= k; ++j) {
            std::vector<int> e = {static_cast<int>(k - j), static_cast<int>(j)};
            Rat coeff = c * binom;
            switch (j % 4) {
                case 0: re.add(Mono(std::move(e)), coeff); break;
                case 1: im.add(Mono(std::move(e)), coeff); break;
                case 2: re.add(Mono(std::move(e)), -coeff); break;
                default: im.add(Mono(std::move(e)), -coeff); break;
            }
            binom = binom * Rat(static_cast<long>(k - j)) / Rat(static_cast<long>(j + 1));
        }
    }
    return {re.take(), im.take()};
}

namespace {

// Exact division of p by v (variable index 1); p must vanish on v = 0.
Poly divide_by_v(const Poly &p) {
    PolyBuilder out(p.ring());
    for (const auto &[m, c] : p.terms()) {
        std::vector<int> e = m.exps();
        if (e[1] == 0) throw std::domain_error("divide_by_v: term without v factor");
        e[1] -= 1;
        out.add(Mono(std::move(e)), c);
    }
    return out.take();
}

// Solves a zero-dimensional affine plane system with the rotation-retry
// genericity loop; co-rotates the extras so sign tests stay consistent.
struct AffineSolve {
    SolutionSet sol;
    std::vector<Poly> extras;
    bool rotated = false;
};

AffineSolve solve_affine_system(const Poly &p, const Poly &q, std::vector<Poly> extras) {
    const RingPtr &ring = p.ring();
    std::vector<std::vector<std::vector<Rat>>> frames;
    frames.push_back({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    for (const auto &r : rational_rotations()) frames.push_back(r);

    std::string last_reason = "no frame attempted";
    for (std::size_t fi = 0; fi < frames.size(); ++fi) {
        auto rot = [&](const Poly &w) {
            if (fi == 0) return w;
            std::vector<Poly> images;
            for (std::size_t i = 0; i < 2; ++i) {
                Poly s = Poly::zero(ring);
                for (std::size_t j = 0; j < 2; ++j)
                    s += Poly::variable(ring, j).scaled(frames[fi][i][j]);
                images.push_back(s);
            }
            return w.compose(images);
        };
        Poly pr = rot(p), qr = rot(q);
        std::string why_not;
        auto sol = try_eliminate(pr, qr, why_not);
        if (!sol) {
            last_reason = why_not;
            continue;
        }
        AffineSolve out;
        out.sol = std::move(*sol);
        out.rotated = fi != 0;
        for (const auto &w : extras) out.extras.push_back(rot(w));
        return out;
    }
    throw DegenerateConfiguration("affine plane system: no rotation certified genericity (" +
                                  last_reason + ")");
}

// Number of zeros of one squarefree factor inside the open disc, not
// counting multiplicity. Real roots via sign evaluation; complex pairs
// via the real system (Re fct, Im fct / v) in (u, v), with disc
// membership W < 0, W = (u^2+v^2-delta^2) |s1|^2 + |s0|^2.
long factor_zeros_in_disc(const UniPoly &fct, const PlaneFiber &fiber) {
    const SolutionSet &sol = fiber.solutions;
    long count = 0;
    long reals = 0;
    for (const auto &xi : real_roots_of(fct)) {
        ++reals;
        UniPoly t2 = UniPoly::from_long({0, 0, 1});
        UniPoly q = t2 * sol.param_s1 * sol.param_s1 + sol.param_s0 * sol.param_s0 -
                    (sol.param_s1 * sol.param_s1).scaled(fiber.delta * fiber.delta);
        int pos = xi.sign_of(q);
        if (pos == 0)
            throw DegenerateConfiguration("plane fiber: zero on the disc boundary; perturb delta");
        if (pos < 0) ++count;
    }
    if (reals == fct.degree()) return count;  // no complex pairs

    RingPtr uv = make_ring({"u", "v"});
    auto [re_f, im_f] = complex_split(fct, uv);
    Poly im1 = divide_by_v(im_f);

    auto [s1_re, s1_im] = complex_split(sol.param_s1, uv);
    auto [s0_re, s0_im] = complex_split(sol.param_s0, uv);
    Poly norm2 = Poly::variable(uv, 0) * Poly::variable(uv, 0) +
                 Poly::variable(uv, 1) * Poly::variable(uv, 1) -
                 Poly::constant(uv, fiber.delta * fiber.delta);
    Poly w = norm2 * (s1_re * s1_re + s1_im * s1_im) + (s0_re * s0_re + s0_im * s0_im);

    AffineSolve uvsol = solve_affine_system(re_f, im1, {w});
    const Poly &w_rot = uvsol.extras[0];
    for (const auto &root : uvsol.sol.real_roots) {
        int pos = sign_at_zero(w_rot, uvsol.sol, root);
        if (pos == 0)
            throw DegenerateConfiguration("plane fiber: zero on the disc boundary; perturb delta");
        // Each nonreal root appears once as (u, v) and once as (u, -v),
        // so this counts both members of a conjugate pair.
        if (pos < 0) ++count;
    }
    return count;
}

}  // namespace

long count_zeros_on_fiber(const PlaneFiber &fiber) {
    if (fiber.solutions.total_multiplicity == 0) return 0;
    if (all_zeros_certified_in_disc(fiber)) return fiber.solutions.total_multiplicity;
    long count = 0;
    for (const auto &[fct, mult] : fiber.solutions.multiplicities)
        count += mult * factor_zeros_in_disc(fct, fiber);
    return count;
}

long count_zeros_on_fiber(const GermProblem &g, const FiberSpec &spec) {
    return count_zeros_on_fiber(solve_plane_fiber(g, spec));
}

int sign_at_zero(const Poly &w, const SolutionSet &sol, const AlgebraicReal &xi) {
    // w(t, -s0/s1) * s1^D = sum_b w_b(t) (-s0)^b s1^(D-b) =: what(t);
    // sign w(P) = sign what(xi) * sign s1(xi)^D.
    const std::size_t X = 0, Y = 1;
    int D = std::max(0, degree_in(w, Y));
    auto wb = coefficients_in(w, Y);
    UniPoly what;  // zero
    UniPoly neg_s0 = -sol.param_s0;
    for (std::size_t b = 0; b < wb.size(); ++b) {
        if (wb[b].is_zero()) continue;
        UniPoly term = to_unipoly(wb[b], X);
        term = term * neg_s0.pow(static_cast<unsigned>(b));
        term = term * sol.param_s1.pow(static_cast<unsigned>(D - static_cast<int>(b)));
        what = what + term;
    }
    int s_num = xi.sign_of(what);
    if (s_num == 0) return 0;
    int s_den = xi.sign_of(sol.param_s1);
    // s1(xi) != 0 is a genericity invariant of the solution set.
    int corr = (D % 2 == 0) ? 1 : s_den;
    return s_num * corr;
}

namespace {

// Is the real zero at xi strictly inside / on / outside the disc?
// Evaluates sign of x^2 + y^2 - delta^2 at the zero.
int disc_position(const SolutionSet &sol, const AlgebraicReal &xi, const Rat &delta) {
    // t^2 s1^2 + s0^2 - delta^2 s1^2 at xi.
    UniPoly t2 = UniPoly::from_long({0, 0, 1});
    UniPoly q = t2 * sol.param_s1 * sol.param_s1 + sol.param_s0 * sol.param_s0 -
                (sol.param_s1 * sol.param_s1).scaled(delta * delta);
    return xi.sign_of(q);
}

}  // namespace

long real_zero_signs(const PlaneFiber &fiber) {
    const GermProblem &g = fiber.problem;
    // Charts: eliminate x (coordinate y) or eliminate y (coordinate x).
    FiberChart chart_x, chart_y;
    bool have_x = false, have_y = false;
    try {
        chart_x = make_fiber_chart(g, {0});
        have_x = true;
    } catch (const DegenerateConfiguration &) {}
    try {
        chart_y = make_fiber_chart(g, {1});
        have_y = true;
    } catch (const DegenerateConfiguration &) {}
    if (!have_x && !have_y)
        throw DegenerateConfiguration("real_zero_signs: both chart Jacobians vanish identically");

    struct ChartData {
        Poly delta;
        Poly h_num;
        Poly h_den;
    };
    auto chart_data = [](const FiberChart &c) {
        RatFunc h = hessian_direct(c);
        return ChartData{c.delta, h.num(), h.den()};
    };
    ChartData cx{}, cy{};
    if (have_x) cx = chart_data(chart_x);
    if (have_y) cy = chart_data(chart_y);

    long sum = 0;
    for (const auto &xi : fiber.solutions.real_roots) {
        int pos = disc_position(fiber.solutions, xi, fiber.delta);
        if (pos == 0)
            throw DegenerateConfiguration("real_zero_signs: zero on the disc boundary");
        if (pos > 0) continue;  // outside the disc

        // Pick a chart whose Jacobian does not vanish at the zero; the
        // sign of h * Delta(P)^2 is chart-independent.
        int sign_h = 0;
        bool decided = false;
        if (have_x && sign_at_zero(cx.delta, fiber.solutions, xi) != 0) {
            int sn = sign_at_zero(cx.h_num, fiber.solutions, xi);
            int sd = sign_at_zero(cx.h_den, fiber.solutions, xi);
            sign_h = sn * sd;
            decided = true;
        } else if (have_y && sign_at_zero(cy.delta, fiber.solutions, xi) != 0) {
            int sn = sign_at_zero(cy.h_num, fiber.solutions, xi);
            int sd = sign_at_zero(cy.h_den, fiber.solutions, xi);
            sign_h = sn * sd;
            decided = true;
        }
        if (!decided)
            throw DegenerateConfiguration(
                "real_zero_signs: fiber is singular at a real zero (both charts fail)");
        if (sign_h == 0)
            throw DegenerateConfiguration(
                "real_zero_signs: degenerate real zero (h = 0); perturb the 1-form");
        sum += sign_h;
    }
    return sum;
}

long real_zero_signs(const GermProblem &g, const FiberSpec &spec) {
    return real_zero_signs(solve_plane_fiber(g, spec));
}

long euler_char_real_curve(const Poly &f, const Rat &eps, const Rat &delta) {
    if (f.nvars() != 2) throw PreconditionError("euler_char_real_curve: requires 2 variables");
    if (delta.sign() <= 0) throw PreconditionError("euler_char_real_curve: delta must be positive");
    const RingPtr &ring = f.ring();
    Poly fiber_poly = f - Poly::constant(ring, eps);
    int d = fiber_poly.total_degree();
    if (d < 0)
        throw DegenerateConfiguration("euler_char_real_curve: fiber polynomial is zero");

    // Rational circle: x = delta (1-t^2)/(1+t^2), y = 2 delta t/(1+t^2).
    // n(t) = (1+t^2)^d (f(x(t), y(t)) - eps); missing point t=inf is
    // (-delta, 0), visible as a degree drop.
    UniPoly one_minus = UniPoly::from_long({1, 0, -1});
    UniPoly one_plus = UniPoly::from_long({1, 0, 1});
    UniPoly two_t = UniPoly::from_long({0, 2});
    UniPoly n;  // zero
    for (const auto &[m, c] : fiber_poly.terms()) {
        int a = m.exp(0), b = m.exp(1);
        UniPoly term = UniPoly::constant(c * delta.pow(static_cast<unsigned>(a + b)));
        term = term * one_minus.pow(static_cast<unsigned>(a));
        term = term * two_t.pow(static_cast<unsigned>(b));
        term = term * one_plus.pow(static_cast<unsigned>(d - a - b));
        n = n + term;
    }
    if (n.is_zero())
        throw DegenerateConfiguration("euler_char_real_curve: fiber contains the whole circle");

    int drop = 2 * d - n.degree();
    if (drop >= 2)
        throw DegenerateConfiguration(
            "euler_char_real_curve: tangential contact at the circle's far point; perturb delta");
    // A real multiple root of n is a tangency; complex multiple factors
    // (notably powers of 1+t^2) are harmless.
    UniPoly g = gcd(n, n.derivative());
    if (g.degree() > 0 && count_real_roots(g) > 0)
        throw DegenerateConfiguration(
            "euler_char_real_curve: tangential circle intersection; perturb delta");

    long boundary = count_real_roots(n) + (drop == 1 ? 1 : 0);
    if (boundary % 2 != 0)
        throw DegenerateConfiguration("euler_char_real_curve: odd boundary count");
    // chi of a compact 1-manifold with boundary: one per arc, zero per
    // closed component.
    return boundary / 2;
}

void require_fiber_smooth(const Poly &f, const std::vector<Rat> &eps) {
    if (f.nvars() != 2 || eps.size() != 1)
        throw PreconditionError("require_fiber_smooth: plane-curve case only");
    Poly fiber_poly = f - Poly::constant(f.ring(), eps[0]);
    Poly fx = f.derivative(0);
    Poly fy = f.derivative(1);
    auto elim = [&](const Poly &a, const Poly &b, std::size_t var) {
        return resultant_wrt(a, b, var);
    };
    // A common zero of (fiber, fx, fy) would force a common root of the
    // two elimination polynomials; coprimality certifies smoothness.
    Poly r1 = elim(fiber_poly, fx, 1);
    Poly r2 = elim(fiber_poly, fy, 1);
    if (r1.is_zero() || r2.is_zero())
        throw DegenerateConfiguration("fiber smoothness certificate failed (shared component)");
    if (r1.is_constant() || r2.is_constant()) return;  // no candidate points at all
    UniPoly u1 = to_unipoly(r1, 0), u2 = to_unipoly(r2, 0);
    if (gcd(u1, u2).degree() > 0)
        throw DegenerateConfiguration(
            "fiber smoothness certificate failed; choose a different epsilon");
}

RecoveredIndexReport recovered_real_index(const GermProblem &g, const FiberSpec &spec) {
    PlaneFiber fiber = solve_plane_fiber(g, spec);
    require_fiber_smooth(fiber.unperturbed.f[0], spec.epsilon);

    RecoveredIndexReport report;
    report.rotated = fiber.rotated;
    report.zero_count = fiber.solutions.total_multiplicity;
    for (const auto &xi : fiber.solutions.real_roots) {
        if (disc_position(fiber.solutions, xi, fiber.delta) < 0) ++report.real_zero_count;
    }
    report.sign_sum = real_zero_signs(fiber);
    report.euler_characteristic =
        euler_char_real_curve(fiber.unperturbed.f[0], spec.epsilon[0], spec.delta);
    report.recovered_index = report.sign_sum - report.euler_characteristic + 1;
    return report;
}

}  // namespace indexform
