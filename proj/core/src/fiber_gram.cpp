#include "indexform/fiber_gram.hpp"

#include "indexform/fiber_chart.hpp"
#include "indexform/index_engine.hpp"

namespace indexform {

namespace {

// Exact image of a bivariate polynomial in Q[t]/(r) under
// x -> t, y -> -s0/s1 (s1 invertible mod r).
UniPoly eval_in_zero_algebra(const Poly &w, const SolutionSet &sol, const UniPoly &s1_inv) {
    const UniPoly &r = sol.r_squarefree;
    int D = std::max(0, degree_in(w, 1));
    UniPoly neg_s0 = -sol.param_s0;
    UniPoly acc;
    // sum_b w_b(t) (-s0)^b s1^(D-b), then divide by s1^D.
    for (int b = 0; b <= D; ++b) {
        Poly wb = Poly::zero(w.ring());
        for (const auto &[m, c] : w.terms()) {
            if (m.exp(1) != b) continue;
            std::vector<int> e = m.exps();
            e[1] = 0;
            wb += Poly::monomial(w.ring(), Mono(std::move(e)), c);
        }
        if (wb.is_zero()) continue;
        UniPoly term = to_unipoly(wb, 0);
        term = mod_reduce(term, r);
        term = mod_mul(term, mod_pow(neg_s0, static_cast<unsigned>(b), r), r);
        term = mod_mul(term, mod_pow(sol.param_s1, static_cast<unsigned>(D - b), r), r);
        acc = mod_reduce(acc + term, r);
    }
    return mod_mul(acc, mod_pow(s1_inv, static_cast<unsigned>(D), r), r);
}

// The weight (h * Delta^2)^{-1} as an element of Q[t]/(r), where h is the
// Hessian of the restricted (perturbed) form in the eliminate-x chart.
// Throws DegenerateConfiguration when a zero lies on the chart's bad
// locus (Delta = 0) or is degenerate (h = 0 at a zero).
UniPoly inverse_weight(const PlaneFiber &fiber) {
    const UniPoly &r = fiber.solutions.r_squarefree;
    FiberChart chart;
    try {
        chart = make_fiber_chart(fiber.problem, {0});
    } catch (const DegenerateConfiguration &) {
        throw DegenerateConfiguration(
            "fiber gram: chart Jacobian vanishes identically; rotate coordinates");
    }
    UniPoly s1_inv;
    try {
        s1_inv = mod_inverse(fiber.solutions.param_s1, r);
    } catch (const std::domain_error &) {
        throw DegenerateConfiguration("fiber gram: parameterization degenerate");
    }

    UniPoly delta_hat = eval_in_zero_algebra(chart.delta, fiber.solutions, s1_inv);
    UniPoly delta_inv;
    try {
        delta_inv = mod_inverse(delta_hat, r);
    } catch (const std::domain_error &) {
        throw DegenerateConfiguration(
            "fiber gram: a zero meets Delta = 0 (degenerate configuration); perturb epsilon");
    }

    RatFunc h = hessian_direct(chart);  // denominator is a power of Delta
    UniPoly num_hat = eval_in_zero_algebra(h.num(), fiber.solutions, s1_inv);
    UniPoly den_hat = eval_in_zero_algebra(h.den(), fiber.solutions, s1_inv);
    UniPoly num_inv;
    try {
        num_inv = mod_inverse(num_hat, r);
    } catch (const std::domain_error &) {
        throw DegenerateConfiguration(
            "fiber gram: degenerate zero (h vanishes); perturb the 1-form");
    }
    // (h Delta^2)^{-1} = den / (num Delta^2).
    UniPoly out = mod_mul(den_hat, num_inv, r);
    out = mod_mul(out, mod_mul(delta_inv, delta_inv, r), r);
    return out;
}

}  // namespace

std::vector<Rat> fiber_functional(const PlaneFiber &fiber, const std::vector<Mono> &basis) {
    const UniPoly &r = fiber.solutions.r_squarefree;
    if (fiber.solutions.r.degree() != r.degree())
        throw DegenerateConfiguration(
            "fiber functional: zeros are not all simple; perturb the 1-form");
    if (r.degree() < 1)
        throw DegenerateConfiguration("fiber functional: empty zero set");
    UniPoly s1_inv = mod_inverse(fiber.solutions.param_s1, r);
    UniPoly w = inverse_weight(fiber);
    std::vector<Rat> out;
    out.reserve(basis.size());
    for (const auto &m : basis) {
        Poly phi = Poly::monomial(fiber.problem.ring, m, Rat(1));
        UniPoly phi_hat = eval_in_zero_algebra(phi, fiber.solutions, s1_inv);
        out.push_back(trace_of_multiplication(mod_mul(phi_hat, w, r), r));
    }
    return out;
}

SymMat fiber_gram(const PlaneFiber &fiber, const std::vector<Mono> &basis) {
    const UniPoly &r = fiber.solutions.r_squarefree;
    if (fiber.solutions.r.degree() != r.degree())
        throw DegenerateConfiguration("fiber gram: zeros are not all simple; perturb the 1-form");
    if (r.degree() < 1) throw DegenerateConfiguration("fiber gram: empty zero set");
    UniPoly s1_inv = mod_inverse(fiber.solutions.param_s1, r);
    UniPoly w = inverse_weight(fiber);

    std::vector<UniPoly> phi_hat;
    phi_hat.reserve(basis.size());
    for (const auto &m : basis) {
        Poly phi = Poly::monomial(fiber.problem.ring, m, Rat(1));
        phi_hat.push_back(eval_in_zero_algebra(phi, fiber.solutions, s1_inv));
    }

    SymMat q(basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a; b < basis.size(); ++b) {
            UniPoly prod = mod_mul(phi_hat[a], phi_hat[b], r);
            q.set(a, b, trace_of_multiplication(mod_mul(prod, w, r), r));
        }
    return q;
}

FiberGramReport real_index_via_fiber(const GermProblem &g, const FiberSpec &spec) {
    PlaneFiber fiber = solve_plane_fiber(g, spec);
    require_fiber_smooth(fiber.unperturbed.f[0], spec.epsilon);

    // Quotient basis of the origin ideal in the rotated frame (the same
    // frame the zero algebra lives in). Its dimension is the complex
    // index; the zero algebra must capture exactly that many zeros.
    IndexReport origin = complex_index(fiber.unperturbed);
    if (!origin.index)
        throw DegenerateConfiguration("fiber gram: complex index is infinite");
    if (*origin.index != fiber.solutions.total_multiplicity)
        throw DegenerateConfiguration(
            "fiber gram: affine zero count differs from the complex index; the trace "
            "functional needs every zero of the system (adjust epsilon/delta or perturb)");

    // Every zero must lie inside the disc: the functional sums over the
    // zero algebra of the whole system, which must coincide with the
    // localized picture.
    if (count_zeros_on_fiber(fiber) != fiber.solutions.total_multiplicity)
        throw DegenerateConfiguration(
            "fiber gram: some zeros lie outside the disc; enlarge delta");

    FiberGramReport report;
    report.rotated = fiber.rotated;
    report.basis = origin.quotient_basis;
    report.gram_matrix = fiber_gram(fiber, report.basis);
    report.inertia = signature(report.gram_matrix);
    report.euler_characteristic =
        euler_char_real_curve(fiber.unperturbed.f[0], spec.epsilon[0], spec.delta);
    report.recovered_index = report.inertia.signature() - report.euler_characteristic + 1;
    return report;
}

}  // namespace indexform
