#include "indexform/hessian_identity.hpp"

#include <random>

#include "indexform/standard_basis.hpp"

namespace indexform {

namespace {

Rat random_rat(std::mt19937_64 &rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    return Rat(num(rng), den(rng));
}

}  // namespace

HessianVerdict verify_identity_pair(const GermProblem &g, const Poly &delta, const RatFunc &lhs,
                                    const RatFunc &rhs, int trials, std::uint64_t seed) {
    HessianVerdict verdict;
    verdict.points_requested = trials;

    Poly diff = lhs.cross_difference(rhs);
    if (diff.is_zero()) {
        verdict.symbolic_ok = true;
        verdict.ambient_identity = true;
    } else if (g.k() >= 1) {
        // Equality is only required on the fibers: reduce the difference,
        // saturated by small delta powers, against the fiber ideal in the
        // local ring.
        StdBasis sb = standard_basis(g.f);
        Poly scaled = diff;
        for (int s = 0; s <= 3; ++s) {
            if (ideal_contains(sb, scaled)) {
                verdict.symbolic_ok = true;
                verdict.saturation_power = s;
                break;
            }
            scaled *= delta;
        }
    }

    // Spot checks at random rational points with delta != 0. The point
    // always lies on the rational fiber through itself.
    std::mt19937_64 rng(seed);
    int done = 0, attempts = 0;
    bool evals_ok = true;
    while (done < trials && attempts < 200 * trials + 50) {
        ++attempts;
        std::vector<Rat> point;
        point.reserve(g.n());
        for (std::size_t i = 0; i < g.n(); ++i) point.push_back(random_rat(rng));
        if (delta.evaluate(point).is_zero()) continue;
        Rat dl = lhs.den().evaluate(point);
        Rat dr = rhs.den().evaluate(point);
        if (dl.is_zero() || dr.is_zero()) continue;
        ++done;
        if (lhs.num().evaluate(point) / dl != rhs.num().evaluate(point) / dr) evals_ok = false;
    }
    verdict.points_evaluated = done;
    verdict.evaluations_ok = evals_ok && done > 0;
    if (done == 0) {
        verdict.note = "no rational test points found";
        verdict.evaluations_ok = trials == 0;
    }
    verdict.ok = verdict.symbolic_ok && (done == 0 ? verdict.symbolic_ok : evals_ok);
    return verdict;
}

HessianVerdict verify_chart_identity(const FiberChart &chart, int trials, std::uint64_t seed) {
    return verify_identity_pair(chart.problem, chart.delta, hessian_direct(chart),
                                hessian_formula(chart), trials, seed);
}

HessianVerdict verify_hessian_identity(const GermProblem &g, int trials, std::uint64_t seed) {
    g.validate();
    if (g.k() < 1) throw PreconditionError("verify_hessian_identity: requires k >= 1");
    if (g.n() - g.k() < 1)
        throw PreconditionError("verify_hessian_identity: requires n-k >= 1");

    // Default chart first; on a degenerate delta walk all other
    // k-subsets of eliminated variables.
    std::vector<std::vector<std::size_t>> candidates;
    candidates.push_back({});
    std::vector<std::size_t> subset(g.k());
    for (std::size_t i = 0; i < g.k(); ++i) subset[i] = i;
    for (;;) {
        candidates.push_back(subset);
        std::size_t i = g.k();
        bool advanced = false;
        while (i-- > 0) {
            if (subset[i] < i + g.n() - g.k()) {
                ++subset[i];
                for (std::size_t j = i + 1; j < g.k(); ++j) subset[j] = subset[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    for (const auto &elim : candidates) {
        try {
            FiberChart chart = make_fiber_chart(g, elim);
            return verify_chart_identity(chart, trials, seed);
        } catch (const DegenerateConfiguration &) {
            continue;
        }
    }
    throw DegenerateConfiguration("verify_hessian_identity: no chart with delta != 0");
}

}  // namespace indexform
