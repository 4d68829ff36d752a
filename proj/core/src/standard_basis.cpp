#include "indexform/standard_basis.hpp"

#include <algorithm>
#include <deque>

namespace indexform {

namespace {

int ecart(const Poly &p) { return p.total_degree() - p.leading_monomial().degree(); }

// Mora head reduction against a fixed generator list. Cancels leading
// terms only; whenever the chosen reducer has larger ecart than the
// current polynomial, the current polynomial joins the reducer set (the
// tangent-cone termination trick). Intermediates carry their own exact
// representation so the returned identity unit*p = cofactors.g + head
// holds in the polynomial ring.
struct TrackedPoly {
    Poly value;
    Poly unit;
    std::vector<Poly> cofs;
};

TrackedPoly head_reduce(const Poly &p, const std::vector<Poly> &gens, int cap) {
    RingPtr ring = p.ring();
    TrackedPoly cur{p, Poly::constant(ring, Rat(1)),
                    std::vector<Poly>(gens.size(), Poly::zero(ring))};
    if (p.is_zero()) return cur;

    struct Reducer {
        Mono lead;
        int ecart;
        long source;  // >=0: generator index, <0: saved_[-source-1]
    };
    std::vector<Reducer> reducers;
    reducers.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        reducers.push_back({gens[i].leading_monomial(), ecart(gens[i]), static_cast<long>(i)});
    std::deque<TrackedPoly> saved;

    while (!cur.value.is_zero()) {
        if (cur.value.total_degree() > cap)
            throw SafetyCapExceeded("Mora reduction exceeded degree cap " + std::to_string(cap));
        const Mono lm = cur.value.leading_monomial();
        long pick = -1;
        int pick_ecart = 0;
        for (std::size_t r = 0; r < reducers.size(); ++r) {
            if (!reducers[r].lead.divides(lm)) continue;
            if (pick < 0 || reducers[r].ecart < pick_ecart) {
                pick = static_cast<long>(r);
                pick_ecart = reducers[r].ecart;
            }
        }
        if (pick < 0) break;
        Reducer chosen = reducers[static_cast<std::size_t>(pick)];
        if (chosen.ecart > ecart(cur.value)) {
            saved.push_back(cur);
            reducers.push_back({lm, ecart(cur.value), -static_cast<long>(saved.size())});
        }
        Mono q = lm / chosen.lead;
        if (chosen.source >= 0) {
            const Poly &g = gens[static_cast<std::size_t>(chosen.source)];
            Rat c = cur.value.coeff(lm) / g.leading_coeff();
            cur.value -= g.times_monomial(q, c);
            cur.cofs[static_cast<std::size_t>(chosen.source)] += Poly::monomial(ring, q, c);
        } else {
            const TrackedPoly &sv = saved[static_cast<std::size_t>(-chosen.source - 1)];
            Rat c = cur.value.coeff(lm) / sv.value.coeff(chosen.lead);
            cur.value -= sv.value.times_monomial(q, c);
            cur.unit -= sv.unit.times_monomial(q, c);
            for (std::size_t i = 0; i < cur.cofs.size(); ++i)
                cur.cofs[i] -= sv.cofs[i].times_monomial(q, c);
        }
    }
    return cur;
}

// spoly of two monic polynomials.
Poly spoly(const Poly &f, const Poly &g) {
    const Mono &lf = f.leading_monomial();
    const Mono &lg = g.leading_monomial();
    Mono l = lf.lcm(lg);
    Poly a = f.times_monomial(l / lf, f.coeff(lf).inverse());
    Poly b = g.times_monomial(l / lg, g.coeff(lg).inverse());
    return a - b;
}

struct Pair {
    std::size_t i, j;
    Mono lcm;
};

bool pair_before(const Pair &a, const Pair &b) {
    int da = a.lcm.degree(), db = b.lcm.degree();
    if (da != db) return da < db;
    if (a.lcm != b.lcm) return LocalOrder::greater(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

}  // namespace

StdBasis standard_basis(const std::vector<Poly> &gens, int degree_cap) {
    if (gens.empty()) throw std::invalid_argument("standard_basis: empty generator list");
    RingPtr ring = gens.front().ring();
    for (const auto &g : gens)
        if (!g.same_ring(gens.front()))
            throw std::invalid_argument("standard_basis: mixed variable contexts");

    std::vector<Poly> basis;
    for (const auto &g : gens) {
        if (g.is_zero()) continue;
        basis.push_back(g.scaled(g.leading_coeff().inverse()));
    }
    if (basis.empty()) throw std::invalid_argument("standard_basis: all generators zero");

    std::vector<Pair> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Mono &li = basis[i].leading_monomial();
            const Mono &lj = basis[j].leading_monomial();
            if (li.coprime(lj)) continue;  // product criterion
            queue.push_back(Pair{i, j, li.lcm(lj)});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);
    std::sort(queue.begin(), queue.end(), pair_before);

    while (!queue.empty()) {
        Pair pr = queue.front();
        queue.erase(queue.begin());
        Poly s = spoly(basis[pr.i], basis[pr.j]);
        if (s.is_zero()) continue;
        Poly rem = head_reduce(s, basis, degree_cap).value;
        if (rem.is_zero()) continue;
        basis.push_back(rem.scaled(rem.leading_coeff().inverse()));
        push_pairs(basis.size() - 1);
        std::sort(queue.begin(), queue.end(), pair_before);
    }

    // Minimalize: keep only generators whose leading monomial is not
    // divisible by another kept generator's leading monomial.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Mono &li = basis[i].leading_monomial();
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Mono &lj = basis[j].leading_monomial();
            if (lj == li ? j < i : lj.divides(li)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [](const Poly &a, const Poly &b) {
        return LocalOrder::greater(a.leading_monomial(), b.leading_monomial());
    });

    StdBasis out;
    out.ring_ = ring;
    out.gens_ = std::move(minimal);
    out.source_ = gens;
    out.lead_.reserve(out.gens_.size());
    for (const auto &g : out.gens_) out.lead_.push_back(g.leading_monomial());
    return out;
}

bool StdBasis::is_unit_ideal() const {
    for (const auto &m : lead_)
        if (m.is_one()) return true;
    return false;
}

namespace {

// Componentwise exponent box bounding the staircase: bound[i] is the least
// pure power of x_i among the leading monomials (finite colength only).
std::optional<std::vector<int>> staircase_box(const std::vector<Mono> &lead, std::size_t n) {
    std::vector<int> bound(n, -1);
    for (const auto &m : lead) {
        for (std::size_t i = 0; i < n; ++i) {
            if (m.exp(i) == 0) continue;
            bool pure = true;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i && m.exp(j) != 0) pure = false;
            if (pure && (bound[i] < 0 || m.exp(i) < bound[i])) bound[i] = m.exp(i);
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0) return std::nullopt;
    return bound;
}

template <typename Fn>
void for_each_in_box(const std::vector<int> &bound, Fn &&fn) {
    const std::size_t n = bound.size();
    std::vector<int> e(n, 0);
    for (;;) {
        fn(e);
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] < bound[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
}

}  // namespace

std::optional<long> StdBasis::colength() const {
    if (is_unit_ideal()) return 0;
    auto box = staircase_box(lead_, ring_->nvars());
    if (!box) return std::nullopt;
    long count = 0;
    for_each_in_box(*box, [&](const std::vector<int> &e) {
        Mono m{std::vector<int>(e)};
        for (const auto &lm : lead_)
            if (lm.divides(m)) return;
        ++count;
    });
    return count;
}

std::vector<Mono> StdBasis::staircase_complement() const {
    auto len = colength();
    if (!len) throw std::domain_error("staircase_complement: infinite colength");
    std::vector<Mono> basis;
    if (*len == 0) return basis;
    auto box = staircase_box(lead_, ring_->nvars());
    for_each_in_box(*box, [&](const std::vector<int> &e) {
        Mono m{std::vector<int>(e)};
        for (const auto &lm : lead_)
            if (lm.divides(m)) return;
        basis.push_back(m);
    });
    std::sort(basis.begin(), basis.end(), [](const Mono &a, const Mono &b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return LocalOrder::greater(a, b);
    });
    return basis;
}

HeadReduction mora_head_reduce(const Poly &p, const StdBasis &sb, int degree_cap) {
    if (!p.same_ring(Poly::zero(sb.ring())))
        throw std::invalid_argument("mora_head_reduce: context mismatch");
    TrackedPoly t = head_reduce(p, sb.generators(), degree_cap);
    return HeadReduction{std::move(t.value), std::move(t.unit), std::move(t.cofs)};
}

Poly normal_form(const Poly &p, const StdBasis &sb, int degree_cap) {
    if (!p.same_ring(Poly::zero(sb.ring())))
        throw std::invalid_argument("normal_form: context mismatch");
    auto len = sb.colength();
    if (len) {
        // Exact class representative on the staircase complement.
        int top = 0;
        for (const auto &m : sb.staircase_complement()) top = std::max(top, m.degree());
        Poly work = p.truncated_above(top);
        Poly result(sb.ring());
        while (!work.is_zero()) {
            const Mono lm = work.leading_monomial();
            Rat c = work.coeff(lm);
            const Poly *reducer = nullptr;
            for (const auto &g : sb.generators())
                if (g.leading_monomial().divides(lm)) {
                    reducer = &g;
                    break;
                }
            if (!reducer) {
                result += Poly::monomial(sb.ring(), lm, c);
                work -= Poly::monomial(sb.ring(), lm, c);
            } else {
                work -= reducer->times_monomial(lm / reducer->leading_monomial(),
                                                c / reducer->leading_coeff());
                work = work.truncated_above(top);
            }
        }
        return result;
    }
    // Infinite colength: iterated head reduction, peeling irreducible
    // leading terms. Peeled monomials strictly decrease in the local
    // order and stay within the degree cap, so this terminates.
    Poly work = p;
    Poly result(sb.ring());
    while (!work.is_zero()) {
        work = head_reduce(work, sb.generators(), degree_cap).value;
        if (work.is_zero()) break;
        const Mono lm = work.leading_monomial();
        if (lm.degree() > degree_cap)
            throw SafetyCapExceeded("normal form exceeded degree cap " +
                                    std::to_string(degree_cap));
        Rat c = work.coeff(lm);
        result += Poly::monomial(sb.ring(), lm, c);
        work -= Poly::monomial(sb.ring(), lm, c);
    }
    return result;
}

bool ideal_contains(const StdBasis &sb, const Poly &p, int degree_cap) {
    return mora_head_reduce(p, sb, degree_cap).head.is_zero();
}

}  // namespace indexform
