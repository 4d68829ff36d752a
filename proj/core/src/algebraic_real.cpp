#include "indexform/algebraic_real.hpp"

#include <stdexcept>

namespace indexform {

AlgebraicReal::AlgebraicReal(UniPoly defining_squarefree, RootInterval iv)
    : poly_(std::move(defining_squarefree)),
      chain_(sturm_chain(poly_)),
      exact_(iv.exact),
      point_(iv.point),
      lo_(iv.lo),
      hi_(iv.hi) {}

void AlgebraicReal::refine() const {
    if (exact_) return;
    Rat mid = (lo_ + hi_) / Rat(2);
    if (poly_.eval(mid).is_zero()) {
        exact_ = true;
        point_ = mid;
        return;
    }
    if (sturm_count(chain_, lo_, mid) == 1)
        hi_ = mid;
    else
        lo_ = mid;
}

int AlgebraicReal::sign_of(const UniPoly &q) const {
    if (q.is_zero()) return 0;
    if (exact_) return q.eval(point_).sign();

    // Zero test: this root also annihilates q iff it is a root of
    // gcd(defining, q). The gcd's roots are among the defining roots, so
    // the isolating interval contains one of them iff it is this root;
    // endpoints are never gcd roots because they are not defining roots.
    UniPoly g = gcd(poly_, q);
    if (g.degree() > 0) {
        auto gchain = sturm_chain(g);
        if (sturm_count(gchain, lo_, hi_) >= 1) return 0;
    }

    // Nonzero: shrink the interval until q has no root on it; the sign of
    // q is then constant across the interval.
    UniPoly qsf = squarefree_part(q);
    auto qchain = sturm_chain(qsf);

    // Replaces an endpoint that happens to be a root of q with a nearby
    // interior point that is not a defining root, keeping this root inside.
    auto move_endpoint = [&](bool move_lo) {
        Rat c = (lo_ + hi_) / Rat(2);
        for (int i = 0; i < 1024; ++i) {
            if (poly_.eval(c).is_zero()) {
                exact_ = true;
                point_ = c;
                return;
            }
            if (move_lo) {
                if (sturm_count(chain_, c, hi_) == 1) {
                    lo_ = c;
                    return;
                }
                c = (lo_ + c) / Rat(2);
            } else {
                if (sturm_count(chain_, lo_, c) == 1) {
                    hi_ = c;
                    return;
                }
                c = (c + hi_) / Rat(2);
            }
        }
        throw std::runtime_error("AlgebraicReal: endpoint adjustment failed");
    };

    for (int guard = 0; guard < 4096; ++guard) {
        if (exact_) return q.eval(point_).sign();
        if (q.eval(lo_).is_zero()) {
            move_endpoint(true);
            continue;
        }
        if (q.eval(hi_).is_zero()) {
            move_endpoint(false);
            continue;
        }
        if (sturm_count(qchain, lo_, hi_) == 0) return q.eval(lo_).sign();
        refine();
    }
    throw std::runtime_error("AlgebraicReal::sign_of: refinement failed to converge");
}

int AlgebraicReal::compare(const Rat &x) const {
    std::vector<Rat> lin{-x, Rat(1)};
    return sign_of(UniPoly(std::move(lin)));
}

std::vector<AlgebraicReal> real_roots_of(const UniPoly &p) {
    std::vector<AlgebraicReal> out;
    UniPoly sf = squarefree_part(p);
    if (sf.degree() <= 0) return out;
    for (const auto &iv : isolate_real_roots(sf)) out.emplace_back(sf, iv);
    return out;
}

}  // namespace indexform
