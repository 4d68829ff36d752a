#include "doctest.h"
#include "helpers.hpp"

#include "indexform/plane_fiber.hpp"
#include "indexform/smooth_index.hpp"

using namespace indexform;
using namespace testutil;

namespace {

SymMat from_rows(const std::vector<std::vector<long>> &rows) {
    SymMat m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, Rat(rows[i][j]));
    return m;
}

}  // namespace

TEST_CASE("signature: direct examples") {
    CHECK(signature(from_rows({{1, 0}, {0, -1}})).positive == 1);
    CHECK(signature(from_rows({{1, 0}, {0, -1}})).negative == 1);
    auto id3 = signature(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(id3.positive == 3);
    CHECK(id3.zero == 0);
    auto hyp = signature(from_rows({{0, 1}, {1, 0}}));
    CHECK(hyp.positive == 1);
    CHECK(hyp.negative == 1);
    CHECK(hyp.zero == 0);
    auto zero2 = signature(from_rows({{0, 0}, {0, 0}}));
    CHECK(zero2.zero == 2);
}

TEST_CASE("signature is invariant under exact congruence (Sylvester)") {
    std::mt19937_64 rng(20240404);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + trial % 4;
        SymMat m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) m.set(i, j, random_rat(rng));
        // random invertible S (unit upper triangular times permutation-ish)
        std::vector<std::vector<Rat>> S(n, std::vector<Rat>(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i) {
            S[i][i] = Rat(1 + static_cast<long>(i % 3));
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
        auto s1 = signature(m);
        auto s2 = signature(c);
        CHECK(s1.positive == s2.positive);
        CHECK(s1.negative == s2.negative);
        CHECK(s1.zero == s2.zero);
    }
}

TEST_CASE("socle functional: spec examples") {
    auto r = ring2();

    SUBCASE("Morse A=(x,y): algebra {1}, ell(1) = 1") {
        GermProblem g = germ2_smooth("x", "y");
        auto rep = real_index_smooth(g);
        REQUIRE(rep.algebra.dim() == 1);
        CHECK(rep.hessian_cls == P("1", r));
        CHECK(rep.functional == std::vector<Rat>{Rat(1)});
        CHECK(rep.gram_matrix.at(0, 0) == Rat(1));
        CHECK(rep.real_index == 1);
    }

    SUBCASE("A=(x^2, y): socle on x, ell(2x) = 2") {
        GermProblem g = germ2_smooth("x^2", "y");
        auto rep = real_index_smooth(g);
        REQUIRE(rep.algebra.dim() == 2);
        CHECK(rep.hessian_cls == P("2*x", r));
        std::size_t ix = rep.algebra.basis_index(Mono::var(2, 0));
        CHECK(rep.functional[ix] * Rat(2) == Rat(2));
        // Gram [[0,1],[1,0]]: signature 0 (index of x^2 dx)
        CHECK(rep.inertia.positive == 1);
        CHECK(rep.inertia.negative == 1);
        CHECK(rep.real_index == 0);
    }

    SUBCASE("A=(3x^2, 4y^3): dim 6, hessian class 72xy^2") {
        GermProblem g = germ2_smooth("3*x^2", "4*y^3");
        auto rep = real_index_smooth(g);
        REQUIRE(rep.algebra.dim() == 6);
        CHECK(rep.hessian_cls == P("72*x*y^2", r));
        std::size_t is = rep.algebra.basis_index(Mono{std::vector<int>{1, 2}});
        CHECK(!rep.functional[is].is_zero());
        for (std::size_t i = 0; i < 6; ++i)
            if (i != is) CHECK(rep.functional[i].is_zero());
    }
}

TEST_CASE("smooth real index: classical values") {
    SUBCASE("omega = x dx + y dy -> +1") {
        CHECK(real_index_smooth(germ2_smooth("x", "y")).real_index == 1);
    }

    SUBCASE("omega = x^2 dx (one variable) -> 0") {
        GermProblem g;
        g.ring = make_ring({"x"});
        g.A = {P("x^2", g.ring)};
        CHECK(real_index_smooth(g).real_index == 0);
    }

    SUBCASE("omega = d(x^3 - 3x y^2) -> -2, against the perturbed-zero oracle") {
        GermProblem g = germ2_smooth("3*x^2 - 3*y^2", "-6*x*y");
        auto rep = real_index_smooth(g);
        CHECK(rep.real_index == -2);
        CHECK(perturbed_sign_count_oracle(g, Rat(1, 50), Rat(1, 70)) == -2);
        CHECK(perturbed_sign_count_oracle(g, Rat(-1, 60), Rat(1, 90)) == -2);
    }
}

TEST_CASE("smooth index: nondegenerate Gram and functional independence") {
    std::mt19937_64 rng(606);
    std::vector<GermProblem> germs = {
        germ2_smooth("x", "y"),
        germ2_smooth("x^2", "y"),
        germ2_smooth("3*x^2", "4*y^3"),
        germ2_smooth("3*x^2 - 3*y^2", "-6*x*y"),
        germ2_smooth("x^3", "y^2"),
    };
    for (const auto &g : germs) {
        auto rep = real_index_smooth(g);
        CHECK(rep.inertia.zero == 0);

        // any functional positive on the hessian class gives the same
        // signature (classical invariance)
        const QuotAlg &alg = rep.algebra;
        std::vector<Rat> hclass = alg.coordinates(rep.hessian_cls);
        int done = 0;
        while (done < 5) {
            std::vector<Rat> ell(alg.dim());
            for (auto &v : ell) v = random_rat(rng);
            // value on the hessian class: sum over coordinates
            Rat val(0);
            for (std::size_t i = 0; i < alg.dim(); ++i) val += ell[i] * hclass[i];
            if (val.is_zero()) continue;
            if (val.sign() < 0)
                for (auto &v : ell) v = -v;
            auto sig = signature(gram(alg, ell));
            CHECK(sig.signature() == rep.real_index);
            CHECK(sig.zero == 0);
            ++done;
        }
    }
}
