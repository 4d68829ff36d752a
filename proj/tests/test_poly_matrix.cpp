#include "doctest.h"
#include "helpers.hpp"

using namespace indexform;
using namespace testutil;

namespace {

PolyMat random_mat(std::mt19937_64 &rng, const RingPtr &ring, std::size_t rows, std::size_t cols,
                   int deg) {
    PolyMat m(rows, cols, ring);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_poly(rng, ring, deg);
    return m;
}

PolyMat random_rat_mat(std::mt19937_64 &rng, const RingPtr &ring, std::size_t rows,
                       std::size_t cols) {
    PolyMat m(rows, cols, ring);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = Poly::constant(ring, random_rat(rng));
    return m;
}

}  // namespace

TEST_CASE("determinant basics") {
    auto r = ring2();
    CHECK(determinant(PolyMat::identity(3, r)) == Poly::constant(r, Rat(1)));

    PolyMat m(2, 2, r);
    m.at(0, 0) = P("2*x", r);
    m.at(0, 1) = P("3*y^2", r);
    m.at(1, 0) = P("3*y^2", r);
    m.at(1, 1) = P("-2*x", r);
    CHECK(determinant(m) == P("-4*x^2 - 9*y^4", r));

    PolyMat z(2, 3, r);
    CHECK_THROWS_AS(determinant(z), std::invalid_argument);
}

TEST_CASE("fraction-free determinant equals cofactor expansion (randomized)") {
    std::mt19937_64 rng(20240401);
    auto r = ring2();
    // polynomial entries up to 4x4
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + trial % 3;
        PolyMat m = random_mat(rng, r, n, n, 2);
        CHECK(determinant(m) == cofactor_det(m));
    }
    // rational entries up to 5x5, including many singular draws
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 2 + trial % 4;
        PolyMat m = random_rat_mat(rng, r, n, n);
        if (trial % 5 == 0 && n >= 2) {
            // force dependent rows to exercise the pivoting path
            for (std::size_t j = 0; j < n; ++j) m.at(1, j) = m.at(0, j);
        }
        CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("minor enumeration is deterministic and complete") {
    auto r = ring2();
    PolyMat m(2, 2, r);
    m.at(0, 0) = P("2*x", r);
    m.at(0, 1) = P("3*y^2", r);
    m.at(1, 0) = P("3*y^2", r);
    m.at(1, 1) = P("-2*x", r);

    auto m2 = minors(m, 2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == P("-4*x^2 - 9*y^4", r));

    auto m1 = minors(m, 1);
    REQUIRE(m1.size() == 4);
    CHECK(m1[0] == P("2*x", r));
    CHECK(m1[1] == P("3*y^2", r));
    CHECK(m1[2] == P("3*y^2", r));
    CHECK(m1[3] == P("-2*x", r));

    // f = x^2+y^3, A = (0,1): single 2x2 minor is 2x
    PolyMat jca(2, 2, r);
    jca.at(0, 0) = P("2*x", r);
    jca.at(0, 1) = P("3*y^2", r);
    jca.at(1, 0) = P("0", r);
    jca.at(1, 1) = P("1", r);
    CHECK(minors(jca, 2)[0] == P("2*x", r));

    CHECK_THROWS_AS(minors(m, 3), std::invalid_argument);
}

TEST_CASE("minor count matches binomials") {
    std::mt19937_64 rng(5);
    auto r = ring2();
    auto choose = [](std::size_t n, std::size_t k) {
        unsigned long long c = 1;
        for (std::size_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
        return c;
    };
    for (std::size_t rows = 1; rows <= 4; ++rows)
        for (std::size_t cols = 1; cols <= 4; ++cols) {
            PolyMat m = random_rat_mat(rng, r, rows, cols);
            for (std::size_t s = 1; s <= std::min(rows, cols); ++s)
                CHECK(minors(m, s).size() == choose(rows, s) * choose(cols, s));
        }
}

TEST_CASE("block determinant identity") {
    auto r = ring2();

    SUBCASE("A=I, B=0, C=0: both sides det D") {
        std::mt19937_64 rng(11);
        PolyMat A = PolyMat::identity(2, r);
        PolyMat B(2, 2, r), C(2, 2, r);
        PolyMat D = random_mat(rng, r, 2, 2, 1);
        auto [lhs, rhs] = block_det_product(A, B, C, D);
        CHECK(lhs == determinant(D));
        CHECK(rhs == determinant(D));
    }

    SUBCASE("scalar case: ad - cb") {
        PolyMat A(1, 1, r), B(1, 1, r), C(1, 1, r), D(1, 1, r);
        A.at(0, 0) = P("x", r);
        B.at(0, 0) = P("y", r);
        C.at(0, 0) = P("3", r);
        D.at(0, 0) = P("x + y", r);
        auto [lhs, rhs] = block_det_product(A, B, C, D);
        CHECK(lhs == P("x^2 + x*y - 3*y", r));
        CHECK(lhs == rhs);
    }

    SUBCASE("random rational blocks, l,m <= 3, 100+ trials") {
        std::mt19937_64 rng(20240402);
        int done = 0;
        while (done < 110) {
            std::size_t l = 1 + done % 3, m = 1 + (done / 3) % 3;
            PolyMat A = random_rat_mat(rng, r, l, l);
            if (determinant(A).is_zero()) continue;
            PolyMat B = random_rat_mat(rng, r, l, m);
            PolyMat C = random_rat_mat(rng, r, m, l);
            PolyMat D = random_rat_mat(rng, r, m, m);
            auto [lhs, rhs] = block_det_product(A, B, C, D);
            CHECK(lhs == rhs);
            ++done;
        }
    }

    SUBCASE("singular A rejected") {
        PolyMat A(1, 1, r), B(1, 1, r), C(1, 1, r), D(1, 1, r);
        CHECK_THROWS_AS(block_det_product(A, B, C, D), std::domain_error);
    }
}

TEST_CASE("bordered minor matrix identity") {
    auto r = ring2();

    SUBCASE("m=1: H is the single bordered determinant") {
        std::mt19937_64 rng(21);
        PolyMat A = random_rat_mat(rng, r, 2, 2);
        PolyMat B = random_rat_mat(rng, r, 2, 1);
        PolyMat C = random_rat_mat(rng, r, 1, 2);
        PolyMat D = random_rat_mat(rng, r, 1, 1);
        REQUIRE(!determinant(A).is_zero());
        PolyMat H = bordered_minor_matrix(A, B, C, D);
        CHECK(H.rows() == 1);
        CHECK(H.at(0, 0) == determinant(assemble_blocks(A, B, C, D)));
        auto [lhs, rhs] = bordered_minor_identity(A, B, C, D);
        CHECK(lhs == rhs);
    }

    SUBCASE("m=2 with D diagonal, B=C=0: det H = (det A)^2 d11 d22") {
        std::mt19937_64 rng(22);
        PolyMat A = random_rat_mat(rng, r, 2, 2);
        REQUIRE(!determinant(A).is_zero());
        PolyMat B(2, 2, r), C(2, 2, r), D(2, 2, r);
        D.at(0, 0) = Poly::constant(r, Rat(3));
        D.at(1, 1) = Poly::constant(r, Rat(-5, 2));
        PolyMat H = bordered_minor_matrix(A, B, C, D);
        Poly detA = determinant(A);
        CHECK(determinant(H) == detA * detA * D.at(0, 0) * D.at(1, 1));
        auto [lhs, rhs] = bordered_minor_identity(A, B, C, D);
        CHECK(lhs == rhs);
    }

    SUBCASE("random rational blocks, l,m <= 3, 100+ trials") {
        std::mt19937_64 rng(20240403);
        int done = 0;
        while (done < 110) {
            std::size_t l = 1 + done % 3, m = 1 + (done / 7) % 3;
            PolyMat A = random_rat_mat(rng, r, l, l);
            if (determinant(A).is_zero()) continue;
            PolyMat B = random_rat_mat(rng, r, l, m);
            PolyMat C = random_rat_mat(rng, r, m, l);
            PolyMat D = random_rat_mat(rng, r, m, m);
            auto [lhs, rhs] = bordered_minor_identity(A, B, C, D);
            CHECK(lhs == rhs);
            ++done;
        }
    }
}
