#include <catch2/catch_amalgamated.hpp>

#include "odh/hadamard.hpp"

using namespace odh;

namespace {

DifferenceFamily first_family(int n) {
    auto fams = search_families(n, 1);
    REQUIRE_FALSE(fams.empty());
    return fams.front();
}

}  // namespace

TEST_CASE("blow-up of a 1x1 design is the substituted matrix", "[hadamard]") {
    OdMatrix y(1);
    y.at(0, 0) = OdCell{1, 0};
    SignMatrix j2 = SignMatrix::all_ones(2);
    SignMatrix d2(2);
    d2.set(1, 1, -1);
    CHECK(blow_up(y, j2, d2) == j2);
    y.at(0, 0) = OdCell{0, -1};
    CHECK(blow_up(y, j2, d2) == d2.negated());
}

TEST_CASE("blow-up rejects zero cells and mismatched orders", "[hadamard]") {
    OdMatrix y(2);
    y.at(0, 0) = OdCell{1, 0};
    y.at(1, 1) = OdCell{1, 0};  // off-diagonal cells left zero
    SignMatrix j = SignMatrix::all_ones(3);
    CHECK_THROWS_AS(blow_up(y, j, j), std::invalid_argument);
    CHECK_THROWS_AS(blow_up(y, j, SignMatrix::all_ones(2)), std::invalid_argument);
}

TEST_CASE("order-12 symmetric Hadamard from q = 3", "[hadamard]") {
    SignMatrix h = build_symmetric_hadamard(3, first_family(1));
    REQUIRE(h.order() == 12);
    CHECK(is_symmetric(h));
    CHECK(verify_hadamard(h));
}

TEST_CASE("blow-up arithmetic: OD(4;1,3) with J_3 and D_3", "[hadamard]") {
    DifferenceFamily fam = first_family(1);
    OdMatrix y = build_symmetric_od(fam);
    FiniteField f3(3, 1);
    SignMatrix h = blow_up(y, SignMatrix::all_ones(3), build_d(f3));
    REQUIRE(h.order() == 12);
    CHECK(verify_hadamard(h));
}

TEST_CASE("congruence and family checks", "[hadamard]") {
    DifferenceFamily fam1 = first_family(1);
    CHECK_THROWS_AS(build_symmetric_hadamard(7, fam1), std::invalid_argument);   // 7 = 7 (mod 8)
    CHECK_THROWS_AS(build_symmetric_hadamard(12, fam1), std::invalid_argument);  // not a prime power
    CHECK_THROWS_AS(build_symmetric_hadamard(11, fam1), std::invalid_argument);  // needs n = 3
}

TEST_CASE("row inner products of J and D", "[hadamard]") {
    for (int q : {3, 7, 11}) {
        FiniteField f(q, 1);
        SignMatrix j = SignMatrix::all_ones(q);
        SignMatrix d = build_d(f);
        for (int a = 0; a < q; ++a) {
            REQUIRE(j.row_inner_product(a, a) == q);
            REQUIRE(d.row_inner_product(a, a) == q);
            for (int b = a + 1; b < q; ++b) {
                REQUIRE(j.row_inner_product(a, b) == q);
                REQUIRE(d.row_inner_product(a, b) == -1);
            }
        }
    }
}

TEST_CASE("pipeline for q in {3, 11, 19}", "[hadamard]") {
    for (int q : {3, 11, 19}) {
        int n = (1 + q) / 4;
        SignMatrix h = build_symmetric_hadamard(q, first_family(n));
        REQUIRE(h.order() == q * (1 + q));
        REQUIRE(is_symmetric(h));
        REQUIRE(verify_hadamard(h, 2));
    }
}

TEST_CASE("blow-up commutes with transposition for symmetric substitutions", "[hadamard]") {
    DifferenceFamily fam = first_family(3);
    OdMatrix y = build_skew_od(fam);  // not symmetric, so transposition is visible
    FiniteField f(11, 1);
    SignMatrix mx = SignMatrix::all_ones(11);
    SignMatrix my = build_d(f);
    CHECK(blow_up(y, mx, my).transpose() == blow_up(y.transpose(), mx, my));
}

TEST_CASE("diagonal blocks of H H^T are equal", "[hadamard]") {
    int q = 11;
    SignMatrix h = build_symmetric_hadamard(q, first_family(3));
    IntMatrix hi = h.to_int_matrix();
    IntMatrix gram = hi * hi.transpose();
    int m = h.order();
    // first q x q block, then compare the rest
    for (int bi = 1; bi < m / q; ++bi)
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                REQUIRE(gram.at(bi * q + i, bi * q + j) == gram.at(i, j));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            REQUIRE(gram.at(i, j) == (i == j ? q * (1 + q) : 0));
}
