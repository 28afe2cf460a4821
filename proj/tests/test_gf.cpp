#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "odh/gf.hpp"

using odh::FiniteField;

namespace {

// Independent oracle: enumerate monic cubics/quadratics over GF(p) in
// lexicographic order (low-degree coefficient compared first) and return the
// first one without a root. For degree <= 3 rootlessness is irreducibility.
std::vector<int> oracle_smallest_irreducible(int p, int k) {
    REQUIRE(k <= 3);
    std::vector<int> c(k, 0);
    for (;;) {
        std::vector<int> f = c;
        f.push_back(1);
        bool has_root = false;
        for (int x = 0; x < p && !has_root; ++x) {
            long long val = 0, pw = 1;
            for (int i = 0; i <= k; ++i) {
                val = (val + f[i] * pw) % p;
                pw = pw * x % p;
            }
            has_root = val == 0;
        }
        if (!has_root) return f;
        int i = k - 1;
        while (i >= 0 && c[i] == p - 1) c[i--] = 0;
        REQUIRE(i >= 0);
        ++c[i];
    }
}

// multiplicative order by direct power enumeration
int element_order(const FiniteField& f, int e) {
    int cur = e, ord = 1;
    while (cur != 1) {
        cur = f.mul(cur, e);
        ++ord;
        REQUIRE(ord <= f.q());
    }
    return ord;
}

}  // namespace

TEST_CASE("prime field construction", "[gf]") {
    FiniteField f(7, 1);
    CHECK(f.q() == 7);
    CHECK(f.modulus().empty());
}

TEST_CASE("non-prime p is rejected", "[gf]") {
    CHECK_THROWS_AS(FiniteField(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FiniteField(3, 0), std::invalid_argument);
}

TEST_CASE("GF(27) modulus is the smallest irreducible monic cubic", "[gf]") {
    FiniteField f(3, 3);
    CHECK(f.q() == 27);
    CHECK(f.modulus() == oracle_smallest_irreducible(3, 3));
    CHECK(f.modulus() == std::vector<int>{1, 0, 2, 1});  // 1 + 2x^2 + x^3
}

TEST_CASE("GF(9) modulus matches the oracle", "[gf]") {
    FiniteField f(3, 2);
    CHECK(f.modulus() == oracle_smallest_irreducible(3, 2));
}

TEST_CASE("generator is the smallest element of full order", "[gf]") {
    CHECK(FiniteField(3, 1).generator() == 2);
    CHECK(FiniteField(7, 1).generator() == 3);  // ord(2) = 3, ord(3) = 6

    FiniteField f27(3, 3);
    int g = f27.generator();
    CHECK(element_order(f27, g) == 26);
    for (int c = 2; c < g; ++c) CHECK(element_order(f27, c) != 26);
}

TEST_CASE("quadratic character on GF(7)", "[gf]") {
    FiniteField f(7, 1);
    CHECK(f.chi(0) == 0);
    CHECK(f.chi(2) == 1);   // squares mod 7 are {1,2,4}
    CHECK(f.chi(3) == -1);
    CHECK(f.chi(1) == 1);
    CHECK(f.chi(4) == 1);
    CHECK(f.chi(5) == -1);
    CHECK(f.chi(6) == -1);
}

TEST_CASE("paley ordering", "[gf]") {
    CHECK(FiniteField(3, 1).paley_order() == std::vector<int>{0, 1, 2});
    CHECK(FiniteField(7, 1).paley_order() == std::vector<int>{0, 1, 3, 2, 6, 4, 5});
    CHECK(FiniteField(2, 1).paley_order() == std::vector<int>{0, 1});
}

TEST_CASE("character properties across fields", "[gf]") {
    for (auto [p, k] : std::vector<std::pair<int, int>>{{3, 1}, {7, 1}, {11, 1}, {3, 3}, {5, 2}, {131, 1}}) {
        FiniteField f(p, k);
        int q = f.q();
        CAPTURE(p, k);

        // multiplicativity over all nonzero pairs
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                REQUIRE(f.chi(f.mul(a, b)) == f.chi(a) * f.chi(b));

        int sum = 0;
        for (int e = 0; e < q; ++e) sum += f.chi(e);
        CHECK(sum == 0);

        CHECK(f.chi(f.neg(1)) == (q % 4 == 3 ? -1 : 1));

        std::vector<int> order = f.paley_order();
        std::set<int> uniq(order.begin(), order.end());
        CHECK(static_cast<int>(uniq.size()) == q);
        CHECK(order.front() == 0);
        CHECK(order[1] == 1);  // g^0
    }
}

TEST_CASE("field arithmetic sanity in GF(27)", "[gf]") {
    FiniteField f(3, 3);
    // x^13 = -1 for the generator x of this modulus
    CHECK(f.pow(f.generator(), 13) == f.neg(1));
    for (int a = 0; a < 27; ++a) {
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a) CHECK(f.mul(a, f.pow(a, 25)) == 1);  // a^26 = 1
    }
}

TEST_CASE("digit round trips", "[gf]") {
    FiniteField f(3, 3);
    for (int e = 0; e < 27; ++e) {
        auto d = f.digits(e);
        int back = d[0] + 3 * d[1] + 9 * d[2];
        CHECK(back == e);
    }
}

TEST_CASE("field size cap", "[gf]") {
    CHECK_THROWS_AS(FiniteField(2, 21), std::invalid_argument);
    CHECK_NOTHROW(FiniteField(2, 4));
}
