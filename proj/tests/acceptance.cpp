// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion pins its own tolerances and time budget.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "odh/gf.hpp"
#include "odh/hadamard.hpp"
#include "odh/io.hpp"
#include "odh/legendre.hpp"
#include "odh/legendre_data.hpp"
#include "odh/paley.hpp"

using namespace odh;

namespace {

struct Criterion {
    int id;
    bool pass = true;
    std::ostringstream notes;
    double seconds = 0;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            pass = false;
            notes << "\n    FAILED: " << what;
        }
    }
    void note(const std::string& what) { notes << "\n    " << what; }
    void time_budget(double limit) {
        require(seconds < limit, "runtime " + std::to_string(seconds) + " s exceeds " +
                                     std::to_string(limit) + " s");
    }
};

const DifferenceFamily kWorkedFamily{7, {{{1, 2, 4}, {1, 2, 4}, {1, 2, 4}, {0}}}};

void criterion1(Criterion& c) {
    // worked example: both designs from (7; {1,2,4} x3, {0}) are (28; 1, 27)
    OdMatrix x = build_skew_od(kWorkedFamily);
    OdMatrix y = build_symmetric_od(kWorkedFamily);
    OdVerifyResult rx = verify_od(x), ry = verify_od(y);
    c.require(rx.ok && rx.k1 == 1 && rx.k2 == 27, "skew design is not (28; 1, 27)");
    c.require(ry.ok && ry.k1 == 1 && ry.k2 == 27, "symmetric design is not (28; 1, 27)");
    c.require(is_skew_type(x), "skew design fails is_skew_type");
    c.require(is_symmetric(y), "symmetric design fails is_symmetric");
    c.require(x.order() == 28 && y.order() == 28, "order is not 28");

    std::vector<int> shared{1, -1, -1, 1, -1, 1, 1};
    for (int i = 0; i < 3; ++i)
        c.require(incidence_row(7, kWorkedFamily.blocks[i]) == shared,
                  "first row of A_" + std::to_string(i) + " differs from the printed row");
    c.require(incidence_row(7, kWorkedFamily.blocks[3]) == std::vector<int>{-1, 1, 1, 1, 1, 1, 1},
              "first row of A_3 differs from the printed row");
}

void criterion2(Criterion& c) {
    const std::vector<std::pair<int, int>> cases{{3, 12}, {11, 132}, {19, 380}, {27, 756}, {43, 1892}};
    for (auto [q, order] : cases) {
        int n = (1 + q) / 4;
        auto fams = search_families(n, 1);
        c.require(!fams.empty(), "no family found at n = " + std::to_string(n));
        if (fams.empty()) continue;
        SignMatrix h = build_symmetric_hadamard(q, fams.front());
        c.require(h.order() == order,
                  "q = " + std::to_string(q) + ": order is " + std::to_string(h.order()));
        c.require(is_symmetric(h), "q = " + std::to_string(q) + ": H != H^T");
        c.require(verify_hadamard(h, 2), "q = " + std::to_string(q) + ": H*H^T != q(1+q)I");
        if (q <= 11) {
            IntMatrix hi = h.to_int_matrix();
            c.require(hi * hi.transpose() == IntMatrix::identity(h.order()).scaled(q * (1 + q)),
                      "q = " + std::to_string(q) + ": dense Gram mismatch");
        }
    }
}

void criterion3(Criterion& c) {
    for (int q : {3, 11, 19, 27}) {
        auto pk = factor_prime_power(q);
        FiniteField f(pk->first, pk->second);
        IntMatrix Q = build_core(f);
        IntMatrix R = build_r(q);
        IntMatrix I = IntMatrix::identity(q);
        IntMatrix J = IntMatrix::all_ones(q);
        SignMatrix d = build_d(f);
        IntMatrix D = d.to_int_matrix();
        std::string tag = "q = " + std::to_string(q) + ": ";
        c.require(Q * Q.transpose() == I.scaled(q) + (-J), tag + "QQ^T != qI - J");
        c.require(R * Q * R == -Q, tag + "RQR != -Q");
        c.require(D * D.transpose() == I.scaled(q + 1) + (-J), tag + "DD^T != (q+1)I - J");
        c.require(J * D == J && D * J == J, tag + "JD = DJ = J fails");
        c.require(D == D.transpose(), tag + "D != D^T");
    }
}

void criterion4(Criterion& c) {
    FiniteField f(3, 3);
    int g = f.generator();
    int cur = g, ord = 1;
    while (cur != 1 && ord <= 27) { cur = f.mul(cur, g); ++ord; }
    c.require(ord == 26, "generator order is " + std::to_string(ord));
    for (int a = 1; a < 27; ++a)
        for (int b = 1; b < 27; ++b)
            if (f.chi(f.mul(a, b)) != f.chi(a) * f.chi(b)) {
                c.require(false, "chi multiplicativity fails at (" + std::to_string(a) + ", " +
                                     std::to_string(b) + ")");
                return;
            }
    c.require(f.chi(f.neg(1)) == -1, "chi(-1) != -1");
}

void criterion5(Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    auto fams7 = search_families(7);
    bool has_worked = false;
    for (const auto& fam : fams7) has_worked = has_worked || fam == kWorkedFamily;
    c.require(has_worked, "search at n = 7 misses the worked-example family");

    for (int n : {1, 3, 5, 7, 11}) {
        auto fams = search_families(n);
        c.require(!fams.empty(), "no families at n = " + std::to_string(n));
        for (const auto& fam : fams) {
            if (!verify_family(fam).valid) {
                c.require(false, "family fails verification at n = " + std::to_string(n));
                break;
            }
            OdVerifyResult sym = verify_od(build_symmetric_od(fam));
            OdVerifyResult skew = verify_od(build_skew_od(fam));
            if (!(sym.ok && sym.k1 == 1 && sym.k2 == 4 * n - 1 && skew.ok && skew.k1 == 1 &&
                  skew.k2 == 4 * n - 1)) {
                c.require(false, "family yields a bad design at n = " + std::to_string(n));
                break;
            }
        }
        if (n == 11) {
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            c.require(secs < 10.0, "n = 11 search exceeded 10 s");
            c.note("n = 11 and below enumerated in " + std::to_string(secs) + " s");
        }
    }
}

void criterion6(Criterion& c) {
    const std::vector<std::vector<int>> expected = {
        {1, 10, 100},   {11, 101, 110}, {2, 20, 89},   {22, 91, 109}, {3, 30, 78},
        {33, 81, 108},  {4, 40, 67},    {44, 71, 107}, {5, 50, 56},   {55, 61, 106},
        {6, 45, 60},    {51, 66, 105},  {7, 34, 70},   {41, 77, 104}, {8, 23, 80},
        {31, 88, 103},  {9, 12, 90},    {21, 99, 102}, {13, 19, 79},  {32, 92, 98},
        {14, 29, 68},   {43, 82, 97},   {15, 39, 57},  {54, 72, 96},  {16, 46, 49},
        {62, 65, 95},   {17, 35, 59},   {52, 76, 94},  {18, 24, 69},  {42, 87, 93},
        {25, 28, 58},   {53, 83, 86},   {26, 38, 47},  {64, 73, 85},  {27, 36, 48},
        {63, 75, 84},   {37},           {74}};
    OrbitTable t = orbit_table(111, {10});
    c.require(t.orbits.size() == 38, "expected 38 labels, got " + std::to_string(t.orbits.size()));
    for (size_t l = 0; l < expected.size() && l < t.orbits.size(); ++l)
        if (t.orbits[l] != expected[l]) {
            c.require(false, "orbit with label " + std::to_string(l) + " differs");
            return;
        }
    c.require(t.orbits[36] == std::vector<int>{37}, "label 36 is not {37}");
    c.require(t.orbits[37] == std::vector<int>{74}, "label 37 is not {74}");
}

void criterion7(Criterion& c) {
    LegendrePair szek = szekeres_pair();
    c.require(verify_legp(szek).ok, "Szekeres pair fails verification");
    c.require(check_skew_set(111, szek.U), "Szekeres M is not skew");
    c.require(check_symmetric_set(111, szek.V), "Szekeres N is not symmetric");

    LegendrePair contributed = contributed_pair();
    c.require(verify_legp(contributed).ok, "contributed pair fails verification");

    DatasetReport rep = verify_published_solutions();
    for (const auto& f : rep.failures) c.require(false, f);

    // the published claim: the 13 solutions are pairwise inequivalent
    c.require(rep.distinct_classes == 13,
              "equivalence engine reports " + std::to_string(rep.distinct_classes) +
                  " classes among the 13 published solutions, not 13");

    // each merge found by the engine has an elementwise multiplier witness;
    // verify the witnesses here so the finding stands on its own
    auto sols = published_solutions();
    auto mul = [](const std::vector<int>& b, int t) {
        std::vector<int> out;
        for (int e : b) out.push_back(static_cast<int>(static_cast<long long>(e) * t % 111));
        std::sort(out.begin(), out.end());
        return out;
    };
    struct Witness { int i, j, t; bool swap; };
    for (const Witness& w : {Witness{1, 2, 52, false}, Witness{6, 8, 13, true}, Witness{7, 12, 17, true}}) {
        const LegendrePair& a = sols[w.i - 1];
        const LegendrePair& b = sols[w.j - 1];
        bool holds = w.swap ? (mul(a.V, w.t) == b.U && mul(a.U, w.t) == b.V)
                            : (mul(a.U, w.t) == b.U && mul(a.V, w.t) == b.V);
        c.require(holds, "multiplier witness for solutions " + std::to_string(w.i) + " ~ " +
                             std::to_string(w.j) + " does not hold");
        c.note("solution " + std::to_string(w.j) + " = " + std::to_string(w.t) + " * solution " +
               std::to_string(w.i) + (w.swap ? " with blocks swapped" : "") +
               " (witness verified elementwise)");
    }

    c.require(equivalent(published_solutions()[12], contributed),
              "solution 13 is not equivalent to the contributed pair");
    c.require(!equivalent(szek, contributed), "Szekeres pair is equivalent to the contributed pair");
}

void criterion8(Criterion& c) {
    // PAF vs set intersection, every odd v <= 31, every shift
    std::mt19937 rng(0xacce97);
    for (int v = 3; v <= 31; v += 2) {
        for (int rep = 0; rep < 25; ++rep) {
            std::vector<int> x;
            for (int e = 0; e < v; ++e)
                if (rng() & 1) x.push_back(e);
            int k = static_cast<int>(x.size());
            std::vector<int> row = incidence_row(v, x);
            std::vector<char> in(v, 0);
            for (int e : x) in[e] = 1;
            for (int s = 1; s < v; ++s) {
                int d = 0;
                for (int e : x)
                    if (in[((e - s) % v + v) % v]) ++d;
                if (paf(row, s) != v - 4 * (k - d)) {
                    c.require(false, "PAF identity fails at v = " + std::to_string(v));
                    return;
                }
            }
        }
    }

    // bit-packed inner products vs naive signed sums, exhaustive row pairs
    for (int trial = 0; trial < 4; ++trial) {
        SignMatrix m(64);
        std::vector<std::vector<int>> plain(64, std::vector<int>(64, 1));
        for (int i = 0; i < 64; ++i)
            for (int j = 0; j < 64; ++j)
                if (rng() & 1) { m.set(i, j, -1); plain[i][j] = -1; }
        for (int i = 0; i < 64; ++i)
            for (int j = 0; j < 64; ++j) {
                int naive = 0;
                for (int k = 0; k < 64; ++k) naive += plain[i][k] * plain[j][k];
                if (m.row_inner_product(i, j) != naive) {
                    c.require(false, "bit-packed inner product disagrees with the naive sum");
                    return;
                }
            }
    }

    // symbolic Gram vs integer substitution at all (x, y) in {-3..3}^2
    for (OdMatrix m : {build_skew_od(kWorkedFamily), build_symmetric_od(kWorkedFamily)}) {
        OdVerifyResult res = verify_od(m);
        c.require(res.ok, "worked-example design fails symbolic verification");
        for (int x = -3; x <= 3; ++x)
            for (int y = -3; y <= 3; ++y) {
                IntMatrix num = substitute(m, x, y);
                if (num * num.transpose() !=
                    IntMatrix::identity(m.order()).scaled(res.k1 * x * x + res.k2 * y * y)) {
                    c.require(false, "substitution oracle fails at (" + std::to_string(x) + ", " +
                                         std::to_string(y) + ")");
                    return;
                }
            }
    }
}

void criterion9(Criterion& c) {
    c.note("not reproduced at desk scale: q in {67, 107, 131} (n = 17, 27, 33 exceeds the");
    c.note("search bound) and any exhaustive v = 111 Legendre-pair census; q = 59 (n = 15)");
    c.note("turned out to be within the default search bound and is covered by the pipeline.");

    // the file-input path stands in for externally supplied families
    auto fams = search_families(7, 1);
    std::stringstream file;
    write_family(file, fams.front());
    DifferenceFamily fam = read_family(file);
    c.require(fam == fams.front(), "family file round trip failed");
    SignMatrix h = build_symmetric_hadamard(27, fam);
    c.require(h.order() == 756 && is_symmetric(h) && verify_hadamard(h, 2),
              "file-supplied family does not yield a verified H");
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        void (*body)(Criterion&);
        double budget;  // seconds; 0 = none stated
    };
    const Entry entries[] = {
        {1, "worked example (28; 1, 27) designs", criterion1, 1.0},
        {2, "symmetric Hadamard pipeline, q in {3,11,19,27,43}", criterion2, 60.0},
        {3, "Paley identities, q in {3,11,19,27}", criterion3, 0},
        {4, "GF(27) generator and character", criterion4, 0},
        {5, "difference-family search, n in {1,3,5,7,11}", criterion5, 0},
        {6, "orbit table reproduction, v = 111", criterion6, 0},
        {7, "Legendre dataset and equivalences", criterion7, 120.0},
        {8, "oracle equivalences", criterion8, 0},
        {9, "large-q file-input path (non-reproducible cases stated)", criterion9, 0},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        Criterion c{e.id};
        auto start = std::chrono::steady_clock::now();
        e.body(c);
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (e.budget > 0) c.time_budget(e.budget);
        std::cout << "criterion " << e.id << ": " << (c.pass ? "PASS" : "FAIL") << "  " << e.title
                  << "  (" << c.seconds << " s)" << c.notes.str() << "\n";
        if (!c.pass) ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
