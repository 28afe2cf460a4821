#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "odh/parallel.hpp"

namespace odh {

/// Four blocks X_0..X_3 in Z_n. Block sizes k_i and lambda = sum(k_i) - n are
/// derived, never stored. A family is valid when X_0 is skew of size (n-1)/2,
/// X_1 = X_2, X_3 is symmetric, and the four incidence-sequence PAFs sum to
/// zero at every nonzero shift (equivalently, within-block differences cover
/// each nonzero element exactly lambda times).
struct DifferenceFamily {
    int n = 1;
    std::array<std::vector<int>, 4> blocks;

    int k(int i) const { return static_cast<int>(blocks[i].size()); }
    int lambda() const { return k(0) + k(1) + k(2) + k(3) - n; }

    bool operator==(const DifferenceFamily& rhs) const { return n == rhs.n && blocks == rhs.blocks; }
    bool operator<(const DifferenceFamily& rhs) const {
        if (n != rhs.n) return n < rhs.n;
        return blocks < rhs.blocks;
    }
};

/// Periodic autocorrelation of a +-1 sequence at shift s.
inline int paf(const std::vector<int>& seq, int s) {
    int n = static_cast<int>(seq.size());
    if (s < 0 || s >= n) throw std::out_of_range("paf: shift out of range");
    int acc = 0;
    for (int j = 0; j < n; ++j) acc += seq[j] * seq[(j + s) % n];
    return acc;
}

/// +1 everywhere except -1 at the positions in X.
inline std::vector<int> incidence_row(int n, const std::vector<int>& x) {
    std::vector<int> row(n, 1);
    for (int e : x) {
        if (e < 0 || e >= n) throw std::out_of_range("incidence_row: element out of range");
        row[e] = -1;
    }
    return row;
}

/// Skew set: 0 excluded, exactly one of {i, n-i} present, size (n-1)/2.
inline bool check_skew(int n, const std::vector<int>& x) {
    if (static_cast<int>(x.size()) != (n - 1) / 2) return false;
    std::vector<char> in(n, 0);
    for (int e : x) {
        if (e < 0 || e >= n) return false;
        in[e] = 1;
    }
    if (n > 0 && in[0]) return false;
    for (int e : x)
        if (in[(n - e) % n]) return false;
    return true;
}

/// Symmetric set: -X = X (mod n).
inline bool check_symmetric(int n, const std::vector<int>& x) {
    std::vector<char> in(n, 0);
    for (int e : x) {
        if (e < 0 || e >= n) return false;
        in[e] = 1;
    }
    for (int e : x)
        if (!in[(n - e) % n]) return false;
    return true;
}

struct FamilyCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct FamilyReport {
    bool valid = false;
    std::vector<FamilyCheck> checks;

    const FamilyCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// Checks conditions (a)-(e), the difference coverage count, and the PAF sum
/// condition. Failures come back as report entries, never exceptions.
inline FamilyReport verify_family(const DifferenceFamily& fam) {
    FamilyReport rep;
    int n = fam.n;
    auto push = [&rep](std::string name, bool pass, std::string detail = "") {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    if (n < 1 || n % 2 == 0) {
        push("modulus", false, "n must be odd and >= 1");
        rep.valid = false;
        return rep;
    }
    bool in_range = true;
    for (const auto& b : fam.blocks) {
        for (int e : b)
            if (e < 0 || e >= n) in_range = false;
        if (!std::is_sorted(b.begin(), b.end()) ||
            std::adjacent_find(b.begin(), b.end()) != b.end())
            in_range = false;
    }
    push("blocks", in_range, in_range ? "" : "blocks must be sorted subsets of 0..n-1");
    if (!in_range) {
        rep.valid = false;
        return rep;
    }

    push("(a) sizes", true,
         "k = (" + std::to_string(fam.k(0)) + "," + std::to_string(fam.k(1)) + "," +
             std::to_string(fam.k(2)) + "," + std::to_string(fam.k(3)) + ")");
    push("(b) parameter sum", fam.k(0) + fam.k(1) + fam.k(2) + fam.k(3) == n + fam.lambda(),
         "lambda = " + std::to_string(fam.lambda()));
    push("(c) X1 = X2", fam.blocks[1] == fam.blocks[2]);
    push("(d) X0 skew", check_skew(n, fam.blocks[0]));
    push("(e) X3 symmetric", check_symmetric(n, fam.blocks[3]));

    // multiset of within-block differences must cover each nonzero residue
    // exactly lambda times
    std::vector<long long> cover(n, 0);
    for (const auto& b : fam.blocks)
        for (int a : b)
            for (int c : b)
                if (a != c) ++cover[((a - c) % n + n) % n];
    bool cover_ok = true;
    for (int s = 1; s < n; ++s)
        if (cover[s] != fam.lambda()) { cover_ok = false; break; }
    push("difference coverage", cover_ok);

    bool paf_ok = true;
    int first_bad = 0;
    std::array<std::vector<int>, 4> rows;
    for (int i = 0; i < 4; ++i) rows[i] = incidence_row(n, fam.blocks[i]);
    for (int s = 1; s < n; ++s) {
        int total = 0;
        for (int i = 0; i < 4; ++i) total += paf(rows[i], s);
        if (total != 0) { paf_ok = false; first_bad = s; break; }
    }
    push("PAF sum", paf_ok, paf_ok ? "" : "first failing shift " + std::to_string(first_bad));

    rep.valid = true;
    for (const auto& c : rep.checks) rep.valid = rep.valid && c.pass;
    return rep;
}

namespace detail {

inline std::vector<int> bits_to_set(std::uint32_t bits, const std::vector<int>& universe) {
    std::vector<int> out;
    for (size_t i = 0; i < universe.size(); ++i)
        if (bits >> i & 1) out.push_back(universe[i]);
    std::sort(out.begin(), out.end());
    return out;
}

// PAF vector of the incidence sequence of X at shifts 1..(n-1)/2 (the other
// shifts mirror these)
inline std::vector<int> paf_half_vector(int n, const std::vector<int>& x) {
    std::vector<char> in(n, 0);
    for (int e : x) in[e] = 1;
    int h = (n - 1) / 2;
    std::vector<int> v(h);
    int k = static_cast<int>(x.size());
    for (int s = 1; s <= h; ++s) {
        int d = 0;
        for (int e : x)
            if (in[(e + s) % n]) ++d;
        v[s - 1] = n - 4 * (k - d);
    }
    return v;
}

}  // namespace detail

/// Exhaustive search for valid families in Z_n. X_0 ranges over the
/// 2^((n-1)/2) skew sets, X_1 = X_2 over all 2^n subsets and X_3 over the
/// 2^((n+1)/2) symmetric sets; instead of testing every X_3, the symmetric
/// sets are indexed by PAF vector once and each (X_0, X_1) pair looks up the
/// exact complement it needs. Results are sorted lexicographically by
/// (X_0, X_1, X_2, X_3); `limit` = 0 returns all, otherwise the first
/// `limit` families in that order. The X_0 loop shards across `workers`
/// threads; output does not depend on the worker count.
inline std::vector<DifferenceFamily> search_families(int n, std::size_t limit = 0, int max_n = 15,
                                                     int workers = 1) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("search_families: n must be odd and >= 1");
    if (n > max_n)
        throw std::invalid_argument("search_families: n = " + std::to_string(n) +
                                    " exceeds the enumeration bound " + std::to_string(max_n));
    int half = (n - 1) / 2;

    // skew sets: pick i or n-i from each pair {i, n-i}
    std::vector<std::vector<int>> skew_sets;
    for (std::uint32_t bits = 0; bits < (1u << half); ++bits) {
        std::vector<int> x;
        for (int i = 1; i <= half; ++i) x.push_back(bits >> (i - 1) & 1 ? n - i : i);
        std::sort(x.begin(), x.end());
        skew_sets.push_back(std::move(x));
    }
    std::sort(skew_sets.begin(), skew_sets.end());

    // all subsets of Z_n, lexicographically as sorted vectors
    std::vector<int> universe(n);
    std::iota(universe.begin(), universe.end(), 0);
    std::vector<std::vector<int>> subsets;
    subsets.reserve(std::size_t{1} << n);
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
        subsets.push_back(detail::bits_to_set(bits, universe));
    std::sort(subsets.begin(), subsets.end());

    // symmetric sets keyed by PAF vector
    std::vector<int> sym_universe;  // 0, then one representative per pair
    sym_universe.push_back(0);
    for (int i = 1; i <= half; ++i) sym_universe.push_back(i);
    std::map<std::vector<int>, std::vector<std::vector<int>>> sym_by_paf;
    for (std::uint32_t bits = 0; bits < (1u << (half + 1)); ++bits) {
        std::vector<int> x;
        if (bits & 1) x.push_back(0);
        for (int i = 1; i <= half; ++i)
            if (bits >> i & 1) {
                x.push_back(i);
                if (n - i != i) x.push_back(n - i);
            }
        std::sort(x.begin(), x.end());
        sym_by_paf[detail::paf_half_vector(n, x)].push_back(std::move(x));
    }
    for (auto& [key, sets] : sym_by_paf) std::sort(sets.begin(), sets.end());

    std::vector<std::vector<int>> subset_pafs(subsets.size());
    for (size_t i = 0; i < subsets.size(); ++i)
        subset_pafs[i] = detail::paf_half_vector(n, subsets[i]);
    std::vector<std::vector<int>> skew_pafs(skew_sets.size());
    for (size_t i = 0; i < skew_sets.size(); ++i)
        skew_pafs[i] = detail::paf_half_vector(n, skew_sets[i]);

    if (workers <= 1) {
        // families surface in lexicographic order, so a limit can stop early
        std::vector<DifferenceFamily> out;
        std::vector<int> need(half);
        for (size_t i0 = 0; i0 < skew_sets.size(); ++i0)
            for (size_t i1 = 0; i1 < subsets.size(); ++i1) {
                for (int s = 0; s < half; ++s)
                    need[s] = -skew_pafs[i0][s] - 2 * subset_pafs[i1][s];
                auto it = sym_by_paf.find(need);
                if (it == sym_by_paf.end()) continue;
                for (const auto& x3 : it->second) {
                    out.push_back(DifferenceFamily{n, {skew_sets[i0], subsets[i1], subsets[i1], x3}});
                    if (limit && out.size() == limit) return out;
                }
            }
        return out;
    }

    std::vector<std::vector<DifferenceFamily>> found(skew_sets.size());
    parallel_chunks(static_cast<std::int64_t>(skew_sets.size()), workers,
                    [&](std::int64_t lo, std::int64_t hi) {
                        std::vector<int> need(half);
                        for (std::int64_t i0 = lo; i0 < hi; ++i0) {
                            for (size_t i1 = 0; i1 < subsets.size(); ++i1) {
                                for (int s = 0; s < half; ++s)
                                    need[s] = -skew_pafs[i0][s] - 2 * subset_pafs[i1][s];
                                auto it = sym_by_paf.find(need);
                                if (it == sym_by_paf.end()) continue;
                                for (const auto& x3 : it->second)
                                    found[i0].push_back(DifferenceFamily{
                                        n, {skew_sets[i0], subsets[i1], subsets[i1], x3}});
                            }
                        }
                    });

    std::vector<DifferenceFamily> out;
    for (auto& bucket : found) {
        for (auto& f : bucket) {
            out.push_back(std::move(f));
            if (limit && out.size() == limit) return out;
        }
    }
    return out;
}

}  // namespace odh
