#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <istream>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "odh/diffam.hpp"
#include "odh/parallel.hpp"

namespace odh {

/// Two blocks U, V in Z_v, both of size (v-1)/2, whose incidence-sequence
/// PAFs sum to -2 at every nonzero shift.
struct LegendrePair {
    int v = 1;
    std::vector<int> U, V;

    bool operator==(const LegendrePair& rhs) const { return v == rhs.v && U == rhs.U && V == rhs.V; }
    bool operator<(const LegendrePair& rhs) const {
        if (v != rhs.v) return v < rhs.v;
        if (U != rhs.U) return U < rhs.U;
        return V < rhs.V;
    }
};

struct LegpReport {
    bool ok = false;
    std::string reason;
    int failing_shift = -1;
};

inline bool check_skew_set(int v, const std::vector<int>& x) { return check_skew(v, x); }
inline bool check_symmetric_set(int v, const std::vector<int>& x) { return check_symmetric(v, x); }

namespace zmask {

// characteristic bit vector of a subset of Z_v
using Mask = std::vector<std::uint64_t>;

inline int words_for(int v) { return (v + 63) / 64; }

inline Mask from_set(int v, const std::vector<int>& s) {
    Mask m(words_for(v), 0);
    for (int e : s) {
        if (e < 0 || e >= v) throw std::out_of_range("zmask: element out of range");
        m[e >> 6] |= std::uint64_t{1} << (e & 63);
    }
    return m;
}

inline std::vector<int> to_set(int v, const Mask& m) {
    std::vector<int> s;
    for (int e = 0; e < v; ++e)
        if (m[e >> 6] >> (e & 63) & 1) s.push_back(e);
    return s;
}

inline bool test(const Mask& m, int e) { return m[e >> 6] >> (e & 63) & 1; }

inline int popcount(const Mask& m) {
    int c = 0;
    for (auto w : m) c += std::popcount(w);
    return c;
}

// x -> x + 1 (mod v) applied to every element, in place
inline void rotate1_inplace(int v, Mask& m) {
    int w = static_cast<int>(m.size());
    std::uint64_t wrap = m[w - 1] >> ((v - 1) & 63) & 1;  // element v-1 wraps to 0
    for (int i = w - 1; i > 0; --i) m[i] = (m[i] << 1) | (m[i - 1] >> 63);
    m[0] = (m[0] << 1) | wrap;
    if (v & 63) m[w - 1] &= (std::uint64_t{1} << (v & 63)) - 1;
}

inline Mask rotate1(int v, const Mask& m) {
    Mask out = m;
    rotate1_inplace(v, out);
    return out;
}

// x -> t*x (mod v) applied to every element
inline Mask multiply(int v, const Mask& m, int t) {
    Mask out(m.size(), 0);
    for (int e = 0; e < v; ++e)
        if (test(m, e)) {
            int f = static_cast<int>(static_cast<long long>(e) * t % v);
            out[f >> 6] |= std::uint64_t{1} << (f & 63);
        }
    return out;
}

// order sets by their smallest differing element: the set containing it wins
inline int compare(const Mask& a, const Mask& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t diff = a[i] ^ b[i];
        if (diff) {
            std::uint64_t low = diff & (~diff + 1);
            return (a[i] & low) ? -1 : 1;
        }
    }
    return 0;
}

inline Mask min_rotation(int v, const Mask& m) {
    Mask best = m;
    Mask cur = m;
    for (int s = 1; s < v; ++s) {
        rotate1_inplace(v, cur);
        if (compare(cur, best) < 0) best = cur;
    }
    return best;
}

// |B intersect (B + s)|
inline int shift_intersection(int v, const Mask& m, const Mask& shifted) {
    int c = 0;
    for (size_t i = 0; i < m.size(); ++i) c += std::popcount(m[i] & shifted[i]);
    return c;
}

}  // namespace zmask

/// PAF of the incidence sequence of block X at each shift 0..v-1, computed
/// from intersection counts: paf(s) = v - 4(k - |X intersect (X+s)|).
inline std::vector<int> paf_vector(int v, const std::vector<int>& x) {
    zmask::Mask m = zmask::from_set(v, x);
    int k = static_cast<int>(x.size());
    std::vector<int> out(v);
    zmask::Mask cur = m;
    out[0] = v;
    for (int s = 1; s < v; ++s) {
        zmask::rotate1_inplace(v, cur);
        out[s] = v - 4 * (k - zmask::shift_intersection(v, m, cur));
    }
    return out;
}

/// Power spectral density of a block at frequency j, as the cosine transform
/// of its PAF.
inline double psd(int v, const std::vector<int>& x, int j) {
    std::vector<int> p = paf_vector(v, x);
    double acc = 0;
    for (int s = 0; s < v; ++s) acc += p[s] * std::cos(2.0 * M_PI * j * s / v);
    return acc;
}

inline LegpReport verify_legp(int v, const std::vector<int>& u, const std::vector<int>& w) {
    LegpReport rep;
    if (v < 1 || v % 2 == 0) {
        rep.reason = "v must be odd and >= 1";
        return rep;
    }
    auto valid_block = [v](const std::vector<int>& b) {
        for (int e : b)
            if (e < 0 || e >= v) return false;
        std::vector<int> s = b;
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) == s.end();
    };
    if (!valid_block(u) || !valid_block(w)) {
        rep.reason = "blocks must be subsets of 0..v-1 without repeats";
        return rep;
    }
    int half = (v - 1) / 2;
    if (static_cast<int>(u.size()) != half || static_cast<int>(w.size()) != half) {
        rep.reason = "block size must be (v-1)/2 = " + std::to_string(half) +
                     ", got " + std::to_string(u.size()) + " and " + std::to_string(w.size());
        return rep;
    }
    std::vector<int> pu = paf_vector(v, u);
    std::vector<int> pw = paf_vector(v, w);
    for (int s = 1; s < v; ++s)
        if (pu[s] + pw[s] != -2) {
            rep.reason = "PAF sum is " + std::to_string(pu[s] + pw[s]) + " at shift " +
                         std::to_string(s);
            rep.failing_shift = s;
            return rep;
        }
    rep.ok = true;
    return rep;
}

inline LegpReport verify_legp(const LegendrePair& p) { return verify_legp(p.v, p.U, p.V); }

/// Labelled orbits of a subgroup H of units acting multiplicatively on
/// {1..v-1}. Labels follow the rule: take the smallest uncovered element m,
/// give the next label to orbit(m), then, when distinct, the following label
/// to orbit(-m).
struct OrbitTable {
    int v = 0;
    std::vector<int> subgroup;               // full subgroup, ascending
    std::vector<std::vector<int>> orbits;    // label -> sorted orbit
};

inline OrbitTable orbit_table(int v, const std::vector<int>& generators) {
    if (v < 1) throw std::invalid_argument("orbit_table: v must be >= 1");
    std::vector<int> gens;
    for (int g : generators) {
        int t = ((g % v) + v) % v;
        if (std::gcd(t, v) != 1)
            throw std::invalid_argument("orbit_table: generator " + std::to_string(g) +
                                        " is not a unit of Z_" + std::to_string(v));
        gens.push_back(t);
    }
    // subgroup closure
    std::set<int> h = {1 % v};
    std::vector<int> frontier(h.begin(), h.end());
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier)
            for (int g : gens) {
                int b = static_cast<int>(static_cast<long long>(a) * g % v);
                if (h.insert(b).second) next.push_back(b);
            }
        frontier = std::move(next);
    }

    OrbitTable table;
    table.v = v;
    table.subgroup.assign(h.begin(), h.end());
    std::vector<char> covered(v, 0);
    auto orbit_of = [&](int m) {
        std::set<int> o;
        for (int t : table.subgroup) o.insert(static_cast<int>(static_cast<long long>(m) * t % v));
        return std::vector<int>(o.begin(), o.end());
    };
    for (int m = 1; m < v; ++m) {
        if (covered[m]) continue;
        std::vector<int> o = orbit_of(m);
        for (int e : o) covered[e] = 1;
        bool neg_in = std::binary_search(o.begin(), o.end(), v - m);
        table.orbits.push_back(std::move(o));
        if (!neg_in) {
            std::vector<int> on = orbit_of(v - m);
            for (int e : on) covered[e] = 1;
            table.orbits.push_back(std::move(on));
        }
    }
    return table;
}

/// {0} together with the union of the named orbits, sorted.
inline std::vector<int> decode_labels(const OrbitTable& table, const std::vector<int>& labels) {
    std::set<int> out = {0};
    for (int l : labels) {
        if (l < 0 || l >= static_cast<int>(table.orbits.size()))
            throw std::invalid_argument("decode_labels: unknown label " + std::to_string(l));
        out.insert(table.orbits[l].begin(), table.orbits[l].end());
    }
    return std::vector<int>(out.begin(), out.end());
}

inline std::vector<int> units_of(int v) {
    std::vector<int> u;
    for (int t = 1; t < v; ++t)
        if (std::gcd(t, v) == 1) u.push_back(t);
    if (v == 1) u.push_back(0);  // degenerate ring; identity map only
    return u;
}

/// Lexicographically minimal pair over the transformation group
/// U -> t*U + a, V -> t*V + b (one unit t, independent shifts a and b),
/// composed with an optional block swap. Idempotent; two pairs are
/// equivalent exactly when their canonical forms agree.
inline LegendrePair canonical_form(const LegendrePair& p) {
    int v = p.v;
    zmask::Mask mu = zmask::from_set(v, p.U);
    zmask::Mask mv = zmask::from_set(v, p.V);
    std::optional<std::pair<zmask::Mask, zmask::Mask>> best;
    for (int swap = 0; swap < 2; ++swap) {
        const zmask::Mask& x = swap ? mv : mu;
        const zmask::Mask& y = swap ? mu : mv;
        for (int t : units_of(v)) {
            zmask::Mask cu = zmask::min_rotation(v, zmask::multiply(v, x, t));
            // the first component decides; skip the second when already worse
            int c = best ? zmask::compare(cu, best->first) : -1;
            if (c > 0) continue;
            zmask::Mask cv = zmask::min_rotation(v, zmask::multiply(v, y, t));
            if (c < 0 || zmask::compare(cv, best->second) < 0) best = {cu, cv};
        }
    }
    return LegendrePair{v, zmask::to_set(v, best->first), zmask::to_set(v, best->second)};
}

inline bool equivalent(const LegendrePair& a, const LegendrePair& b) {
    if (a.v != b.v) throw std::invalid_argument("equivalent: lengths differ");
    return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// H-invariant search

struct LegpSearchStats {
    std::uint64_t space = 0;        // number of candidate blocks in the enumeration
    std::uint64_t cursor = 0;       // next candidate rank to process
    std::uint64_t enumerated = 0;   // candidates processed so far (across resumed runs)
    std::uint64_t psd_pass = 0;     // candidates surviving the PSD bound
    std::uint64_t matched = 0;      // fingerprint matches submitted to the exact check
    std::uint64_t pairs_found = 0;  // verified pairs before dedup
};

struct LegpCheckpoint {
    int v = 0;
    std::vector<int> generators;
    LegpSearchStats stats;
};

inline void write_checkpoint(std::ostream& os, const LegpCheckpoint& cp) {
    os << "LEGP-CHECKPOINT 1\n";
    os << "v " << cp.v << "\n";
    os << "generators ";
    for (size_t i = 0; i < cp.generators.size(); ++i)
        os << (i ? "," : "") << cp.generators[i];
    os << "\n";
    os << "space " << cp.stats.space << "\n";
    os << "cursor " << cp.stats.cursor << "\n";
    os << "enumerated " << cp.stats.enumerated << "\n";
    os << "psd_pass " << cp.stats.psd_pass << "\n";
    os << "matched " << cp.stats.matched << "\n";
    os << "pairs_found " << cp.stats.pairs_found << "\n";
}

inline LegpCheckpoint read_checkpoint(std::istream& is) {
    LegpCheckpoint cp;
    std::string line;
    if (!std::getline(is, line) || line != "LEGP-CHECKPOINT 1")
        throw std::runtime_error("corrupt checkpoint: bad header");
    auto fail = [] { throw std::runtime_error("corrupt checkpoint: bad record"); };
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "v") { if (!(ls >> cp.v)) fail(); }
        else if (key == "generators") {
            std::string rest;
            ls >> rest;
            std::istringstream gs(rest);
            std::string tok;
            while (std::getline(gs, tok, ',')) {
                if (tok.empty()) continue;
                try {
                    cp.generators.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    fail();
                }
            }
        }
        else if (key == "space") { if (!(ls >> cp.stats.space)) fail(); }
        else if (key == "cursor") { if (!(ls >> cp.stats.cursor)) fail(); }
        else if (key == "enumerated") { if (!(ls >> cp.stats.enumerated)) fail(); }
        else if (key == "psd_pass") { if (!(ls >> cp.stats.psd_pass)) fail(); }
        else if (key == "matched") { if (!(ls >> cp.stats.matched)) fail(); }
        else if (key == "pairs_found") { if (!(ls >> cp.stats.pairs_found)) fail(); }
        else fail();
    }
    if (cp.v < 1) throw std::runtime_error("corrupt checkpoint: missing v");
    return cp;
}

struct LegpSearchResult {
    std::vector<LegendrePair> pairs;  // first representative per equivalence class, discovery order
    LegpSearchStats stats;
    bool exhausted = false;
};

namespace detail {

// candidate blocks are subsets of the orbit list {0}, O_0, O_1, ... whose
// sizes sum to (v-1)/2, ordered lexicographically by selected index sequence
struct OrbitEnumeration {
    int v = 0;
    int target = 0;
    std::vector<std::vector<int>> orbits;  // index 0 is {0}, then labelled orbits
    std::vector<int> sizes;
    std::vector<std::vector<std::uint64_t>> ways;  // ways[i][r], saturating

    static constexpr std::uint64_t kSat = std::uint64_t{1} << 62;

    static std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
        std::uint64_t s = a + b;
        return (s < a || s > kSat) ? kSat : s;
    }

    explicit OrbitEnumeration(const OrbitTable& table) {
        v = table.v;
        target = (v - 1) / 2;
        orbits.push_back({0});
        for (const auto& o : table.orbits) orbits.push_back(o);
        for (const auto& o : orbits) sizes.push_back(static_cast<int>(o.size()));
        int m = static_cast<int>(orbits.size());
        ways.assign(m + 1, std::vector<std::uint64_t>(target + 1, 0));
        ways[m][0] = 1;
        for (int i = m - 1; i >= 0; --i)
            for (int r = 0; r <= target; ++r) {
                std::uint64_t w = ways[i + 1][r];
                if (sizes[i] <= r) w = sat_add(w, ways[i + 1][r - sizes[i]]);
                ways[i][r] = w;
            }
    }

    std::uint64_t space() const { return ways[0][target]; }

    // selection for a rank, as orbit indices; include-first branching gives
    // lexicographic order over index sequences
    std::vector<int> unrank(std::uint64_t rank) const {
        std::vector<int> sel;
        int r = target;
        int m = static_cast<int>(orbits.size());
        for (int i = 0; i < m && r > 0; ++i) {
            if (sizes[i] <= r) {
                std::uint64_t with = ways[i + 1][r - sizes[i]];
                if (rank < with) {
                    sel.push_back(i);
                    r -= sizes[i];
                    continue;
                }
                rank -= with;
            }
        }
        return sel;
    }

    std::uint64_t rank_of(const std::vector<int>& sel) const {
        std::uint64_t rank = 0;
        int r = target;
        size_t next = 0;
        int m = static_cast<int>(orbits.size());
        for (int i = 0; i < m && r > 0; ++i) {
            bool chosen = next < sel.size() && sel[next] == i;
            if (sizes[i] <= r) {
                if (chosen) {
                    ++next;
                    r -= sizes[i];
                } else {
                    rank += ways[i + 1][r - sizes[i]];
                }
            } else if (chosen) {
                throw std::invalid_argument("rank_of: selection infeasible");
            }
        }
        if (next != sel.size() || r != 0) throw std::invalid_argument("rank_of: selection infeasible");
        return rank;
    }

    // rank range [begin, end) of candidates whose first selected index is i
    std::pair<std::uint64_t, std::uint64_t> stratum(int i) const {
        std::uint64_t begin = 0;
        for (int j = 0; j < i; ++j)
            if (sizes[j] <= target) begin = sat_add(begin, ways[j + 1][target - sizes[j]]);
        std::uint64_t len = sizes[i] <= target ? ways[i + 1][target - sizes[i]] : 0;
        return {begin, sat_add(begin, len)};
    }
};

}  // namespace detail

struct LegpSearchOptions {
    int workers = 1;
    /// invoked with a fresh checkpoint after every completed outer-loop
    /// stratum and at the end of the run
    std::function<void(const LegpCheckpoint&)> on_checkpoint;
};

/// Enumerates H-invariant candidate blocks (unions of H-orbits of total size
/// (v-1)/2, the orbit {0} included) in rank order, filters by the PSD bound
/// PSD(j) <= 2v+2, fingerprints survivors by their exact PAF vector, matches
/// complementary fingerprints, confirms matches with verify_legp and
/// deduplicates by canonical form. At most `budget` candidates are processed
/// per call; the cursor in the returned stats (and the checkpoint callback)
/// makes the run resumable. The fingerprint table lives for one call, so
/// pairs whose blocks fall in different calls are not matched.
inline LegpSearchResult search_h_invariant(int v, const std::vector<int>& generators,
                                           std::uint64_t budget,
                                           const LegpCheckpoint* resume = nullptr,
                                           const LegpSearchOptions& opts = {}) {
    OrbitTable table = orbit_table(v, generators);
    detail::OrbitEnumeration enumer(table);
    if (enumer.space() == 0)
        throw std::invalid_argument("search_h_invariant: (v-1)/2 is not a sum of orbit sizes");

    LegpSearchStats stats;
    stats.space = enumer.space();
    if (resume) {
        if (resume->v != v || resume->generators != generators)
            throw std::runtime_error("corrupt checkpoint: v/generators do not match the search");
        stats = resume->stats;
        if (stats.space != enumer.space() || stats.cursor > stats.space)
            throw std::runtime_error("corrupt checkpoint: cursor outside the search space");
    }

    int half = (v - 1) / 2;
    int norbits = static_cast<int>(enumer.orbits.size());

    // per-orbit character sums: sums[o][j-1] = sum over x in orbit of e^(2 pi i j x / v)
    std::vector<std::vector<std::complex<double>>> orbit_sums(norbits);
    for (int o = 0; o < norbits; ++o) {
        orbit_sums[o].resize(half);
        for (int j = 1; j <= half; ++j) {
            std::complex<double> s = 0;
            for (int x : enumer.orbits[o])
                s += std::polar(1.0, 2.0 * M_PI * j * x / v);
            orbit_sums[o][j - 1] = s;
        }
    }
    const double psd_cap = 2.0 * v + 2.0 + 1e-6;

    struct Survivor {
        std::uint64_t rank;
        zmask::Mask mask;
        std::vector<int> dvec;  // |B intersect (B+s)| for s = 1..(v-1)/2
    };
    auto fingerprint_hash = [](const std::vector<int>& dv) {
        std::uint64_t h = 1469598103934665603ull;
        for (int x : dv) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    };

    std::unordered_multimap<std::uint64_t, std::size_t> by_fingerprint;
    std::vector<Survivor> survivors;
    std::vector<LegendrePair> found;
    std::set<LegendrePair> seen_classes;

    auto emit_checkpoint = [&] {
        if (opts.on_checkpoint) opts.on_checkpoint(LegpCheckpoint{v, generators, stats});
    };

    std::uint64_t end_rank = stats.cursor + std::min<std::uint64_t>(budget, stats.space - stats.cursor);
    bool emitted = false;
    while (stats.cursor < end_rank) {
        // find the stratum (first-selected-orbit group) containing the cursor
        std::uint64_t batch_end = end_rank;
        for (int i = 0; i < norbits; ++i) {
            auto [b, e] = enumer.stratum(i);
            if (stats.cursor >= b && stats.cursor < e) {
                batch_end = std::min(end_rank, e);
                break;
            }
        }
        std::uint64_t count = batch_end - stats.cursor;

        // phase 1: enumerate + PSD filter; one worker per shard, shards in rank order
        int nshards = static_cast<int>(std::min<std::uint64_t>(std::max(opts.workers, 1), count));
        std::uint64_t per_shard = (count + nshards - 1) / nshards;
        std::vector<std::vector<Survivor>> shard(nshards);
        parallel_chunks(nshards, opts.workers, [&](std::int64_t slo, std::int64_t shi) {
            for (std::int64_t s_idx = slo; s_idx < shi; ++s_idx) {
                std::uint64_t from = stats.cursor + s_idx * per_shard;
                std::uint64_t to = std::min(batch_end, from + per_shard);
                for (std::uint64_t rank = from; rank < to; ++rank) {
                    std::vector<int> sel = enumer.unrank(rank);
                    bool ok = true;
                    for (int j = 1; j <= half && ok; ++j) {
                        std::complex<double> s = 0;
                        for (int o : sel) s += orbit_sums[o][j - 1];
                        if (4.0 * std::norm(s) > psd_cap) ok = false;
                    }
                    if (!ok) continue;
                    std::vector<int> block;
                    for (int o : sel)
                        block.insert(block.end(), enumer.orbits[o].begin(),
                                     enumer.orbits[o].end());
                    std::sort(block.begin(), block.end());
                    zmask::Mask m = zmask::from_set(v, block);
                    std::vector<int> dvec(half);
                    zmask::Mask cur = m;
                    for (int s = 1; s <= half; ++s) {
                        zmask::rotate1_inplace(v, cur);
                        dvec[s - 1] = zmask::shift_intersection(v, m, cur);
                    }
                    shard[s_idx].push_back(Survivor{rank, std::move(m), std::move(dvec)});
                }
            }
        });

        // phase 2: sequential match in rank order against everything seen so far
        std::vector<Survivor> batch;
        for (auto& s : shard)
            for (auto& x : s) batch.push_back(std::move(x));
        std::sort(batch.begin(), batch.end(),
                  [](const Survivor& a, const Survivor& b) { return a.rank < b.rank; });
        for (auto& cand : batch) {
            ++stats.psd_pass;
            survivors.push_back(std::move(cand));
            std::size_t self = survivors.size() - 1;
            by_fingerprint.emplace(fingerprint_hash(survivors[self].dvec), self);

            std::vector<int> need(half);
            for (int s = 0; s < half; ++s) need[s] = (v - 3) / 2 - survivors[self].dvec[s];
            auto range = by_fingerprint.equal_range(fingerprint_hash(need));
            for (auto it = range.first; it != range.second; ++it) {
                const Survivor& other = survivors[it->second];
                if (other.dvec != need) continue;
                ++stats.matched;
                LegendrePair pair{v, zmask::to_set(v, other.mask),
                                  zmask::to_set(v, survivors[self].mask)};
                if (!verify_legp(pair).ok) continue;
                ++stats.pairs_found;
                LegendrePair canon = canonical_form(pair);
                if (seen_classes.insert(canon).second) found.push_back(pair);
            }
        }

        stats.cursor = batch_end;
        stats.enumerated += count;
        emit_checkpoint();
        emitted = true;
    }
    if (!emitted) emit_checkpoint();

    LegpSearchResult result;
    result.pairs = std::move(found);
    result.stats = stats;
    result.exhausted = stats.cursor == stats.space;
    return result;
}

}  // namespace odh
