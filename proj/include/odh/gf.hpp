#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace odh {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Writes q = p^k with p prime, k >= 1, or nothing if q is not a prime power.
inline std::optional<std::pair<int, int>> factor_prime_power(long long q) {
    if (q < 2) return std::nullopt;
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        int k = 0;
        long long m = q;
        while (m % p == 0) { m /= p; ++k; }
        if (m != 1) return std::nullopt;
        return std::make_pair(static_cast<int>(p), k);
    }
    return std::make_pair(static_cast<int>(q), 1);  // q itself prime
}

/// Exact arithmetic in GF(p^k).
///
/// Elements are encoded as integers 0..q-1, read as base-p digit vectors:
/// digit i is the coefficient of x^i. For k > 1 the field is F_p[x]/(f)
/// where f is the lexicographically smallest monic irreducible polynomial
/// of degree k, coefficient sequences compared low-degree-first. Prime
/// fields (k = 1) carry no modulus. The construction is fully
/// deterministic, so two fields built from the same (p, k) agree on every
/// derived object (generator, character, element ordering).
class FiniteField {
public:
    FiniteField(int p, int k) : p_(p), k_(k) {
        if (!is_prime(p)) throw std::invalid_argument("FiniteField: p = " + std::to_string(p) + " is not prime");
        if (k < 1) throw std::invalid_argument("FiniteField: k must be >= 1");
        long long q = 1;
        for (int i = 0; i < k; ++i) {
            q *= p;
            if (q > kMaxOrder) throw std::invalid_argument("FiniteField: p^k exceeds the supported bound 2^20");
        }
        q_ = static_cast<int>(q);
        if (k_ > 1) modulus_ = smallest_irreducible(p_, k_);
        build_tables();
    }

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    /// Modulus coefficients, low degree first, length k+1 (monic). Empty for k = 1.
    const std::vector<int>& modulus() const { return modulus_; }

    /// The smallest element (integer encoding order) of multiplicative order q-1.
    int generator() const { return g_; }

    int add(int a, int b) const {
        check(a); check(b);
        if (k_ == 1) return (a + b) % p_;
        int r = 0, pw = 1;
        for (int i = 0; i < k_; ++i) {
            int da = (a / pw) % p_ + (b / pw) % p_;
            r += (da % p_) * pw;
            pw *= p_;
        }
        return r;
    }

    int neg(int a) const {
        check(a);
        if (k_ == 1) return (p_ - a) % p_;
        int r = 0, pw = 1;
        for (int i = 0; i < k_; ++i) {
            int d = (a / pw) % p_;
            r += ((p_ - d) % p_) * pw;
            pw *= p_;
        }
        return r;
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

    int mul(int a, int b) const {
        check(a); check(b);
        if (k_ == 1) return static_cast<int>(static_cast<long long>(a) * b % p_);
        // schoolbook product of digit vectors, then reduction by the modulus
        std::vector<int> prod(2 * k_ - 1, 0);
        std::vector<int> da = digits(a), db = digits(b);
        for (int i = 0; i < k_; ++i) {
            if (!da[i]) continue;
            for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        for (int d = 2 * k_ - 2; d >= k_; --d) {
            int c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (int i = 0; i < k_; ++i)
                prod[d - k_ + i] = ((prod[d - k_ + i] - c * modulus_[i]) % p_ + p_) % p_;
        }
        int r = 0, pw = 1;
        for (int i = 0; i < k_; ++i) { r += prod[i] * pw; pw *= p_; }
        return r;
    }

    int pow(int a, long long e) const {
        check(a);
        int r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Quadratic character: chi(0) = 0, chi(g^i) = (-1)^i.
    int chi(int e) const {
        check(e);
        return chi_[e];
    }

    /// All q elements in the order 0, g^0, g^1, ..., g^{q-2}.
    std::vector<int> paley_order() const {
        std::vector<int> out;
        out.reserve(q_);
        out.push_back(0);
        out.insert(out.end(), powers_.begin(), powers_.end());
        return out;
    }

    /// Base-p digits of an element, low degree first, length k.
    std::vector<int> digits(int e) const {
        check(e);
        std::vector<int> d(k_);
        for (int i = 0; i < k_; ++i) { d[i] = e % p_; e /= p_; }
        return d;
    }

    static constexpr int kMaxOrder = 1 << 20;

private:
    void check(int e) const {
        if (e < 0 || e >= q_) throw std::out_of_range("FiniteField: element out of range");
    }

    // Trial division by every monic polynomial of degree 1..deg/2. A reducible
    // polynomial has an irreducible factor of degree <= deg/2, which divides it,
    // so testing all monic polynomials of those degrees is sufficient.
    static bool is_irreducible(const std::vector<int>& f, int p) {
        int deg = static_cast<int>(f.size()) - 1;
        for (int d = 1; 2 * d <= deg; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (long long enc = 0; enc < count; ++enc) {
                std::vector<int> g(d + 1, 0);
                long long e = enc;
                for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(e % p); e /= p; }
                g[d] = 1;
                if (divides(g, f, p)) return false;
            }
        }
        return true;
    }

    static bool divides(const std::vector<int>& g, const std::vector<int>& f, int p) {
        std::vector<int> r = f;
        int dg = static_cast<int>(g.size()) - 1;
        for (int d = static_cast<int>(r.size()) - 1; d >= dg; --d) {
            int c = r[d];
            if (!c) continue;
            for (int i = 0; i <= dg; ++i)
                r[d - dg + i] = ((r[d - dg + i] - c * g[i]) % p + p) % p;
        }
        for (int i = 0; i < dg; ++i)
            if (r[i]) return false;
        return true;
    }

    static std::vector<int> smallest_irreducible(int p, int k) {
        // monic f = c_0 + c_1 x + ... + c_{k-1} x^{k-1} + x^k; candidates are
        // walked in lexicographic order of (c_0, c_1, ..., c_{k-1})
        std::vector<int> c(k, 0);
        for (;;) {
            std::vector<int> f = c;
            f.push_back(1);
            if (is_irreducible(f, p)) return f;
            int i = k - 1;
            while (i >= 0 && c[i] == p - 1) c[i--] = 0;
            if (i < 0) throw std::logic_error("no irreducible polynomial found");  // cannot happen
            ++c[i];
        }
    }

    void build_tables() {
        // factor q-1 once; a candidate generates iff c^((q-1)/r) != 1 for
        // every prime r dividing q-1
        long long m = q_ - 1;
        std::vector<long long> primes;
        for (long long d = 2; d * d <= m; ++d) {
            if (m % d) continue;
            primes.push_back(d);
            while (m % d == 0) m /= d;
        }
        if (m > 1) primes.push_back(m);

        g_ = 1;
        if (q_ > 2) {
            for (int c = 2; c < q_; ++c) {
                bool ok = true;
                for (long long r : primes)
                    if (pow(c, (q_ - 1) / r) == 1) { ok = false; break; }
                if (ok) { g_ = c; break; }
            }
        }

        powers_.resize(q_ - 1);
        chi_.assign(q_, 0);
        int cur = 1;
        for (int i = 0; i < q_ - 1; ++i) {
            powers_[i] = cur;
            chi_[cur] = (i % 2 == 0) ? 1 : -1;
            cur = mul(cur, g_);
        }
    }

    int p_, k_, q_;
    std::vector<int> modulus_;
    int g_ = 1;
    std::vector<int> powers_;     // g^0 .. g^{q-2}
    std::vector<std::int8_t> chi_;
};

inline FiniteField make_field(int p, int k) { return FiniteField(p, k); }

}  // namespace odh
