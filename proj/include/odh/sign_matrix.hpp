#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "odh/int_matrix.hpp"
#include "odh/parallel.hpp"

namespace odh {

/// Square {+1,-1} matrix with bit-packed rows: a set bit stores -1. The inner
/// product of rows i and j is then m - 2*popcount(row_i XOR row_j), so row
/// orthogonality checks are XOR/popcount word scans. Bits past the row length
/// stay clear, which keeps the XOR tail silent.
class SignMatrix {
public:
    SignMatrix() : n_(0), words_(0) {}
    explicit SignMatrix(int n)
        : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {
        if (n <= 0) throw std::invalid_argument("SignMatrix: order must be positive");
    }

    /// J: the all-ones matrix.
    static SignMatrix all_ones(int n) { return SignMatrix(n); }

    int order() const { return n_; }
    int words_per_row() const { return words_; }

    int at(int i, int j) const {
        check(i, j);
        return (bits_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1 ? -1 : 1;
    }

    void set(int i, int j, int value) {
        check(i, j);
        if (value != 1 && value != -1) throw std::invalid_argument("SignMatrix: entries are +1/-1");
        std::uint64_t& w = bits_[static_cast<size_t>(i) * words_ + (j >> 6)];
        std::uint64_t mask = std::uint64_t{1} << (j & 63);
        if (value == -1) w |= mask; else w &= ~mask;
    }

    const std::uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * words_; }

    /// Exact inner product of rows i and j via m - 2*popcount(xor).
    int row_inner_product(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("SignMatrix: row index");
        const std::uint64_t* a = row(i);
        const std::uint64_t* b = row(j);
        int pc = 0;
        for (int w = 0; w < words_; ++w) pc += std::popcount(a[w] ^ b[w]);
        return n_ - 2 * pc;
    }

    SignMatrix transpose() const {
        SignMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j) == -1) t.set(j, i, -1);
        return t;
    }

    SignMatrix negated() const {
        SignMatrix out(n_);
        for (int i = 0; i < n_; ++i) {
            const std::uint64_t* src = row(i);
            std::uint64_t* dst = out.bits_.data() + static_cast<size_t>(i) * out.words_;
            for (int w = 0; w < words_; ++w) dst[w] = ~src[w];
            // keep tail bits clear
            int tail = n_ & 63;
            if (tail) dst[words_ - 1] &= (std::uint64_t{1} << tail) - 1;
        }
        return out;
    }

    bool operator==(const SignMatrix& rhs) const {
        return n_ == rhs.n_ && bits_ == rhs.bits_;
    }
    bool operator!=(const SignMatrix& rhs) const { return !(*this == rhs); }

    IntMatrix to_int_matrix() const {
        IntMatrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j);
        return m;
    }

private:
    void check(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("SignMatrix: index");
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

inline bool is_symmetric(const SignMatrix& h) {
    int n = h.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (h.at(i, j) != h.at(j, i)) return false;
    return true;
}

/// True iff every pair of distinct rows is orthogonal, i.e. H*H^T = m*I.
/// Row pairs partition across `workers` threads; `progress(done, total)` is
/// invoked as row blocks complete (from worker threads when workers > 1).
inline bool verify_hadamard(const SignMatrix& h, int workers = 1,
                            const std::function<void(std::int64_t, std::int64_t)>& progress = {}) {
    int n = h.order();
    if (n % 2 != 0 && n != 1) return false;  // orthogonal +-1 rows need even order
    int half = n / 2;
    int words = h.words_per_row();
    std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
    std::atomic<bool> bad{false};
    std::atomic<std::int64_t> done{0};
    parallel_chunks(n, workers, [&](std::int64_t lo, std::int64_t hi) {
        std::int64_t local = 0;
        for (int i = static_cast<int>(lo); i < hi && !bad.load(std::memory_order_relaxed); ++i) {
            const std::uint64_t* a = h.row(i);
            for (int j = i + 1; j < n; ++j) {
                const std::uint64_t* b = h.row(j);
                int pc = 0;
                for (int w = 0; w < words; ++w) pc += std::popcount(a[w] ^ b[w]);
                if (pc != half) {
                    bad.store(true, std::memory_order_relaxed);
                    return;
                }
            }
            local += n - 1 - i;
            if (progress && (i & 255) == 255) {
                done += local;
                local = 0;
                progress(done.load(), total);
            }
        }
        done += local;
    });
    if (progress && !bad.load()) progress(total, total);
    return !bad.load();
}

}  // namespace odh
