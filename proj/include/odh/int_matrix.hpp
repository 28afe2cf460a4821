#pragma once

#include <stdexcept>
#include <vector>

namespace odh {

/// Dense square integer matrix. Small orders only; used for the Paley core,
/// permutation matrices, and exact Gram computations.
class IntMatrix {
public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(int n, int fill = 0) : n_(n), a_(static_cast<size_t>(n) * n, fill) {
        if (n < 0) throw std::invalid_argument("IntMatrix: negative order");
    }

    int order() const { return n_; }
    int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    int at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix all_ones(int n) { return IntMatrix(n, 1); }

    IntMatrix transpose() const {
        IntMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& rhs) const {
        if (rhs.n_ != n_) throw std::invalid_argument("IntMatrix: order mismatch");
        IntMatrix out(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                int v = at(i, k);
                if (!v) continue;
                for (int j = 0; j < n_; ++j) out.at(i, j) += v * rhs.at(k, j);
            }
        return out;
    }

    IntMatrix operator+(const IntMatrix& rhs) const {
        if (rhs.n_ != n_) throw std::invalid_argument("IntMatrix: order mismatch");
        IntMatrix out(n_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
        return out;
    }

    IntMatrix operator-() const {
        IntMatrix out(n_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = -a_[i];
        return out;
    }

    IntMatrix scaled(int c) const {
        IntMatrix out(n_);
        for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = c * a_[i];
        return out;
    }

    bool operator==(const IntMatrix& rhs) const { return n_ == rhs.n_ && a_ == rhs.a_; }
    bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

private:
    int n_;
    std::vector<int> a_;
};

}  // namespace odh
