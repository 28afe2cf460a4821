#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "odh/diffam.hpp"
#include "odh/int_matrix.hpp"
#include "odh/paley.hpp"

namespace odh {

/// One entry of a two-variable orthogonal design: cx*x + cy*y with
/// cx, cy in {-1,0,1} and at most one of them nonzero.
struct OdCell {
    std::int8_t cx = 0;
    std::int8_t cy = 0;

    bool operator==(const OdCell&) const = default;
    OdCell operator-() const { return {static_cast<std::int8_t>(-cx), static_cast<std::int8_t>(-cy)}; }
};

/// Square matrix over {0, +-x, +-y}, stored as the two coefficient matrices.
class OdMatrix {
public:
    OdMatrix() : n_(0) {}
    explicit OdMatrix(int n) : n_(n), cells_(static_cast<size_t>(n) * n) {
        if (n <= 0) throw std::invalid_argument("OdMatrix: order must be positive");
    }

    int order() const { return n_; }
    OdCell& at(int i, int j) { return cells_[static_cast<size_t>(i) * n_ + j]; }
    const OdCell& at(int i, int j) const { return cells_[static_cast<size_t>(i) * n_ + j]; }

    OdMatrix transpose() const {
        OdMatrix t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool operator==(const OdMatrix& rhs) const { return n_ == rhs.n_ && cells_ == rhs.cells_; }
    bool operator!=(const OdMatrix& rhs) const { return !(*this == rhs); }

    /// Coefficient matrix of one variable ('x' or 'y').
    IntMatrix coefficients(char var) const {
        IntMatrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m.at(i, j) = var == 'x' ? at(i, j).cx : at(i, j).cy;
        return m;
    }

    bool well_formed() const {
        for (const auto& c : cells_) {
            if (c.cx < -1 || c.cx > 1 || c.cy < -1 || c.cy > 1) return false;
            if (c.cx != 0 && c.cy != 0) return false;
        }
        return true;
    }

private:
    int n_;
    std::vector<OdCell> cells_;
};

/// The back-circulant identity on Z_n: R[i][j] = 1 iff i + j = 0 (mod n).
/// This is the R plugged into the design arrays; RAR = A^T for every
/// circulant A of the same order.
inline IntMatrix back_circulant_identity(int n) {
    if (n < 1) throw std::invalid_argument("back_circulant_identity: order must be positive");
    IntMatrix r(n);
    for (int i = 0; i < n; ++i) r.at(i, back_perm(n, i)) = 1;
    return r;
}

/// Cyclic matrix whose row r is the first row shifted right r places.
inline IntMatrix circulant(const std::vector<int>& first_row) {
    int n = static_cast<int>(first_row.size());
    if (n == 0) throw std::invalid_argument("circulant: empty first row");
    IntMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int j = 0; j < n; ++j) m.at(r, j) = first_row[((j - r) % n + n) % n];
    return m;
}

struct OdVerifyResult {
    bool ok = false;
    int k1 = 0, k2 = 0;
    std::string reason;
    int row = -1, col = -1;

    /// "(m; k1, k2)" on success.
    std::string params(int m) const {
        return "(" + std::to_string(m) + "; " + std::to_string(k1) + ", " + std::to_string(k2) + ")";
    }
};

/// Symbolic verification on the coefficient Grams: X*X^T = (k1 x^2 + k2 y^2) I
/// holds iff Cx*Cx^T = k1 I, Cy*Cy^T = k2 I and Cx*Cy^T + Cy*Cx^T = 0 over
/// the integers, with k1, k2 > 0. On failure the result names the first
/// offending cell and the identity that broke.
inline OdVerifyResult verify_od(const OdMatrix& m) {
    OdVerifyResult res;
    if (!m.well_formed()) {
        res.reason = "matrix is not a well-formed two-variable design";
        return res;
    }
    int n = m.order();
    IntMatrix cx = m.coefficients('x');
    IntMatrix cy = m.coefficients('y');
    IntMatrix gxx = cx * cx.transpose();
    IntMatrix gyy = cy * cy.transpose();
    IntMatrix gxy = cx * cy.transpose() + cy * cx.transpose();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (gxx.at(i, j) != (i == j ? gxx.at(0, 0) : 0)) {
                res.reason = "Cx*Cx^T is not a scalar multiple of I";
                res.row = i; res.col = j;
                return res;
            }
            if (gyy.at(i, j) != (i == j ? gyy.at(0, 0) : 0)) {
                res.reason = "Cy*Cy^T is not a scalar multiple of I";
                res.row = i; res.col = j;
                return res;
            }
            if (gxy.at(i, j) != 0) {
                res.reason = "Cx*Cy^T + Cy*Cx^T is not zero";
                res.row = i; res.col = j;
                return res;
            }
        }
    res.k1 = gxx.at(0, 0);
    res.k2 = gyy.at(0, 0);
    if (res.k1 <= 0 || res.k2 <= 0) {
        res.reason = (res.k1 <= 0 ? "k1" : "k2") + std::string(" is not positive");
        return res;
    }
    res.ok = true;
    return res;
}

/// Constant diagonal, and anti-symmetric cell-wise once the diagonal is removed.
inline bool is_skew_type(const OdMatrix& m) {
    int n = m.order();
    for (int i = 1; i < n; ++i)
        if (m.at(i, i) != m.at(0, 0)) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != -m.at(j, i)) return false;
    return true;
}

inline bool is_symmetric(const OdMatrix& m) {
    int n = m.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

/// Integer matrix obtained by substituting concrete values for x and y.
inline IntMatrix substitute(const OdMatrix& m, int x, int y) {
    int n = m.order();
    IntMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = m.at(i, j).cx * x + m.at(i, j).cy * y;
    return out;
}

namespace detail {

// symbolic n x n block
struct OdBlock {
    IntMatrix cx, cy;
};

// y * A for a +-1 circulant A
inline OdBlock times_y(const IntMatrix& a) { return {IntMatrix(a.order()), a}; }

// (x - y) I + y A0; the diagonal of A0 is +1, so diagonal cells are exactly x
inline OdBlock diag_block(const IntMatrix& a0) {
    int n = a0.order();
    OdBlock b{IntMatrix::identity(n), a0};
    for (int i = 0; i < n; ++i) b.cy.at(i, i) -= 1;
    return b;
}

enum class RSide { none, right, left };

// one entry of a 4x4 array template: which plugged matrix, its sign, and
// whether it is multiplied by R and on which side
struct ArraySlot {
    int src;
    int sign;
    RSide r;
};

using ArrayTemplate = std::array<std::array<ArraySlot, 4>, 4>;

//      [  A    BR   CR   DR ]
//      [ -BR   A   -RD   RC ]
//      [ -CR   RD   A   -RB ]
//      [ -DR  -RC   RB   A  ]
inline constexpr ArrayTemplate kGoethalsSeidel = {{
    {{{0, +1, RSide::none}, {1, +1, RSide::right}, {2, +1, RSide::right}, {3, +1, RSide::right}}},
    {{{1, -1, RSide::right}, {0, +1, RSide::none}, {3, -1, RSide::left}, {2, +1, RSide::left}}},
    {{{2, -1, RSide::right}, {3, +1, RSide::left}, {0, +1, RSide::none}, {1, -1, RSide::left}}},
    {{{3, -1, RSide::right}, {2, -1, RSide::left}, {1, +1, RSide::left}, {0, +1, RSide::none}}},
}};

//      [ -A    BR   CR   DR ]
//      [  BR   RD   A   -RC ]
//      [  CR   A   -RD   RB ]
//      [  DR  -RC   RB   A  ]
inline constexpr ArrayTemplate kBalonin = {{
    {{{0, -1, RSide::none}, {1, +1, RSide::right}, {2, +1, RSide::right}, {3, +1, RSide::right}}},
    {{{1, +1, RSide::right}, {3, +1, RSide::left}, {0, +1, RSide::none}, {2, -1, RSide::left}}},
    {{{2, +1, RSide::right}, {0, +1, RSide::none}, {3, -1, RSide::left}, {1, +1, RSide::left}}},
    {{{3, +1, RSide::right}, {2, -1, RSide::left}, {1, +1, RSide::left}, {0, +1, RSide::none}}},
}};

inline OdMatrix assemble(const ArrayTemplate& tpl, const std::array<OdBlock, 4>& plugged, int n) {
    OdMatrix out(4 * n);
    for (int bi = 0; bi < 4; ++bi)
        for (int bj = 0; bj < 4; ++bj) {
            const ArraySlot& slot = tpl[bi][bj];
            const OdBlock& blk = plugged[slot.src];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    int si = i, sj = j;
                    if (slot.r == RSide::right) sj = back_perm(n, j);   // (M R)[i][j] = M[i][perm(j)]
                    else if (slot.r == RSide::left) si = back_perm(n, i);  // (R M)[i][j] = M[perm(i)][j]
                    OdCell cell{static_cast<std::int8_t>(slot.sign * blk.cx.at(si, sj)),
                                static_cast<std::int8_t>(slot.sign * blk.cy.at(si, sj))};
                    out.at(bi * n + i, bj * n + j) = cell;
                }
        }
    return out;
}

inline std::array<IntMatrix, 4> family_circulants(const DifferenceFamily& fam) {
    std::array<IntMatrix, 4> a;
    for (int i = 0; i < 4; ++i) a[i] = circulant(incidence_row(fam.n, fam.blocks[i]));
    return a;
}

inline void require_valid(const DifferenceFamily& fam, const char* who) {
    FamilyReport rep = verify_family(fam);
    if (!rep.valid) {
        std::string why;
        for (const auto& c : rep.checks)
            if (!c.pass) { why = c.name; break; }
        throw std::invalid_argument(std::string(who) + ": family is not valid (" + why + ")");
    }
}

}  // namespace detail

/// Plugs (x-y)I + yA_0, yA_1, yA_2, yA_3 into the Goethals-Seidel array.
/// The result is a skew-type OD(4n; 1, 4n-1).
inline OdMatrix build_skew_od(const DifferenceFamily& fam) {
    detail::require_valid(fam, "build_skew_od");
    auto a = detail::family_circulants(fam);
    std::array<detail::OdBlock, 4> plugged = {detail::diag_block(a[0]), detail::times_y(a[1]),
                                              detail::times_y(a[2]), detail::times_y(a[3])};
    return detail::assemble(detail::kGoethalsSeidel, plugged, fam.n);
}

/// Plugs yA_3, yA_1, yA_2, (x-y)I + yA_0 into the Balonin array. The result
/// is a symmetric OD(4n; 1, 4n-1).
inline OdMatrix build_symmetric_od(const DifferenceFamily& fam) {
    detail::require_valid(fam, "build_symmetric_od");
    auto a = detail::family_circulants(fam);
    std::array<detail::OdBlock, 4> plugged = {detail::times_y(a[3]), detail::times_y(a[1]),
                                              detail::times_y(a[2]), detail::diag_block(a[0])};
    return detail::assemble(detail::kBalonin, plugged, fam.n);
}

}  // namespace odh
