#pragma once

#include <stdexcept>

#include "odh/gf.hpp"
#include "odh/int_matrix.hpp"
#include "odh/sign_matrix.hpp"

namespace odh {

using CoreMatrix = IntMatrix;

/// Paley core Q: rows and columns are labelled by the field elements in
/// Paley order (0, g^0, g^1, ...), and Q[r][s] = chi(label_r - label_s).
/// Skew-symmetric with zero diagonal when q = 3 (mod 4).
inline CoreMatrix build_core(const FiniteField& field) {
    int q = field.q();
    if (q % 2 == 0) throw std::invalid_argument("build_core: q must be odd");
    std::vector<int> order = field.paley_order();
    CoreMatrix m(q);
    for (int r = 0; r < q; ++r)
        for (int s = 0; s < q; ++s)
            m.at(r, s) = field.chi(field.sub(order[r], order[s]));
    return m;
}

// index map of the back-circulant identity: R[i][j] = 1 iff i + j = 0 (mod n);
// the circulant-block convention used by the design arrays
inline int back_perm(int n, int i) { return i == 0 ? 0 : n - i; }

// R in the Paley row ordering pairs each label with its additive inverse.
// Since -g^i = g^(i + (q-1)/2), index 0 stays put and the tail indices shift
// by (q-1)/2 around the cycle of length q-1. In the natural ordering of a
// prime field this is exactly [1] (+) the back-diagonal identity of order
// q-1; the Paley reordering conjugates it into this form.
inline int paley_r_perm(int q, int i) {
    if (i == 0) return 0;
    return 1 + (i - 1 + (q - 1) / 2) % (q - 1);
}

/// The symmetric involutive permutation R with R[r][s] = 1 exactly when the
/// Paley-order labels of r and s sum to zero; satisfies RQR = Q^T = -Q.
inline IntMatrix build_r(int q) {
    if (q < 2) throw std::invalid_argument("build_r: q must be >= 2");
    IntMatrix r(q);
    for (int i = 0; i < q; ++i) r.at(i, paley_r_perm(q, i)) = 1;
    return r;
}

/// D_q = (I_q + Q) R. For q = 3 (mod 4) this is a symmetric {+1,-1} matrix
/// with D*D^T = (q+1)I - J; any two distinct rows have inner product -1.
inline SignMatrix build_d(const FiniteField& field) {
    int q = field.q();
    if (q % 4 != 3) throw std::invalid_argument("build_d: q must be 3 (mod 4)");
    std::vector<int> order = field.paley_order();
    SignMatrix d(q);
    for (int r = 0; r < q; ++r)
        for (int s = 0; s < q; ++s) {
            int c = paley_r_perm(q, s);
            // (I + Q)[r][c]: diagonal entries 1, off-diagonal chi(label_r - label_c)
            int v = (r == c) ? 1 : field.chi(field.sub(order[r], order[c]));
            d.set(r, s, v);
        }
    return d;
}

struct PaleyBundle {
    FiniteField field;
    CoreMatrix core;  // Q
    IntMatrix r;      // R
    SignMatrix d;     // D_q
    SignMatrix j;     // J_q
};

inline PaleyBundle build_paley(const FiniteField& field) {
    return PaleyBundle{field, build_core(field), build_r(field.q()), build_d(field),
                       SignMatrix::all_ones(field.q())};
}

}  // namespace odh
