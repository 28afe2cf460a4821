#pragma once

#include <stdexcept>
#include <string>

#include "odh/diffam.hpp"
#include "odh/gf.hpp"
#include "odh/odesign.hpp"
#include "odh/paley.hpp"
#include "odh/sign_matrix.hpp"

namespace odh {

/// Replaces each cell c*x of Y by the q x q block c*Mx and each cell c*y by
/// c*My. Every cell of Y must be nonzero, otherwise the result would not be
/// a +-1 matrix.
inline SignMatrix blow_up(const OdMatrix& y, const SignMatrix& mx, const SignMatrix& my) {
    if (mx.order() != my.order()) throw std::invalid_argument("blow_up: Mx and My must have the same order");
    int m = y.order();
    int q = mx.order();
    SignMatrix h(m * q);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const OdCell& cell = y.at(i, j);
            if (cell.cx == 0 && cell.cy == 0)
                throw std::invalid_argument("blow_up: design has a zero cell at (" +
                                            std::to_string(i) + ", " + std::to_string(j) + ")");
            const SignMatrix& src = cell.cx != 0 ? mx : my;
            int sign = cell.cx != 0 ? cell.cx : cell.cy;
            for (int r = 0; r < q; ++r)
                for (int c = 0; c < q; ++c) h.set(i * q + r, j * q + c, sign * src.at(r, c));
        }
    return h;
}

/// The full construction for a prime power q = 3 (mod 8): the symmetric
/// OD(1+q; 1, q) built from `fam` (which must live in Z_n for n = (1+q)/4)
/// is blown up with x -> J_q and y -> D_q, giving a symmetric Hadamard
/// matrix of order q(1+q).
inline SignMatrix build_symmetric_hadamard(int q, const DifferenceFamily& fam) {
    auto pk = factor_prime_power(q);
    if (!pk) throw std::invalid_argument("build_symmetric_hadamard: q = " + std::to_string(q) +
                                         " is not a prime power");
    if (q % 8 != 3)
        throw std::invalid_argument("build_symmetric_hadamard: q must be 3 (mod 8), got " +
                                    std::to_string(q));
    int n = (1 + q) / 4;
    if (fam.n != n)
        throw std::invalid_argument("build_symmetric_hadamard: family modulus " +
                                    std::to_string(fam.n) + " does not match (1+q)/4 = " +
                                    std::to_string(n));
    OdMatrix y = build_symmetric_od(fam);  // validates the family
    FiniteField field(pk->first, pk->second);
    return blow_up(y, SignMatrix::all_ones(q), build_d(field));
}

}  // namespace odh
