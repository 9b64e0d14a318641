#pragma once

#include "dct/matrix.hpp"

namespace dct {

// A = U * D * W with U, W unimodular and D diagonal, d1 | d2 | ... >= 0.
// Uinv and Winv are tracked during the reduction so that callers can solve
// linear systems and read off kernels without inverting anything.
struct SmithDecomposition {
    IntMatrix U, D, W;
    IntMatrix Uinv, Winv; // D = Uinv * A * Winv
    int rank = 0;

    Int diag(int i) const {
        if (i < 0 || i >= std::min(D.rows(), D.cols())) return Int(0);
        return D.get(i, i);
    }
};

// Pivot rule: smallest absolute value among nonzero candidates, ties broken by
// (row, col) lexicographic order.  This pins representatives across runs.
SmithDecomposition smith_normal_form(const IntMatrix& A);

} // namespace dct
