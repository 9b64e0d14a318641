#include "dct/smith.hpp"

#include <algorithm>

namespace dct {

namespace {

// Dense working state for the reduction.  U/W and their inverses are updated
// alongside the elementary operations so that A = U*M*W stays exact.
struct Reduction {
    std::vector<IntVec> M;
    std::vector<IntVec> U, Uinv, W, Winv;
    int m, n;

    explicit Reduction(const IntMatrix& A) : m(A.rows()), n(A.cols()) {
        M.assign(m, IntVec(n, Int(0)));
        for (const auto& [rc, v] : A.entries()) M[rc.first][rc.second] = v;
        U = dense_identity(m);
        Uinv = dense_identity(m);
        W = dense_identity(n);
        Winv = dense_identity(n);
    }

    static std::vector<IntVec> dense_identity(int k) {
        std::vector<IntVec> e(k, IntVec(k, Int(0)));
        for (int i = 0; i < k; ++i) e[i][i] = 1;
        return e;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        std::swap(M[i], M[j]);
        for (int r = 0; r < m; ++r) std::swap(U[r][i], U[r][j]);
        std::swap(Uinv[i], Uinv[j]);
    }

    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m; ++r) std::swap(M[r][i], M[r][j]);
        std::swap(W[i], W[j]);
        for (int r = 0; r < n; ++r) std::swap(Winv[r][i], Winv[r][j]);
    }

    void negate_row(int i) {
        for (auto& v : M[i]) v = -v;
        for (int r = 0; r < m; ++r) U[r][i] = -U[r][i];
        for (auto& v : Uinv[i]) v = -v;
    }

    // row i += t * row j
    void add_row(int i, int j, const Int& t) {
        if (t == 0) return;
        for (int c = 0; c < n; ++c) M[i][c] += t * M[j][c];
        for (int r = 0; r < m; ++r) U[r][j] -= t * U[r][i];
        for (int c = 0; c < m; ++c) Uinv[i][c] += t * Uinv[j][c];
    }

    // col i += t * col j
    void add_col(int i, int j, const Int& t) {
        if (t == 0) return;
        for (int r = 0; r < m; ++r) M[r][i] += t * M[r][j];
        for (int c = 0; c < n; ++c) W[j][c] -= t * W[i][c];
        for (int r = 0; r < n; ++r) Winv[r][i] += t * Winv[r][j];
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A) {
    Reduction red(A);
    const int m = red.m, n = red.n;
    const int steps = std::min(m, n);

    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest |entry| in the working submatrix; ties by (row, col).
            int pr = -1, pc = -1;
            Int best(0);
            for (int r = t; r < m; ++r)
                for (int c = t; c < n; ++c) {
                    const Int& v = red.M[r][c];
                    if (v == 0) continue;
                    Int av = abs(v);
                    if (pr < 0 || av < best) {
                        best = av;
                        pr = r;
                        pc = c;
                    }
                }
            if (pr < 0) break; // submatrix is zero
            red.swap_rows(t, pr);
            red.swap_cols(t, pc);
            if (red.M[t][t] < 0) red.negate_row(t);

            bool clean = true;
            for (int r = t + 1; r < m; ++r) {
                if (red.M[r][t] == 0) continue;
                Int q = floor_div(red.M[r][t], red.M[t][t]);
                red.add_row(r, t, -q);
                if (red.M[r][t] != 0) clean = false;
            }
            for (int c = t + 1; c < n; ++c) {
                if (red.M[t][c] == 0) continue;
                Int q = floor_div(red.M[t][c], red.M[t][t]);
                red.add_col(c, t, -q);
                if (red.M[t][c] != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the rest of the submatrix for d1 | d2 | ...
            bool divides = true;
            for (int r = t + 1; r < m && divides; ++r)
                for (int c = t + 1; c < n; ++c)
                    if (red.M[r][c] % red.M[t][t] != 0) {
                        red.add_row(t, r, Int(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (red.M[t][t] == 0) break;
    }

    SmithDecomposition out;
    out.U = IntMatrix(m, m);
    out.Uinv = IntMatrix(m, m);
    out.W = IntMatrix(n, n);
    out.Winv = IntMatrix(n, n);
    out.D = IntMatrix(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            out.U.set(r, c, red.U[r][c]);
            out.Uinv.set(r, c, red.Uinv[r][c]);
        }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            out.W.set(r, c, red.W[r][c]);
            out.Winv.set(r, c, red.Winv[r][c]);
        }
    out.rank = 0;
    for (int i = 0; i < steps; ++i)
        if (red.M[i][i] != 0) {
            out.D.set(i, i, red.M[i][i]);
            ++out.rank;
        }
    return out;
}

} // namespace dct
