#include "dct/solve.hpp"

#include <algorithm>

namespace dct {

namespace {

IntVec unit_vec(int n, int i) {
    IntVec e(n, Int(0));
    e[i] = 1;
    return e;
}

IntVec uinv_row(const SmithDecomposition& S, int i) {
    return S.Uinv.apply_transpose(unit_vec(S.Uinv.rows(), i));
}

} // namespace

IntSolve solve_integer(const SmithDecomposition& S, const IntVec& b) {
    const int m = S.D.rows(), n = S.D.cols();
    if (static_cast<int>(b.size()) != m) throw input_error("solve_integer: rhs dimension mismatch");

    IntVec y = S.Uinv.apply(b);
    IntVec z(n, Int(0));
    const int diag = std::min(m, n);
    for (int i = 0; i < m; ++i) {
        Int d = i < diag ? S.D.get(i, i) : Int(0);
        if (d == 0) {
            if (y[i] != 0) {
                IntSolve out;
                out.certificate = Congruence{i, Int(0), y[i], uinv_row(S, i)};
                return out;
            }
        } else if (y[i] % d != 0) {
            IntSolve out;
            out.certificate = Congruence{i, d, y[i], uinv_row(S, i)};
            return out;
        } else {
            z[i] = y[i] / d;
        }
    }
    IntSolve out;
    out.solution = S.Winv.apply(z);
    return out;
}

IntSolve solve_integer(const IntMatrix& A, const IntVec& b) {
    return solve_integer(smith_normal_form(A), b);
}

IntMatrix integer_kernel(const SmithDecomposition& S) {
    const int n = S.D.cols();
    std::vector<int> free_cols;
    for (int i = 0; i < n; ++i)
        if (S.diag(i) == 0) free_cols.push_back(i);
    IntMatrix K(n, static_cast<int>(free_cols.size()));
    int out = 0;
    for (int i : free_cols) {
        K.set_column(out++, S.Winv.column(i));
    }
    return K;
}

namespace {

struct Rref {
    std::vector<RatVec> rows;
    std::vector<int> pivot_col; // per pivot row
    int n = 0;
};

Rref rref_of(const RatMatrix& A, const RatVec* rhs) {
    const int m = A.rows(), n = A.cols();
    std::vector<RatVec> M(m, RatVec(n + (rhs ? 1 : 0), Rat(0)));
    for (const auto& [rc, v] : A.entries()) M[rc.first][rc.second] = v;
    if (rhs)
        for (int r = 0; r < m; ++r) M[r][n] = (*rhs)[r];

    Rref out;
    out.n = n;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int pr = -1;
        for (int r = row; r < m; ++r)
            if (M[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[row], M[pr]);
        Rat inv = M[row][col];
        for (auto& v : M[row]) v /= inv;
        for (int r = 0; r < m; ++r) {
            if (r == row || M[r][col] == 0) continue;
            Rat f = M[r][col];
            for (std::size_t c = col; c < M[r].size(); ++c) M[r][c] -= f * M[row][c];
        }
        out.pivot_col.push_back(col);
        ++row;
    }
    out.rows.assign(M.begin(), M.end());
    return out;
}

} // namespace

std::optional<RatVec> solve_rational(const RatMatrix& A, const RatVec& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw input_error("solve_rational: rhs dimension mismatch");
    Rref r = rref_of(A, &b);
    const int n = A.cols();
    const int rank = static_cast<int>(r.pivot_col.size());
    for (int i = rank; i < A.rows(); ++i)
        if (r.rows[i][n] != 0) return std::nullopt;
    RatVec x(n, Rat(0));
    for (int i = 0; i < rank; ++i) x[r.pivot_col[i]] = r.rows[i][n];
    return x;
}

std::vector<RatVec> rational_kernel(const RatMatrix& A) {
    Rref r = rref_of(A, nullptr);
    const int n = A.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : r.pivot_col) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(n, Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < r.pivot_col.size(); ++i) v[r.pivot_col[i]] = -r.rows[i][c];
        // first nonzero entry positive
        for (const auto& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

long rational_rank(const RatMatrix& A) {
    return static_cast<long>(rref_of(A, nullptr).pivot_col.size());
}

} // namespace dct
