#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dct/error.hpp"
#include "dct/rational.hpp"

namespace dct {

// Sparse matrix over an exact scalar type.  Zero entries are never stored;
// iteration order over entries is deterministic (row-major map order).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, T(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T get(int r, int c) const {
        check_index(r, c);
        auto it = entries_.find({r, c});
        return it == entries_.end() ? T(0) : it->second;
    }

    void set(int r, int c, const T& v) {
        check_index(r, c);
        if (v == 0)
            entries_.erase({r, c});
        else
            entries_[{r, c}] = v;
    }

    void add_to(int r, int c, const T& dv) {
        if (dv == 0) return;
        check_index(r, c);
        auto [it, fresh] = entries_.try_emplace({r, c}, dv);
        if (!fresh) {
            it->second += dv;
            if (it->second == 0) entries_.erase(it);
        }
    }

    const std::map<std::pair<int, int>, T>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw input_error("matrix product dimension mismatch");
        Matrix p(rows_, o.cols_);
        for (const auto& [rc, v] : entries_) {
            auto lo = o.entries_.lower_bound({rc.second, 0});
            auto hi = o.entries_.lower_bound({rc.second + 1, 0});
            for (auto it = lo; it != hi; ++it) p.add_to(rc.first, it->first.second, v * it->second);
        }
        return p;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix sum dimension mismatch");
        Matrix s = *this;
        for (const auto& [rc, v] : o.entries_) s.add_to(rc.first, rc.second, v);
        return s;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix difference dimension mismatch");
        Matrix s = *this;
        for (const auto& [rc, v] : o.entries_) s.add_to(rc.first, rc.second, -v);
        return s;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw input_error("matrix apply dimension mismatch");
        std::vector<T> y(rows_, T(0));
        for (const auto& [rc, v] : entries_) y[rc.first] += v * x[rc.second];
        return y;
    }

    std::vector<T> apply_transpose(const std::vector<T>& x) const {
        if (static_cast<int>(x.size()) != rows_) throw input_error("matrix apply dimension mismatch");
        std::vector<T> y(cols_, T(0));
        for (const auto& [rc, v] : entries_) y[rc.second] += v * x[rc.first];
        return y;
    }

    std::vector<T> column(int c) const {
        check_col(c);
        std::vector<T> v(rows_, T(0));
        for (const auto& [rc, val] : entries_)
            if (rc.second == c) v[rc.first] = val;
        return v;
    }

    void set_column(int c, const std::vector<T>& v) {
        check_col(c);
        if (static_cast<int>(v.size()) != rows_) throw input_error("column size mismatch");
        for (int r = 0; r < rows_; ++r) set(r, c, v[r]);
    }

private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw input_error("matrix index out of range");
    }
    void check_col(int c) const {
        if (c < 0 || c >= cols_) throw input_error("matrix column out of range");
    }

    int rows_ = 0, cols_ = 0;
    std::map<std::pair<int, int>, T> entries_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (const auto& [rc, v] : m.entries()) r.set(rc.first, rc.second, Rat(v));
    return r;
}

inline RatVec to_rational(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

template <typename T>
std::vector<T> vec_sub(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw input_error("vector size mismatch");
    std::vector<T> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

template <typename T>
T vec_dot(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw input_error("vector size mismatch");
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <typename T>
bool vec_is_zero(const std::vector<T>& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

} // namespace dct
