#pragma once
#include <string>
#include <vector>

#include "error.hpp"

namespace hclif {

// Dense matrix over an exact field F.  Row-major flat storage.
template <class F>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<F> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, F(0)) {}

    F& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const F& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    static Mat from_rows(const std::vector<std::vector<F>>& rs) {
        Mat m(static_cast<int>(rs.size()), rs.empty() ? 0 : static_cast<int>(rs[0].size()));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
        return m;
    }

    std::vector<F> row(int i) const {
        return std::vector<F>(a.begin() + static_cast<std::size_t>(i) * cols,
                              a.begin() + static_cast<std::size_t>(i + 1) * cols);
    }
};

template <class F>
inline bool operator==(const Mat<F>& x, const Mat<F>& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}
template <class F>
inline bool operator!=(const Mat<F>& x, const Mat<F>& y) { return !(x == y); }

template <class F>
inline Mat<F> operator+(const Mat<F>& x, const Mat<F>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw math_error("matrix shape mismatch in +");
    Mat<F> r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

template <class F>
inline Mat<F> operator-(const Mat<F>& x, const Mat<F>& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw math_error("matrix shape mismatch in -");
    Mat<F> r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

template <class F>
inline Mat<F> operator*(const Mat<F>& x, const Mat<F>& y) {
    if (x.cols != y.rows) throw math_error("matrix shape mismatch in *");
    Mat<F> r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const F& v = x(i, k);
            if (is_zero(v)) continue;
            for (int j = 0; j < y.cols; ++j) {
                const F& w = y(k, j);
                if (!is_zero(w)) r(i, j) += v * w;
            }
        }
    return r;
}

template <class F>
inline Mat<F> scale(const Mat<F>& x, const F& s) {
    Mat<F> r = x;
    for (auto& v : r.a) v *= s;
    return r;
}

template <class F>
inline Mat<F> transpose(const Mat<F>& x) {
    Mat<F> r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

template <class F>
inline std::vector<F> mat_vec(const Mat<F>& m, const std::vector<F>& v) {
    if (static_cast<int>(v.size()) != m.cols) throw math_error("matrix/vector shape mismatch");
    std::vector<F> r(m.rows, F(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!is_zero(m(i, j))) r[i] += m(i, j) * v[j];
    return r;
}

template <class F>
inline Mat<F> mat_pow(Mat<F> base, long long e) {
    if (base.rows != base.cols) throw math_error("matrix power of non-square matrix");
    Mat<F> r = Mat<F>::identity(base.rows);
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        base = base * base;
    }
    return r;
}

// In-place reduced row echelon form.  Deterministic: pivot is the first row
// with a nonzero entry in the leftmost unfinished column.  Returns rank;
// pivot column indices appended to *pivots when given.
template <class F>
inline int rref(Mat<F>& m, std::vector<int>* pivots = nullptr) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int sel = -1;
        for (int i = rank; i < m.rows; ++i)
            if (!is_zero(m(i, col))) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(rank, j));
        F piv = m(rank, col);
        F ipiv = inv(piv);
        for (int j = col; j < m.cols; ++j) m(rank, j) *= ipiv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank || is_zero(m(i, col))) continue;
            F f = m(i, col);
            for (int j = col; j < m.cols; ++j) m(i, j) -= f * m(rank, j);
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

template <class F>
inline int rank(Mat<F> m) { return rref(m); }

// Basis of the right kernel {v : Mv = 0}.  Canonical: one vector per free
// column in ascending column order, free coordinate set to 1.
template <class F>
inline std::vector<std::vector<F>> nullspace(Mat<F> m) {
    std::vector<int> piv;
    int r = rref(m, &piv);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_piv[c]) continue;
        std::vector<F> v(m.cols, F(0));
        v[c] = F(1);
        for (int i = 0; i < r; ++i) v[piv[i]] = -m(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
inline Mat<F> inverse(const Mat<F>& m) {
    if (m.rows != m.cols) throw math_error("inverse of non-square matrix");
    int n = m.rows;
    Mat<F> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    if (rref(aug) != n) throw math_error("matrix is singular");
    Mat<F> r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

// Unique solution of Ax = b; throws math_error when none or not unique.
template <class F>
inline std::vector<F> solve(const Mat<F>& m, const std::vector<F>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw math_error("solve: rhs size mismatch");
    Mat<F> aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
        aug(i, m.cols) = b[i];
    }
    std::vector<int> piv;
    int r = rref(aug, &piv);
    if (!piv.empty() && piv.back() == m.cols) throw math_error("solve: inconsistent system");
    if (r != m.cols) throw math_error("solve: solution not unique");
    std::vector<F> x(m.cols, F(0));
    for (int i = 0; i < r; ++i) x[piv[i]] = aug(i, m.cols);
    return x;
}

template <class F>
inline F det(Mat<F> m) {
    if (m.rows != m.cols) throw math_error("determinant of non-square matrix");
    F d(1);
    for (int col = 0; col < m.cols; ++col) {
        int sel = -1;
        for (int i = col; i < m.rows; ++i)
            if (!is_zero(m(i, col))) { sel = i; break; }
        if (sel < 0) return F(0);
        if (sel != col) {
            for (int j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        F ipiv = inv(m(col, col));
        for (int i = col + 1; i < m.rows; ++i) {
            if (is_zero(m(i, col))) continue;
            F f = m(i, col) * ipiv;
            for (int j = col; j < m.cols; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

// Incrementally maintained row space in reduced echelon form.  rows[i] has
// pivot column pivots[i]; pivots are strictly increasing and every pivot
// column is eliminated from all other rows, so `rows` is canonical for the
// spanned subspace.
template <class F>
struct RowBasis {
    int cols;
    std::vector<std::vector<F>> rows;
    std::vector<int> pivots;

    explicit RowBasis(int c) : cols(c) {}

    int rank() const { return static_cast<int>(rows.size()); }

    // Residual of v after eliminating all pivot columns.
    std::vector<F> reduce(std::vector<F> v) const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const F& c = v[pivots[i]];
            if (is_zero(c)) continue;
            F f = c;
            const auto& r = rows[i];
            for (int j = pivots[i]; j < cols; ++j)
                if (!is_zero(r[j])) v[j] -= f * r[j];
        }
        return v;
    }

    bool contains(const std::vector<F>& v) const {
        auto res = reduce(v);
        for (const F& x : res)
            if (!is_zero(x)) return false;
        return true;
    }

    // Adds v's residual to the basis; returns false when v was dependent.
    bool add(std::vector<F> v) {
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < cols; ++j)
            if (!is_zero(v[j])) { p = j; break; }
        if (p < 0) return false;
        F ip = inv(v[p]);
        for (int j = p; j < cols; ++j) v[j] *= ip;
        // eliminate the new pivot from existing rows to stay fully reduced
        for (std::size_t i = 0; i < rows.size(); ++i) {
            F f = rows[i][p];
            if (is_zero(f)) continue;
            for (int j = p; j < cols; ++j) rows[i][j] -= f * v[j];
        }
        auto pos = std::lower_bound(pivots.begin(), pivots.end(), p);
        std::size_t idx = static_cast<std::size_t>(pos - pivots.begin());
        pivots.insert(pos, p);
        rows.insert(rows.begin() + idx, std::move(v));
        return true;
    }
};

} // namespace hclif
