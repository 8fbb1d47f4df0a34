#pragma once

#include <optional>
#include <vector>

#include "poly.hpp"

namespace sheafline {

template <class T>
struct ring_ops {
    static T zero() { return T(0); }
    static T one() { return T(1); }
    static bool nil(const T& x) { return is_zero(x); }
};

template <class K>
struct ring_ops<Poly<K>> {
    static Poly<K> zero() { return Poly<K>{}; }
    static Poly<K> one() { return Poly<K>::constant(K(1)); }
    static bool nil(const Poly<K>& x) { return x.zero(); }
};

template <class K>
struct ring_ops<LaurentPoly<K>> {
    static LaurentPoly<K> zero() { return LaurentPoly<K>{}; }
    static LaurentPoly<K> one() { return LaurentPoly<K>::constant(K(1)); }
    static bool nil(const LaurentPoly<K>& x) { return x.zero(); }
};

template <>
struct ring_ops<Int> {
    static Int zero() { return Int(0); }
    static Int one() { return Int(1); }
    static bool nil(const Int& x) { return x == 0; }
};

template <class T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), ring_ops<T>::zero()) {}
    Mat(int r, int c, std::vector<T> data) : rows(r), cols(c), a(std::move(data)) {
        if (a.size() != static_cast<size_t>(r) * static_cast<size_t>(c))
            fail(error::kind::dimension_mismatch, "matrix data size does not match shape");
    }

    T& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
    const T& at(int r, int c) const { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = ring_ops<T>::one();
        return m;
    }

    bool is_zero_matrix() const {
        for (const T& x : a)
            if (!ring_ops<T>::nil(x)) return false;
        return true;
    }
};

template <class T>
bool operator==(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols) return false;
    for (size_t i = 0; i < x.a.size(); ++i)
        if (!(x.a[i] == y.a[i])) return false;
    return true;
}
template <class T>
bool operator!=(const Mat<T>& x, const Mat<T>& y) { return !(x == y); }

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
    if (x.cols != y.rows) fail(error::kind::dimension_mismatch, "matrix product shape mismatch");
    Mat<T> r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (ring_ops<T>::nil(x.at(i, k))) continue;
            for (int j = 0; j < y.cols; ++j)
                r.at(i, j) = r.at(i, j) + x.at(i, k) * y.at(k, j);
        }
    return r;
}

template <class T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail(error::kind::dimension_mismatch, "matrix sum shape mismatch");
    Mat<T> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] + y.a[i];
    return r;
}

template <class T>
Mat<T> operator-(const Mat<T>& x, const Mat<T>& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail(error::kind::dimension_mismatch, "matrix difference shape mismatch");
    Mat<T> r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - y.a[i];
    return r;
}

template <class T>
Mat<T> operator-(const Mat<T>& x) {
    Mat<T> r = x;
    for (auto& v : r.a) v = -v;
    return r;
}

template <class T>
std::vector<T> mat_vec(const Mat<T>& m, const std::vector<T>& v) {
    if (m.cols != static_cast<int>(v.size())) fail(error::kind::dimension_mismatch, "matrix/vector size mismatch");
    std::vector<T> r(m.rows, T{});
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            r[i] = r[i] + m.at(i, j) * v[j];
    return r;
}

template <class T>
Mat<T> transpose(const Mat<T>& x) {
    Mat<T> r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j)
            r.at(j, i) = x.at(i, j);
    return r;
}

// Reduced row echelon form over a field.  Returns the pivot column of each
// pivot row in order.
template <class K>
std::vector<int> rref(Mat<K>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int i = row; i < m.rows; ++i)
            if (!is_zero(m.at(i, col))) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        K inv = field_inverse(m.at(row, col));
        for (int j = col; j < m.cols; ++j) m.at(row, j) = inv * m.at(row, j);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            K f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
int rank(Mat<K> m) {
    return static_cast<int>(rref(m).size());
}

// Basis of the right kernel {x : m x = 0}, one column per basis vector.
template <class K>
Mat<K> kernel_basis(Mat<K> m) {
    int n = m.cols;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    int free_count = n - static_cast<int>(pivots.size());
    Mat<K> basis(n, free_count);
    int bc = 0;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[static_cast<size_t>(fc)]) continue;
        basis.at(fc, bc) = K(1);
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            basis.at(pivots[pr], bc) = -m.at(static_cast<int>(pr), fc);
        ++bc;
    }
    return basis;
}

// Solve A X = B where the columns of A are linearly independent.
// Returns nullopt if any column of B is outside the column span.
template <class K>
std::optional<Mat<K>> solve_columns(const Mat<K>& A, const Mat<K>& B) {
    if (A.rows != B.rows) fail(error::kind::dimension_mismatch, "solve shape mismatch");
    Mat<K> aug(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) aug.at(i, A.cols + j) = B.at(i, j);
    }
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c >= A.cols) return std::nullopt;
    if (static_cast<int>(pivots.size()) != A.cols)
        fail(error::kind::internal_inconsistency, "solve_columns requires full column rank");
    Mat<K> X(A.cols, B.cols);
    for (size_t pr = 0; pr < pivots.size(); ++pr)
        for (int j = 0; j < B.cols; ++j)
            X.at(pivots[pr], j) = aug.at(static_cast<int>(pr), A.cols + j);
    return X;
}

template <class K>
Mat<K> inverse(const Mat<K>& m) {
    if (m.rows != m.cols) fail(error::kind::dimension_mismatch, "inverse of non-square matrix");
    auto x = solve_columns(m, Mat<K>::identity(m.rows));
    if (!x) fail(error::kind::singular_matrix, "matrix is singular");
    return *x;
}

template <class K>
K det_field(Mat<K> m) {
    if (m.rows != m.cols) fail(error::kind::dimension_mismatch, "determinant of non-square matrix");
    K d(1);
    for (int col = 0; col < m.cols; ++col) {
        int sel = -1;
        for (int i = col; i < m.rows; ++i)
            if (!is_zero(m.at(i, col))) { sel = i; break; }
        if (sel < 0) return K(0);
        if (sel != col) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(col, j));
            d = -d;
        }
        d = d * m.at(col, col);
        K inv = field_inverse(m.at(col, col));
        for (int i = col + 1; i < m.rows; ++i) {
            if (is_zero(m.at(i, col))) continue;
            K f = inv * m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return d;
}

template <class T>
T exact_div(const T& x, const T& y);

template <>
inline Int exact_div<Int>(const Int& x, const Int& y) {
    if (y == 0) fail(error::kind::singular_matrix, "exact division by zero");
    Int q = x / y;
    if (q * y != x) fail(error::kind::internal_inconsistency, "inexact integer division");
    return q;
}

template <class K>
Poly<K> poly_exact_div(const Poly<K>& x, const Poly<K>& y) {
    auto [q, r] = divmod(x, y);
    if (!r.zero()) fail(error::kind::internal_inconsistency, "inexact polynomial division");
    return q;
}

template <class K>
struct bareiss_div {
    static Poly<K> run(const Poly<K>& x, const Poly<K>& y) { return poly_exact_div(x, y); }
};

// Fraction-free determinant for integral domains (integers, polynomials).
template <class T, class Div>
T det_bareiss(Mat<T> m) {
    if (m.rows != m.cols) fail(error::kind::dimension_mismatch, "determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return ring_ops<T>::one();
    T prev = ring_ops<T>::one();
    bool neg = false;
    for (int k = 0; k < n - 1; ++k) {
        int sel = -1;
        for (int i = k; i < n; ++i)
            if (!ring_ops<T>::nil(m.at(i, k))) { sel = i; break; }
        if (sel < 0) return ring_ops<T>::zero();
        if (sel != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(k, j));
            neg = !neg;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = Div::run(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    T d = m.at(n - 1, n - 1);
    return neg ? -d : d;
}

struct int_div {
    static Int run(const Int& x, const Int& y) { return exact_div(x, y); }
};

inline Int det_int(const Mat<Int>& m) { return det_bareiss<Int, int_div>(m); }

template <class K>
Poly<K> det_poly(const Mat<Poly<K>>& m) {
    return det_bareiss<Poly<K>, bareiss_div<K>>(m);
}

template <class K>
LaurentPoly<K> det_laurent(const Mat<LaurentPoly<K>>& m) {
    if (m.rows != m.cols) fail(error::kind::dimension_mismatch, "determinant of non-square matrix");
    if (m.rows == 0) return LaurentPoly<K>::constant(K(1));
    // pull y^v out of each row so the rest is a polynomial matrix
    int total = 0;
    Mat<Poly<K>> q(m.rows, m.cols);
    std::string var = "y";
    for (const auto& e : m.a)
        if (!e.zero()) { var = e.var; break; }
    for (int i = 0; i < m.rows; ++i) {
        int v = 0;
        bool any = false;
        for (int j = 0; j < m.cols; ++j)
            if (!m.at(i, j).zero()) {
                v = any ? std::min(v, m.at(i, j).low()) : m.at(i, j).low();
                any = true;
            }
        if (!any) return LaurentPoly<K>(0, {}, var);
        total += v;
        for (int j = 0; j < m.cols; ++j)
            q.at(i, j) = twist_monomial(m.at(i, j), -v).as_poly();
    }
    Poly<K> d = det_poly(q);
    return LaurentPoly<K>::from_poly(d, total);
}

// Unit in k[y]: nonzero constant.
template <class K>
bool poly_matrix_unimodular(const Mat<Poly<K>>& m) {
    if (m.rows != m.cols) return false;
    Poly<K> d = det_poly(m);
    return d.degree() == 0;
}

// Unit in k[y, y^-1]: c * y^e with c != 0.
template <class K>
bool laurent_matrix_unimodular(const Mat<LaurentPoly<K>>& m) {
    if (m.rows != m.cols) return false;
    auto u = det_laurent(m).unit();
    return u.has_value() && !is_zero(u->first);
}

} // namespace sheafline
