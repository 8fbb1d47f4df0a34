#pragma once

#include <utility>
#include <vector>

#include "matrix.hpp"

namespace sheafline {

// Euclidean-domain operations needed by the Smith normal form routine.
template <class K>
struct poly_euclid {
    using elem = Poly<K>;
    static bool nil(const elem& x) { return x.zero(); }
    static long long size(const elem& x) { return x.degree(); }
    static std::pair<elem, elem> divide(const elem& a, const elem& b) { return divmod(a, b); }
    // unit u with u*x canonical (monic); x nonzero
    static elem unit_for(const elem& x) { return elem::constant(field_inverse(x.lead()), x.var); }
};

struct int_euclid {
    using elem = Int;
    static bool nil(const elem& x) { return x == 0; }
    static Int size(const elem& x) { return abs(x); }
    static std::pair<elem, elem> divide(const elem& a, const elem& b) {
        Int q = a / b;
        return {q, a - q * b};
    }
    static elem unit_for(const elem& x) { return x < 0 ? Int(-1) : Int(1); }
};

template <class T>
struct SmithForm {
    Mat<T> S;  // rows x rows, unimodular
    Mat<T> D;  // rows x cols, diagonal divisor chain
    Mat<T> T_; // cols x cols, unimodular
    std::vector<T> diagonal() const {
        int n = std::min(D.rows, D.cols);
        std::vector<T> d;
        d.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) d.push_back(D.at(i, i));
        return d;
    }
};

// S*M*T = D with d_0 | d_1 | ..., canonical associates, zeros last.
template <class Ops>
SmithForm<typename Ops::elem> smith_form(Mat<typename Ops::elem> m) {
    using T = typename Ops::elem;
    int n = std::min(m.rows, m.cols);
    Mat<T> S = Mat<T>::identity(m.rows);
    Mat<T> Tm = Mat<T>::identity(m.cols);

    auto swap_rows = [&](int i, int j) {
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
        for (int c = 0; c < S.cols; ++c) std::swap(S.at(i, c), S.at(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
        for (int r = 0; r < Tm.rows; ++r) std::swap(Tm.at(r, i), Tm.at(r, j));
    };
    auto row_sub = [&](int i, int k, const T& q) {  // row_i -= q * row_k
        for (int c = 0; c < m.cols; ++c) m.at(i, c) = m.at(i, c) - q * m.at(k, c);
        for (int c = 0; c < S.cols; ++c) S.at(i, c) = S.at(i, c) - q * S.at(k, c);
    };
    auto col_sub = [&](int j, int k, const T& q) {  // col_j -= q * col_k
        for (int r = 0; r < m.rows; ++r) m.at(r, j) = m.at(r, j) - q * m.at(r, k);
        for (int r = 0; r < Tm.rows; ++r) Tm.at(r, j) = Tm.at(r, j) - q * Tm.at(r, k);
    };
    auto row_add = [&](int i, int k) {  // row_i += row_k
        for (int c = 0; c < m.cols; ++c) m.at(i, c) = m.at(i, c) + m.at(k, c);
        for (int c = 0; c < S.cols; ++c) S.at(i, c) = S.at(i, c) + S.at(k, c);
    };

    for (int k = 0; k < n; ++k) {
        bool done = false;
        while (!done) {
            int pr = -1, pc = -1;
            for (int i = k; i < m.rows; ++i)
                for (int j = k; j < m.cols; ++j) {
                    if (Ops::nil(m.at(i, j))) continue;
                    if (pr < 0 || Ops::size(m.at(i, j)) < Ops::size(m.at(pr, pc))) { pr = i; pc = j; }
                }
            if (pr < 0) { done = true; break; }
            if (pr != k) swap_rows(pr, k);
            if (pc != k) swap_cols(pc, k);

            bool again = true;
            while (again) {
                again = false;
                for (int i = k + 1; i < m.rows; ++i) {
                    if (Ops::nil(m.at(i, k))) continue;
                    auto [q, r] = Ops::divide(m.at(i, k), m.at(k, k));
                    row_sub(i, k, q);
                    if (!Ops::nil(r)) { swap_rows(i, k); again = true; }
                }
                if (again) continue;
                for (int j = k + 1; j < m.cols; ++j) {
                    if (Ops::nil(m.at(k, j))) continue;
                    auto [q, r] = Ops::divide(m.at(k, j), m.at(k, k));
                    col_sub(j, k, q);
                    if (!Ops::nil(r)) { swap_cols(j, k); again = true; }
                }
            }

            bool fixed = false;
            for (int i = k + 1; i < m.rows && !fixed; ++i)
                for (int j = k + 1; j < m.cols && !fixed; ++j) {
                    if (Ops::nil(m.at(i, j))) continue;
                    auto [q, r] = Ops::divide(m.at(i, j), m.at(k, k));
                    (void)q;
                    if (!Ops::nil(r)) { row_add(k, i); fixed = true; }
                }
            if (!fixed) done = true;
        }
        if (done && (k >= m.rows || k >= m.cols || Ops::nil(m.at(k, k)))) break;
        T u = Ops::unit_for(m.at(k, k));
        for (int c = 0; c < m.cols; ++c) m.at(k, c) = u * m.at(k, c);
        for (int c = 0; c < S.cols; ++c) S.at(k, c) = u * S.at(k, c);
    }
    return {std::move(S), std::move(m), std::move(Tm)};
}

template <class K>
SmithForm<Poly<K>> smith_poly(const Mat<Poly<K>>& m) {
    return smith_form<poly_euclid<K>>(m);
}

inline SmithForm<Int> smith_int(const Mat<Int>& m) {
    return smith_form<int_euclid>(m);
}

template <class K>
std::vector<Poly<K>> smith_poly_diagonal(const Mat<Poly<K>>& m) {
    return smith_poly(m).diagonal();
}

inline std::vector<Int> smith_int_diagonal(const Mat<Int>& m) {
    return smith_int(m).diagonal();
}

} // namespace sheafline
