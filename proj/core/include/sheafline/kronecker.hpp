#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "p1.hpp"

namespace sheafline {

// Representation of the Kronecker quiver: f0, f1 : V1 -> V0 as d0 x d1 matrices.
template <class K>
struct KroneckerRep {
    int d1 = 0, d0 = 0;
    Mat<K> f0, f1;

    static KroneckerRep make(int d1, int d0, Mat<K> f0, Mat<K> f1) {
        if (f0.rows != d0 || f0.cols != d1 || f1.rows != d0 || f1.cols != d1)
            fail(error::kind::dimension_mismatch, "kronecker maps must be d0 x d1");
        KroneckerRep r;
        r.d1 = d1;
        r.d0 = d0;
        r.f0 = std::move(f0);
        r.f1 = std::move(f1);
        return r;
    }
};

template <class K>
struct KroneckerLabel {
    enum class family { preproj, regular, preinj } fam = family::preproj;
    int n = 0;            // preproj/preinj index
    ClosedPoint<K> point; // regular support
    int r = 0;            // regular length

    static KroneckerLabel preproj(int n) {
        if (n < 0) fail(error::kind::parse_error, "preprojective index must be >= 0");
        KroneckerLabel l;
        l.fam = family::preproj;
        l.n = n;
        return l;
    }
    static KroneckerLabel preinj(int m) {
        if (m < 1) fail(error::kind::parse_error, "preinjective index must be >= 1");
        KroneckerLabel l;
        l.fam = family::preinj;
        l.n = m;
        return l;
    }
    static KroneckerLabel regular(const ClosedPoint<K>& p, int r) {
        if (r < 1) fail(error::kind::parse_error, "regular length must be >= 1");
        KroneckerLabel l;
        l.fam = family::regular;
        l.point = p;
        l.r = r;
        return l;
    }
    friend bool operator==(const KroneckerLabel& a, const KroneckerLabel& b) {
        if (a.fam != b.fam) return false;
        if (a.fam == family::regular) return a.point == b.point && a.r == b.r;
        return a.n == b.n;
    }
    friend bool operator!=(const KroneckerLabel& a, const KroneckerLabel& b) { return !(a == b); }
};

template <class K>
int kron_label_cmp(const KroneckerLabel<K>& a, const KroneckerLabel<K>& b) {
    auto fam_rank = [](const KroneckerLabel<K>& l) {
        switch (l.fam) {
        case KroneckerLabel<K>::family::preproj: return 0;
        case KroneckerLabel<K>::family::regular: return 1;
        default: return 2;
        }
    };
    if (fam_rank(a) != fam_rank(b)) return fam_rank(a) < fam_rank(b) ? -1 : 1;
    if (a.fam == KroneckerLabel<K>::family::regular) {
        if (int c = point_cmp(a.point, b.point)) return c;
        return a.r < b.r ? -1 : a.r > b.r ? 1 : 0;
    }
    return a.n < b.n ? -1 : a.n > b.n ? 1 : 0;
}

namespace detail {

// companion matrix of a monic polynomial, i.e. multiplication by the variable
// on k[y]/(g) in the basis 1, y, ..., y^{deg-1}
template <class K>
Mat<K> companion(const Poly<K>& g) {
    int n = g.degree();
    Mat<K> c(n, n);
    for (int j = 0; j + 1 < n; ++j) c.at(j + 1, j) = K(1);
    for (int i = 0; i < n; ++i) c.at(i, n - 1) = -g.coeff(i);
    return c;
}

template <class K>
Poly<K> poly_pow(const Poly<K>& f, int e) {
    Poly<K> r = Poly<K>::constant(K(1), f.var);
    for (int i = 0; i < e; ++i) r = r * f;
    return r;
}

} // namespace detail

template <class K>
std::pair<KroneckerRep<K>, int> tilt_label(const P1Label<K>& l) {
    using R = KroneckerRep<K>;
    if (!l.torsion) {
        if (l.n >= 0) {
            int n = l.n;
            Mat<K> f0(n + 1, n), f1(n + 1, n);
            for (int c = 0; c < n; ++c) {
                f0.at(c, c) = K(1);
                f1.at(c + 1, c) = K(1);
            }
            return {R::make(n, n + 1, std::move(f0), std::move(f1)), 0};
        }
        int m = -l.n;
        Mat<K> f0(m - 1, m), f1(m - 1, m);
        for (int r = 0; r < m - 1; ++r) {
            f0.at(r, r) = K(1);
            f1.at(r, r + 1) = K(1);
        }
        return {R::make(m, m - 1, std::move(f0), std::move(f1)), 1};
    }
    if (l.point.infinity) {
        int n = l.r;
        Mat<K> f1 = Mat<K>::identity(n);
        Mat<K> f0(n, n);
        for (int j = 0; j + 1 < n; ++j) f0.at(j + 1, j) = K(1);
        return {R::make(n, n, std::move(f0), std::move(f1)), 0};
    }
    Poly<K> g = detail::poly_pow(l.point.f, l.r);
    int n = g.degree();
    return {R::make(n, n, Mat<K>::identity(n), detail::companion(g)), 0};
}

// Global sections model: V0 = Hom(O, F), V1 = Hom(O(1), F), computed directly
// from the gluing matrix without splitting it first.
template <class K>
KroneckerRep<K> tilt_bundle(const Mat<LaurentPoly<K>>& mu) {
    if (mu.rows != mu.cols) fail(error::kind::not_unimodular, "gluing matrix must be square");
    if (!laurent_matrix_unimodular(mu))
        fail(error::kind::not_unimodular, "determinant of gluing matrix is not a unit");
    int r = mu.rows;
    if (r == 0) return KroneckerRep<K>::make(0, 0, Mat<K>(0, 0), Mat<K>(0, 0));

    auto dm = det_laurent(mu);
    auto u = dm.unit();
    int e = u->second;
    int hmax = 0;
    for (const auto& x : mu.a)
        if (x.c.size()) hmax = std::max(hmax, x.high());
    int B = std::max(0, (r - 1) * hmax - e);

    // unknowns x_{j,t}: component j, coefficient of y^t, 0 <= t <= B
    int nv = r * (B + 1);
    auto col_of = [&](int j, int t) { return j * (B + 1) + t; };

    // rows constrain the coefficient of y^s in (mu x)_i to vanish for s >= smin
    auto section_space = [&](int smin) {
        std::vector<std::vector<K>> rows;
        for (int i = 0; i < r; ++i) {
            int hi = 0;
            for (int j = 0; j < r; ++j)
                if (mu.at(i, j).c.size()) hi = std::max(hi, mu.at(i, j).high());
            for (int s = smin; s <= hi + B; ++s) {
                std::vector<K> row(static_cast<size_t>(nv), K(0));
                bool any = false;
                for (int j = 0; j < r; ++j)
                    for (int t = 0; t <= B; ++t) {
                        K c = mu.at(i, j).coeff(s - t);
                        if (is_zero(c)) continue;
                        row[static_cast<size_t>(col_of(j, t))] = c;
                        any = true;
                    }
                if (any) rows.push_back(std::move(row));
            }
        }
        Mat<K> A(static_cast<int>(rows.size()), nv);
        for (int i = 0; i < A.rows; ++i)
            for (int j = 0; j < nv; ++j) A.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
        return kernel_basis(A);
    };

    Mat<K> V0 = section_space(1);
    Mat<K> V1 = section_space(0);
    int d0 = V0.cols, d1 = V1.cols;
    if (d0 - d1 != r)
        fail(error::kind::negative_twist_present,
             "bundle has a summand of negative degree; twist it up first");

    auto f0o = solve_columns(V0, V1);
    if (!f0o) fail(error::kind::internal_inconsistency, "V1 does not embed in V0");

    Mat<K> Y(nv, d1);
    for (int c = 0; c < d1; ++c)
        for (int j = 0; j < r; ++j) {
            if (!is_zero(V1.at(col_of(j, B), c)))
                fail(error::kind::internal_inconsistency, "section degree bound violated");
            for (int t = 0; t < B; ++t) Y.at(col_of(j, t + 1), c) = V1.at(col_of(j, t), c);
        }
    auto f1o = solve_columns(V0, Y);
    if (!f1o) fail(error::kind::internal_inconsistency, "y*V1 does not land in V0");
    return KroneckerRep<K>::make(d1, d0, std::move(*f0o), std::move(*f1o));
}

namespace detail {

// dimension of polynomial solutions x(t), deg <= d, of P x = 0, where the
// pencil P(t) = M1 - t M0 is given by its two coefficient matrices
template <class K>
int pencil_kernel_dim(const Mat<K>& m1, const Mat<K>& m0, int d) {
    int rows = m1.rows, cols = m1.cols;
    // coefficient of t^s in P x, 0 <= s <= d+1
    Mat<K> A(rows * (d + 2), cols * (d + 1));
    for (int s = 0; s <= d + 1; ++s)
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                if (s <= d) A.at(s * rows + i, j * (d + 1) + s) = m1.at(i, j);
                if (s >= 1) {
                    auto& cell = A.at(s * rows + i, j * (d + 1) + (s - 1));
                    cell = cell - m0.at(i, j);
                }
            }
    return kernel_basis(A).cols;
}

// minimal indices of the pencil kernel, via dimension increments
template <class K>
std::vector<int> minimal_indices(const Mat<K>& m1, const Mat<K>& m0, int count) {
    std::vector<int> eps;
    if (count == 0) return eps;
    int cap = m1.rows + m1.cols + 1;
    int prev = 0, prev_cnt = 0;
    for (int d = 0; d <= cap; ++d) {
        int nd = pencil_kernel_dim(m1, m0, d);
        int cnt = nd - prev;
        for (int k = 0; k < cnt - prev_cnt; ++k) eps.push_back(d);
        prev = nd;
        prev_cnt = cnt;
        if (cnt == count) return eps;
    }
    fail(error::kind::internal_inconsistency, "pencil minimal indices did not stabilize");
}

} // namespace detail

template <class K>
std::vector<KroneckerLabel<K>> pencil_decompose(const KroneckerRep<K>& rep) {
    using L = KroneckerLabel<K>;
    std::vector<L> out;

    // finite chart: P(t) = f1 - t f0 over k[t]
    Mat<Poly<K>> P(rep.d0, rep.d1);
    for (int i = 0; i < rep.d0; ++i)
        for (int j = 0; j < rep.d1; ++j)
            P.at(i, j) = Poly<K>(std::vector<K>{rep.f1.at(i, j), -rep.f0.at(i, j)}, "t");
    auto diag = smith_poly_diagonal(P);
    int nrank = 0;
    for (const auto& d : diag)
        if (!d.zero()) ++nrank;
    for (const auto& d : diag) {
        if (d.degree() < 1) continue;
        for (const auto& [q, m] : factor(d)) {
            ClosedPoint<K> p;
            p.f = Poly<K>(q.c, "y");
            out.push_back(L::regular(p, m));
        }
    }

    // infinity chart: f0 - z f1; only the z-power part is new information
    Mat<Poly<K>> Pz(rep.d0, rep.d1);
    for (int i = 0; i < rep.d0; ++i)
        for (int j = 0; j < rep.d1; ++j)
            Pz.at(i, j) = Poly<K>(std::vector<K>{rep.f0.at(i, j), -rep.f1.at(i, j)}, "z");
    for (const auto& d : smith_poly_diagonal(Pz)) {
        if (d.degree() < 1) continue;
        int zval = 0;
        while (zval <= d.degree() && is_zero(d.coeff(zval))) ++zval;
        if (zval > 0) out.push_back(L::regular(ClosedPoint<K>::inf(), zval));
    }

    for (int e : detail::minimal_indices(rep.f1, rep.f0, rep.d1 - nrank))
        out.push_back(L::preinj(e + 1));
    Mat<K> f1t = transpose(rep.f1), f0t = transpose(rep.f0);
    for (int e : detail::minimal_indices(f1t, f0t, rep.d0 - nrank))
        out.push_back(L::preproj(e));

    long long s1 = 0, s0 = 0;
    for (const auto& l : out) {
        switch (l.fam) {
        case L::family::preproj: s1 += l.n; s0 += l.n + 1; break;
        case L::family::preinj: s1 += l.n; s0 += l.n - 1; break;
        case L::family::regular: {
            int d = l.r * l.point.degree();
            s1 += d;
            s0 += d;
            break;
        }
        }
    }
    if (s1 != rep.d1 || s0 != rep.d0)
        fail(error::kind::internal_inconsistency, "pencil summand dimensions do not add up");

    std::sort(out.begin(), out.end(),
              [](const L& x, const L& y) { return kron_label_cmp(x, y) < 0; });
    return out;
}

template <class K>
KroneckerRep<K> rep_of_label(const KroneckerLabel<K>& l) {
    switch (l.fam) {
    case KroneckerLabel<K>::family::preproj: return tilt_label(P1Label<K>::lb(l.n)).first;
    case KroneckerLabel<K>::family::preinj: return tilt_label(P1Label<K>::lb(-l.n)).first;
    default: return tilt_label(P1Label<K>::tor(l.point, l.r)).first;
    }
}

template <class K>
DerivedLabel<K> untilt(const KroneckerLabel<K>& l) {
    switch (l.fam) {
    case KroneckerLabel<K>::family::preproj: return {P1Label<K>::lb(l.n), 0};
    case KroneckerLabel<K>::family::preinj: return {P1Label<K>::lb(-l.n), 1};
    default: return {P1Label<K>::tor(l.point, l.r), 0};
    }
}

template <class K>
KroneckerRep<K> rep_direct_sum(const KroneckerRep<K>& a, const KroneckerRep<K>& b) {
    Mat<K> f0(a.d0 + b.d0, a.d1 + b.d1), f1(a.d0 + b.d0, a.d1 + b.d1);
    for (int i = 0; i < a.d0; ++i)
        for (int j = 0; j < a.d1; ++j) {
            f0.at(i, j) = a.f0.at(i, j);
            f1.at(i, j) = a.f1.at(i, j);
        }
    for (int i = 0; i < b.d0; ++i)
        for (int j = 0; j < b.d1; ++j) {
            f0.at(a.d0 + i, a.d1 + j) = b.f0.at(i, j);
            f1.at(a.d0 + i, a.d1 + j) = b.f1.at(i, j);
        }
    return KroneckerRep<K>::make(a.d1 + b.d1, a.d0 + b.d0, std::move(f0), std::move(f1));
}

template <class K>
std::pair<int, int> rep_hom_ext(const KroneckerRep<K>& a, const KroneckerRep<K>& b) {
    // unknowns: phi0 (b.d0 x a.d0), phi1 (b.d1 x a.d1)
    // equations: phi0 f_i^a - f_i^b phi1 = 0 for i = 0, 1
    int n0 = b.d0 * a.d0, n1 = b.d1 * a.d1;
    auto c0 = [&](int r, int c) { return r * a.d0 + c; };
    auto c1 = [&](int r, int c) { return n0 + r * a.d1 + c; };
    Mat<K> A(2 * b.d0 * a.d1, n0 + n1);
    int row = 0;
    for (int which = 0; which < 2; ++which) {
        const Mat<K>& fa = which == 0 ? a.f0 : a.f1;
        const Mat<K>& fb = which == 0 ? b.f0 : b.f1;
        for (int i = 0; i < b.d0; ++i)
            for (int j = 0; j < a.d1; ++j) {
                for (int k = 0; k < a.d0; ++k) {
                    auto& cell = A.at(row, c0(i, k));
                    cell = cell + fa.at(k, j);
                }
                for (int k = 0; k < b.d1; ++k) {
                    auto& cell = A.at(row, c1(k, j));
                    cell = cell - fb.at(i, k);
                }
                ++row;
            }
    }
    int hom = kernel_basis(A).cols;
    long long chi = static_cast<long long>(a.d1) * b.d1 + static_cast<long long>(a.d0) * b.d0 -
                    2ll * static_cast<long long>(a.d1) * b.d0;
    long long ext = hom - chi;
    if (ext < 0) fail(error::kind::internal_inconsistency, "negative ext dimension");
    return {hom, static_cast<int>(ext)};
}

} // namespace sheafline
