#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <variant>
#include <vector>

#include "factor.hpp"
#include "matrix.hpp"
#include "smith.hpp"

namespace sheafline {

// A closed point of P^1: either infinity or a monic irreducible f in k[y].
template <class K>
struct ClosedPoint {
    bool infinity = false;
    Poly<K> f;

    static ClosedPoint inf() {
        ClosedPoint p;
        p.infinity = true;
        return p;
    }
    static ClosedPoint finite(const Poly<K>& g) {
        if (g.degree() < 1) fail(error::kind::parse_error, "closed point needs degree >= 1");
        ClosedPoint p;
        p.f = monic(g);
        if (p.f.degree() > 1) {
            auto fs = factor(p.f);
            if (fs.size() != 1 || fs[0].second != 1)
                fail(error::kind::parse_error, "closed point polynomial is not irreducible");
        }
        return p;
    }
    int degree() const { return infinity ? 1 : f.degree(); }

    friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) {
        if (a.infinity != b.infinity) return false;
        return a.infinity || a.f == b.f;
    }
    friend bool operator!=(const ClosedPoint& a, const ClosedPoint& b) { return !(a == b); }
};

// finite points first (by poly order), infinity last
template <class K>
int point_cmp(const ClosedPoint<K>& a, const ClosedPoint<K>& b) {
    if (a.infinity != b.infinity) return a.infinity ? 1 : -1;
    if (a.infinity) return 0;
    return poly_cmp(a.f, b.f);
}

template <class K>
struct P1Label {
    bool torsion = false;
    int n = 0;            // LB twist
    ClosedPoint<K> point; // Tor support
    int r = 0;            // Tor length

    static P1Label lb(int n) {
        P1Label l;
        l.n = n;
        return l;
    }
    static P1Label tor(const ClosedPoint<K>& p, int r) {
        if (r < 1) fail(error::kind::parse_error, "torsion length must be >= 1");
        P1Label l;
        l.torsion = true;
        l.point = p;
        l.r = r;
        return l;
    }
    friend bool operator==(const P1Label& a, const P1Label& b) {
        if (a.torsion != b.torsion) return false;
        if (!a.torsion) return a.n == b.n;
        return a.point == b.point && a.r == b.r;
    }
    friend bool operator!=(const P1Label& a, const P1Label& b) { return !(a == b); }
};

template <class K>
int p1_label_cmp(const P1Label<K>& a, const P1Label<K>& b) {
    if (a.torsion != b.torsion) return a.torsion ? 1 : -1;
    if (!a.torsion) return a.n < b.n ? -1 : a.n > b.n ? 1 : 0;
    if (int c = point_cmp(a.point, b.point)) return c;
    return a.r < b.r ? -1 : a.r > b.r ? 1 : 0;
}

template <class K>
struct DerivedLabel {
    P1Label<K> base;
    int shift = 0;
    friend bool operator==(const DerivedLabel& a, const DerivedLabel& b) {
        return a.base == b.base && a.shift == b.shift;
    }
    friend bool operator!=(const DerivedLabel& a, const DerivedLabel& b) { return !(a == b); }
};

// ---------------------------------------------------------------------------
// Birkhoff splitting
// ---------------------------------------------------------------------------

template <class K>
struct BirkhoffSplit {
    Mat<LaurentPoly<K>> U, D, V;
    std::vector<int> type;
};

// F(n) has gluing matrix mu * y^{-n}
template <class K>
Mat<LaurentPoly<K>> twist_bundle(const Mat<LaurentPoly<K>>& mu, int n) {
    Mat<LaurentPoly<K>> out = mu;
    for (auto& e : out.a) e = twist_monomial(e, -n);
    return out;
}

template <class K>
BirkhoffSplit<K> birkhoff_split(const Mat<LaurentPoly<K>>& mu) {
    if (mu.rows != mu.cols) fail(error::kind::not_unimodular, "gluing matrix must be square");
    if (!laurent_matrix_unimodular(mu))
        fail(error::kind::not_unimodular, "determinant of gluing matrix is not a unit");
    int r = mu.rows;
    BirkhoffSplit<K> out;
    out.U = Mat<LaurentPoly<K>>(r, r);
    out.D = Mat<LaurentPoly<K>>(r, r);
    out.V = Mat<LaurentPoly<K>>(r, r);
    if (r == 0) return out;

    int minval = 0;
    bool seen = false;
    for (const auto& e : mu.a)
        if (e.c.size()) {
            minval = seen ? std::min(minval, e.low()) : e.low();
            seen = true;
        }
    int a = -minval;

    // M = y^a * mu, a polynomial matrix; column-reduce over k[y].
    Mat<Poly<K>> M(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            M.at(i, j) = twist_monomial(mu.at(i, j), a).as_poly();
    Mat<Poly<K>> V = Mat<Poly<K>>::identity(r);

    std::vector<int> cdeg(static_cast<size_t>(r));
    for (;;) {
        for (int j = 0; j < r; ++j) {
            int d = -1;
            for (int i = 0; i < r; ++i) d = std::max(d, M.at(i, j).degree());
            if (d < 0) fail(error::kind::internal_inconsistency, "zero column in reduction");
            cdeg[static_cast<size_t>(j)] = d;
        }
        Mat<K> lead(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                lead.at(i, j) = M.at(i, j).coeff(cdeg[static_cast<size_t>(j)]);
        Mat<K> ker = kernel_basis(lead);
        if (ker.cols == 0) break;

        std::vector<K> w(static_cast<size_t>(r));
        for (int j = 0; j < r; ++j) w[static_cast<size_t>(j)] = ker.at(j, 0);
        int m = -1;
        for (int j = 0; j < r; ++j)
            if (!is_zero(w[static_cast<size_t>(j)]))
                if (m < 0 || cdeg[static_cast<size_t>(j)] > cdeg[static_cast<size_t>(m)]) m = j;
        K wm_inv = field_inverse(w[static_cast<size_t>(m)]);
        for (auto& x : w) x = x * wm_inv;

        std::vector<Poly<K>> newcol(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) {
            Poly<K> s;
            for (int j = 0; j < r; ++j) {
                if (is_zero(w[static_cast<size_t>(j)])) continue;
                int sh = cdeg[static_cast<size_t>(m)] - cdeg[static_cast<size_t>(j)];
                s = s + w[static_cast<size_t>(j)] * shift_up(M.at(i, j), sh);
            }
            newcol[static_cast<size_t>(i)] = s;
        }
        for (int i = 0; i < r; ++i) M.at(i, m) = newcol[static_cast<size_t>(i)];
        for (int j = 0; j < r; ++j) {
            if (j == m || is_zero(w[static_cast<size_t>(j)])) continue;
            int sh = cdeg[static_cast<size_t>(m)] - cdeg[static_cast<size_t>(j)];
            Poly<K> q = Poly<K>::constant(w[static_cast<size_t>(j)], "y");
            q = shift_up(q, sh);
            for (int c = 0; c < r; ++c) V.at(j, c) = V.at(j, c) - q * V.at(m, c);
        }
    }

    std::vector<int> idx(static_cast<size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
        return a - cdeg[static_cast<size_t>(x)] < a - cdeg[static_cast<size_t>(y)];
    });

    out.type.reserve(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k) {
        int j = idx[static_cast<size_t>(k)];
        int n = a - cdeg[static_cast<size_t>(j)];
        out.type.push_back(n);
        for (int i = 0; i < r; ++i)
            out.U.at(i, k) = twist_monomial(LaurentPoly<K>::from_poly(M.at(i, j)),
                                            -cdeg[static_cast<size_t>(j)]);
        out.D.at(k, k) = LaurentPoly<K>::from_poly(Poly<K>::constant(K(1), "y"), -n);
        for (int c = 0; c < r; ++c)
            out.V.at(k, c) = LaurentPoly<K>::from_poly(V.at(j, c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Torsion sheaves
// ---------------------------------------------------------------------------

template <class K>
struct TorsionData {
    Mat<Poly<K>> finite_part;   // over k[y]
    Mat<Poly<K>> infinity_part; // over k[z], z = y^{-1}
};

template <class K>
std::vector<std::pair<ClosedPoint<K>, int>> torsion_decompose(const TorsionData<K>& t) {
    if (t.finite_part.rows != t.finite_part.cols || t.infinity_part.rows != t.infinity_part.cols)
        fail(error::kind::dimension_mismatch, "torsion presentation matrices must be square");
    if (t.finite_part.rows > 0 && det_poly(t.finite_part).zero())
        fail(error::kind::singular_matrix, "finite part has zero determinant");
    if (t.infinity_part.rows > 0 && det_poly(t.infinity_part).zero())
        fail(error::kind::singular_matrix, "infinity part has zero determinant");

    std::vector<std::pair<ClosedPoint<K>, int>> out;
    for (const auto& d : smith_poly_diagonal(t.finite_part)) {
        if (d.degree() < 1) continue;
        for (const auto& [q, m] : factor(d)) {
            ClosedPoint<K> p;
            p.f = q;
            out.emplace_back(p, m);
        }
    }

    std::vector<std::pair<Poly<K>, int>> glue_claims;
    for (const auto& d : smith_poly_diagonal(t.infinity_part)) {
        if (d.degree() < 1) continue;
        int zval = 0;
        while (zval <= d.degree() && is_zero(d.coeff(zval))) ++zval;
        if (zval > 0) out.emplace_back(ClosedPoint<K>::inf(), zval);
        Poly<K> g = d;
        for (int i = 0; i < zval; ++i) g = g / Poly<K>(std::vector<K>{K(0), K(1)}, d.var);
        if (g.degree() < 1) continue;
        for (const auto& [q, m] : factor(g))
            glue_claims.emplace_back(monic(reversed(q, "y")), m);
    }

    // each non-z factor at infinity is the reversal of a factor glued at a
    // finite point, so it must already be accounted for in the finite part
    std::vector<bool> used(out.size(), false);
    for (const auto& [q, m] : glue_claims) {
        bool found = false;
        for (size_t i = 0; i < out.size(); ++i) {
            if (used[i] || out[i].first.infinity) continue;
            if (out[i].second == m && out[i].first.f == q) {
                used[i] = true;
                found = true;
                break;
            }
        }
        if (!found)
            fail(error::kind::inconsistent_glue,
                 "infinity chart factor has no matching finite chart factor");
    }

    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (int c = point_cmp(x.first, y.first)) return c < 0;
        return x.second < y.second;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Hom/Ext tables and label operations
// ---------------------------------------------------------------------------

template <class K>
int hom_dim(const P1Label<K>& f, const P1Label<K>& g) {
    if (!f.torsion && !g.torsion) return std::max(0, g.n - f.n + 1);
    if (!f.torsion && g.torsion) return g.r * g.point.degree();
    if (f.torsion && !g.torsion) return 0;
    if (f.point != g.point) return 0;
    return f.point.degree() * std::min(f.r, g.r);
}

template <class K>
P1Label<K> twist_label(const P1Label<K>& f, int n) {
    if (f.torsion) return f;
    return P1Label<K>::lb(f.n + n);
}

template <class K>
int ext_dim(const P1Label<K>& f, const P1Label<K>& g) {
    return hom_dim(g, twist_label(f, -2));
}

template <class K>
P1Label<K> tau(const P1Label<K>& f) {
    return twist_label(f, -2);
}

template <class K>
bool is_tilting_p1(const std::vector<P1Label<K>>& labels) {
    std::vector<int> twists;
    for (const auto& l : labels) {
        if (l.torsion) return false;
        twists.push_back(l.n);
    }
    std::sort(twists.begin(), twists.end());
    twists.erase(std::unique(twists.begin(), twists.end()), twists.end());
    return twists.size() == 2 && twists[1] == twists[0] + 1;
}

// mutation at a point x: dir +1 applies eps_x, dir -1 applies delta_x
template <class K>
P1Label<K> mutate(const P1Label<K>& f, const ClosedPoint<K>& x, int dir) {
    if (dir != 1 && dir != -1) fail(error::kind::parse_error, "mutation direction must be +1 or -1");
    if (f.torsion) return f;
    return P1Label<K>::lb(f.n + dir * x.degree());
}

} // namespace sheafline
