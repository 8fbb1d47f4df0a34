#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace sheafline {

// A rational point of P^1 in canonical homogeneous form (1, lambda) or (0, 1).
template <class K>
struct RationalPoint {
    bool inf = false;
    K lambda{};

    static RationalPoint infinity() {
        RationalPoint p;
        p.inf = true;
        return p;
    }
    static RationalPoint finite(const K& v) {
        RationalPoint p;
        p.lambda = v;
        return p;
    }
    static RationalPoint homogeneous(const K& a0, const K& a1) {
        if (is_zero(a0) && is_zero(a1))
            fail(error::kind::parse_error, "zero vector is not a projective point");
        if (is_zero(a0)) return infinity();
        return finite(a1 * field_inverse(a0));
    }
    std::pair<K, K> coords() const {
        return inf ? std::pair<K, K>{K(0), K(1)} : std::pair<K, K>{K(1), lambda};
    }
    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        if (a.inf != b.inf) return false;
        return a.inf || a.lambda == b.lambda;
    }
    friend bool operator!=(const RationalPoint& a, const RationalPoint& b) { return !(a == b); }
};

template <class K>
int rational_point_cmp(const RationalPoint<K>& a, const RationalPoint<K>& b) {
    if (a.inf != b.inf) return a.inf ? 1 : -1;
    if (a.inf) return 0;
    return scalar_cmp(a.lambda, b.lambda);
}

// An element of PGL_2, stored with its first nonzero entry scaled to 1.
template <class K>
struct PGL2 {
    K a{}, b{}, c{}, d{}; // row major [[a,b],[c,d]]

    static PGL2 make(K a, K b, K c, K d) {
        if (is_zero(a * d - b * c)) fail(error::kind::singular_matrix, "degenerate moebius matrix");
        K s{};
        if (!is_zero(a)) s = a;
        else if (!is_zero(b)) s = b;
        else if (!is_zero(c)) s = c;
        else s = d;
        K si = field_inverse(s);
        return PGL2{a * si, b * si, c * si, d * si};
    }
    static PGL2 identity() { return make(K(1), K(0), K(0), K(1)); }
    PGL2 inverse() const { return make(d, -b, -c, a); }
    PGL2 compose(const PGL2& o) const { // this after o
        return make(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
    }
    friend bool operator==(const PGL2& x, const PGL2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const PGL2& x, const PGL2& y) { return !(x == y); }
};

template <class K>
RationalPoint<K> moebius_apply(const PGL2<K>& s, const RationalPoint<K>& x) {
    auto [l0, l1] = x.coords();
    return RationalPoint<K>::homogeneous(s.a * l0 + s.b * l1, s.c * l0 + s.d * l1);
}

// the unique element sending (a, b, c) to (a2, b2, c2); triples must be
// pairwise distinct
template <class K>
PGL2<K> mobius_through(const RationalPoint<K>& a, const RationalPoint<K>& b,
                       const RationalPoint<K>& c, const RationalPoint<K>& a2,
                       const RationalPoint<K>& b2, const RationalPoint<K>& c2) {
    auto base = [](const RationalPoint<K>& x, const RationalPoint<K>& y,
                   const RationalPoint<K>& z) {
        if (x == y || y == z || x == z)
            fail(error::kind::degenerate_triple, "points of a moebius triple must be distinct");
        auto [x0, x1] = x.coords();
        auto [y0, y1] = y.coords();
        auto [z0, z1] = z.coords();
        // solve beta0*(x0,x1) + beta1*(z0,z1) = (y0,y1)
        K det = x0 * z1 - x1 * z0;
        K b0 = (y0 * z1 - y1 * z0) * field_inverse(det);
        K b1 = (x0 * y1 - x1 * y0) * field_inverse(det);
        // columns beta0*x and beta1*z send (1:0) -> x, (1:1) -> y, (0:1) -> z
        return PGL2<K>::make(b0 * x0, b1 * z0, b0 * x1, b1 * z1);
    };
    PGL2<K> n1 = base(a, b, c);
    PGL2<K> n2 = base(a2, b2, c2);
    return n2.compose(n1.inverse());
}

template <class K>
struct WeightFunction {
    // sorted by point, weights >= 2, points distinct
    std::vector<std::pair<RationalPoint<K>, int>> entries;

    static WeightFunction make(std::vector<std::pair<RationalPoint<K>, int>> e) {
        for (const auto& [p, w] : e)
            if (w < 2) fail(error::kind::weight_too_small, "weights must be >= 2");
        std::sort(e.begin(), e.end(), [](const auto& x, const auto& y) {
            return rational_point_cmp(x.first, y.first) < 0;
        });
        for (size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i].first == e[i + 1].first)
                fail(error::kind::duplicate_points, "weighted points must be distinct");
        return WeightFunction{std::move(e)};
    }
    int weight_at(const RationalPoint<K>& p) const {
        for (const auto& [q, w] : entries)
            if (q == p) return w;
        return 1;
    }
    std::vector<int> weight_multiset() const {
        std::vector<int> w;
        for (const auto& e : entries) w.push_back(e.second);
        std::sort(w.begin(), w.end());
        return w;
    }
    friend bool operator==(const WeightFunction& a, const WeightFunction& b) {
        if (a.entries.size() != b.entries.size()) return false;
        for (size_t i = 0; i < a.entries.size(); ++i)
            if (!(a.entries[i].first == b.entries[i].first) ||
                a.entries[i].second != b.entries[i].second)
                return false;
        return true;
    }
};

namespace detail {

template <class K>
bool witness_ok(const WeightFunction<K>& w, const WeightFunction<K>& w2, const PGL2<K>& s) {
    for (const auto& [x, wt] : w2.entries)
        if (w.weight_at(moebius_apply(s, x)) != wt) return false;
    PGL2<K> si = s.inverse();
    for (const auto& [x, wt] : w.entries)
        if (w2.weight_at(moebius_apply(si, x)) != wt) return false;
    return true;
}

// a few points outside the given support, used to complete short supports to
// moebius triples
template <class K>
std::vector<RationalPoint<K>> spare_points(const std::vector<RationalPoint<K>>& support,
                                           size_t need, const K& sample) {
    std::vector<RationalPoint<K>> out;
    auto take = [&](const RationalPoint<K>& p) {
        if (out.size() >= need) return;
        for (const auto& q : support)
            if (q == p) return;
        for (const auto& q : out)
            if (q == p) return;
        out.push_back(p);
    };
    take(RationalPoint<K>::infinity());
    if constexpr (std::is_same_v<K, Rat>) {
        for (long long i = 0; out.size() < need; ++i) take(RationalPoint<K>::finite(Rat(i)));
        (void)sample;
    } else {
        for (long long i = 0; i < static_cast<long long>(sample.p) && out.size() < need; ++i)
            take(RationalPoint<K>::finite(K(i, sample.p)));
        if (out.size() < need)
            fail(error::kind::degenerate_triple, "field too small to complete a moebius triple");
    }
    return out;
}

} // namespace detail

// PGL_2-equivalence: search for sigma with w2(x) = w(sigma x) for all x.
// Returns a witness when equivalent.
template <class K>
std::optional<PGL2<K>> weights_equivalent(const WeightFunction<K>& w, const WeightFunction<K>& w2,
                                          const K& sample = K{}) {
    if (w.weight_multiset() != w2.weight_multiset()) return std::nullopt;
    size_t s = w.entries.size();

    if (s == 0) return PGL2<K>::identity();

    std::vector<RationalPoint<K>> supp, supp2;
    for (const auto& e : w.entries) supp.push_back(e.first);
    for (const auto& e : w2.entries) supp2.push_back(e.first);

    if (s <= 2) {
        // any weight-respecting support bijection extends; pair supports
        // sorted by (weight desc, point) and complete with spare points
        auto key_sorted = [](const WeightFunction<K>& f) {
            auto e = f.entries;
            std::sort(e.begin(), e.end(), [](const auto& x, const auto& y) {
                if (x.second != y.second) return x.second > y.second;
                return rational_point_cmp(x.first, y.first) < 0;
            });
            std::vector<RationalPoint<K>> pts;
            for (const auto& it : e) pts.push_back(it.first);
            return pts;
        };
        auto from = key_sorted(w2);
        auto to = key_sorted(w);
        auto pad_from = detail::spare_points(from, 3 - s, sample);
        auto pad_to = detail::spare_points(to, 3 - s, sample);
        from.insert(from.end(), pad_from.begin(), pad_from.end());
        to.insert(to.end(), pad_to.begin(), pad_to.end());
        PGL2<K> sigma = mobius_through(from[0], from[1], from[2], to[0], to[1], to[2]);
        if (detail::witness_ok(w, w2, sigma)) return sigma;
        fail(error::kind::internal_inconsistency, "small-support witness failed verification");
    }

    // fix the first three points of w2 (weight desc, then point order) and try
    // every compatible ordered triple of w's support
    auto e2 = w2.entries;
    std::sort(e2.begin(), e2.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return x.second > y.second;
        return rational_point_cmp(x.first, y.first) < 0;
    });
    for (size_t i = 0; i < s; ++i) {
        if (w.entries[i].second != e2[0].second) continue;
        for (size_t j = 0; j < s; ++j) {
            if (j == i || w.entries[j].second != e2[1].second) continue;
            for (size_t k = 0; k < s; ++k) {
                if (k == i || k == j || w.entries[k].second != e2[2].second) continue;
                PGL2<K> sigma =
                    mobius_through(e2[0].first, e2[1].first, e2[2].first, w.entries[i].first,
                                   w.entries[j].first, w.entries[k].first);
                if (detail::witness_ok(w, w2, sigma)) return sigma;
            }
        }
    }
    return std::nullopt;
}

} // namespace sheafline
