#pragma once

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "algebras.hpp"
#include "lengthcat.hpp"
#include "p1.hpp"

namespace sheafline {

template <class K>
struct WPLSpec {
    std::vector<int> weights;
    std::vector<RationalPoint<K>> points;
};

// Element of the rank-one grading group L(p) in normal form:
// x = l*c + sum a_i*x_i with 0 <= a_i < p_i.
struct LElem {
    long long l = 0;
    std::vector<int> arm;

    friend bool operator==(const LElem& a, const LElem& b) { return a.l == b.l && a.arm == b.arm; }
    friend bool operator!=(const LElem& a, const LElem& b) { return !(a == b); }
};

namespace detail {

inline long long floordiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace detail

template <class K>
struct WPLLabel {
    enum class kind { lb, tor_exceptional, tor_homogeneous } k = kind::lb;
    LElem x;              // lb
    int arm = 0;          // tor_exceptional, 1-based
    int j = 0;            // tor_exceptional top simple, 1..p_arm
    int len = 0;          // tor_exceptional length
    ClosedPoint<K> point; // tor_homogeneous
    int r = 0;            // tor_homogeneous length

    static WPLLabel lb(LElem x) {
        WPLLabel l;
        l.k = kind::lb;
        l.x = std::move(x);
        return l;
    }
    static WPLLabel tor_e(int arm, int j, int len) {
        if (arm < 1) fail(error::kind::parse_error, "arm index must be >= 1");
        if (len < 1) fail(error::kind::parse_error, "torsion length must be >= 1");
        WPLLabel l;
        l.k = kind::tor_exceptional;
        l.arm = arm;
        l.j = j;
        l.len = len;
        return l;
    }
    static WPLLabel tor_h(const ClosedPoint<K>& q, int r) {
        if (r < 1) fail(error::kind::parse_error, "torsion length must be >= 1");
        WPLLabel l;
        l.k = kind::tor_homogeneous;
        l.point = q;
        l.r = r;
        return l;
    }
    friend bool operator==(const WPLLabel& a, const WPLLabel& b) {
        if (a.k != b.k) return false;
        switch (a.k) {
        case kind::lb: return a.x == b.x;
        case kind::tor_exceptional: return a.arm == b.arm && a.j == b.j && a.len == b.len;
        default: return a.point == b.point && a.r == b.r;
        }
    }
    friend bool operator!=(const WPLLabel& a, const WPLLabel& b) { return !(a == b); }
};

// Weighted projective line with its Grothendieck group in the squid basis
// ([O], [O(c)], [S_i^{[l]}] for l = 1..p_i-1).
template <class K>
class WPL {
public:
    explicit WPL(WPLSpec<K> spec) : spec_(std::move(spec)) {
        detail::check_weight_data(spec_.weights, spec_.points);
        arm_offset_.resize(spec_.weights.size());
        int off = 2;
        for (size_t i = 0; i < spec_.weights.size(); ++i) {
            arm_offset_[i] = off;
            off += spec_.weights[i] - 1;
        }
        m_ = off;
        period_ = 1;
        for (int p : spec_.weights) period_ = std::lcm(period_, static_cast<long long>(p));
        gram_ = cartan(squid(spec_.weights, spec_.points));
    }

    const WPLSpec<K>& spec() const { return spec_; }
    int k0_rank() const { return m_; }
    long long period() const { return period_; }
    const Mat<Int>& gram() const { return gram_; }
    int arms() const { return static_cast<int>(spec_.weights.size()); }
    int weight(int i) const { return spec_.weights[static_cast<size_t>(i - 1)]; }

    LElem normal_form(long long l, std::vector<long long> raw) const {
        if (raw.size() != spec_.weights.size())
            fail(error::kind::arity_mismatch, "arm coordinate count does not match weights");
        LElem x;
        x.arm.resize(raw.size());
        x.l = l;
        for (size_t i = 0; i < raw.size(); ++i) {
            long long p = spec_.weights[i];
            long long q = detail::floordiv(raw[i], p);
            x.l += q;
            x.arm[i] = static_cast<int>(raw[i] - q * p);
        }
        return x;
    }
    LElem lelem(long long l, const std::vector<int>& raw = {}) const {
        std::vector<long long> r(spec_.weights.size(), 0);
        for (size_t i = 0; i < raw.size() && i < r.size(); ++i) r[i] = raw[i];
        if (raw.size() > spec_.weights.size())
            fail(error::kind::arity_mismatch, "arm coordinate count does not match weights");
        return normal_form(l, std::move(r));
    }
    LElem add(const LElem& a, const LElem& b) const {
        std::vector<long long> raw(a.arm.size());
        for (size_t i = 0; i < raw.size(); ++i) raw[i] = a.arm[i] + b.arm[i];
        return normal_form(a.l + b.l, std::move(raw));
    }
    LElem sub(const LElem& a, const LElem& b) const {
        std::vector<long long> raw(a.arm.size());
        for (size_t i = 0; i < raw.size(); ++i) raw[i] = static_cast<long long>(a.arm[i]) - b.arm[i];
        return normal_form(a.l - b.l, std::move(raw));
    }
    LElem c_vec() const { return lelem(1); }
    LElem x_vec(int i) const {
        std::vector<int> raw(spec_.weights.size(), 0);
        raw[static_cast<size_t>(i - 1)] = 1;
        return lelem(0, raw);
    }

    // dim of the degree-x part of the projective coordinate algebra, by
    // enumerating monomials u^a v^b prod x_i^{e_i} with 0 <= e_i < p_i
    long long graded_dim(const LElem& x) const {
        long long bound = std::max<long long>(0, x.l);
        long long count = 0;
        std::vector<long long> e(spec_.weights.size(), 0);
        for (long long a = 0; a <= bound; ++a)
            for (long long b = 0; b <= bound; ++b) {
                for (auto& v : e) v = 0;
                for (;;) {
                    if (normal_form(a + b, e) == x) ++count;
                    size_t k = 0;
                    while (k < e.size()) {
                        if (++e[k] < spec_.weights[k]) break;
                        e[k] = 0;
                        ++k;
                    }
                    if (k == e.size()) break;
                }
            }
        return count;
    }

    long long hom_dim_lb(const LElem& a, const LElem& b) const { return graded_dim(sub(b, a)); }

    std::vector<Int> class_of(const WPLLabel<K>& label) const {
        std::vector<Int> v(static_cast<size_t>(m_), Int(0));
        switch (label.k) {
        case WPLLabel<K>::kind::lb: {
            const LElem& x = label.x;
            if (static_cast<int>(x.arm.size()) != arms())
                fail(error::kind::arity_mismatch, "label arm count does not match weights");
            long long s = 0;
            for (int a : x.arm)
                if (a >= 1) ++s;
            v[0] = Int(1 - x.l - s);
            v[1] = Int(x.l + s);
            for (int i = 1; i <= arms(); ++i) {
                int a = x.arm[static_cast<size_t>(i - 1)];
                if (a >= 1) v[basis_index(i, weight(i) - a)] -= 1;
            }
            return v;
        }
        case WPLLabel<K>::kind::tor_exceptional: {
            if (label.arm > arms()) fail(error::kind::parse_error, "arm index out of range");
            int p = weight(label.arm);
            if (label.j < 1 || label.j > p) fail(error::kind::parse_error, "top simple out of range");
            for (int t = 0; t < label.len; ++t) {
                int j = (label.j - 1 + t) % p + 1;
                add_simple_class(v, label.arm, j, 1);
            }
            return v;
        }
        default: {
            Int mult = Int(label.r) * label.point.degree();
            v[0] -= mult;
            v[1] += mult;
            return v;
        }
        }
    }

    Int euler(const std::vector<Int>& u, const std::vector<Int>& v) const {
        if (static_cast<int>(u.size()) != m_ || static_cast<int>(v.size()) != m_)
            fail(error::kind::dimension_mismatch, "class vector has wrong length");
        Int s = 0;
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) s += u[static_cast<size_t>(i)] * gram_.at(i, j) * v[static_cast<size_t>(j)];
        return s;
    }

    Int rank_of(const std::vector<Int>& v) const { return v.at(0) + v.at(1); }

    // degree functional scaled by lcm(p_i) so that it is integer valued;
    // deg O(c) = lcm, deg S_i^{[l]} = l*lcm/p_i, deg O = 0
    Int degree_of(const std::vector<Int>& v) const {
        Int d = v.at(1) * period_;
        for (int i = 1; i <= arms(); ++i)
            for (int l = 1; l <= weight(i) - 1; ++l)
                d += v[basis_index(i, l)] * Int(l * (period_ / weight(i)));
        return d;
    }

    Mat<Int> coxeter_action() const { return to_int_matrix(coxeter(gram_)); }

    WPLLabel<K> tau_label(const WPLLabel<K>& label) const {
        switch (label.k) {
        case WPLLabel<K>::kind::tor_homogeneous: return label;
        case WPLLabel<K>::kind::tor_exceptional:
            return WPLLabel<K>::tor_e(label.arm, label.j % weight(label.arm) + 1, label.len);
        default: break;
        }
        Mat<Int> phi = coxeter_action();
        std::vector<Int> cls = class_of(label);
        std::vector<Int> target(static_cast<size_t>(m_), Int(0));
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) target[static_cast<size_t>(i)] += phi.at(i, j) * cls[static_cast<size_t>(j)];
        return lb_with_class(target);
    }

    // unique line bundle label with the given class
    WPLLabel<K> lb_with_class(const std::vector<Int>& target) const {
        if (static_cast<int>(target.size()) != m_)
            fail(error::kind::dimension_mismatch, "class vector has wrong length");
        LElem x;
        x.arm.assign(static_cast<size_t>(arms()), 0);
        long long s = 0;
        for (int i = 1; i <= arms(); ++i) {
            int hits = 0;
            for (int t = 1; t <= weight(i) - 1; ++t) {
                const Int& c = target[basis_index(i, t)];
                if (c == 0) continue;
                if (c != -1 || hits > 0)
                    fail(error::kind::no_line_bundle_with_class, "class is not a line bundle class");
                ++hits;
                x.arm[static_cast<size_t>(i - 1)] = weight(i) - t;
            }
            if (hits) ++s;
        }
        if (target[1] < Int(std::numeric_limits<long long>::min()) ||
            target[1] > Int(std::numeric_limits<long long>::max()))
            fail(error::kind::no_line_bundle_with_class, "class is out of range");
        x.l = static_cast<long long>(target[1]) - s;
        WPLLabel<K> out = WPLLabel<K>::lb(x);
        if (class_of(out) != target)
            fail(error::kind::no_line_bundle_with_class, "class is not a line bundle class");
        return out;
    }

    long long hom_line_to_simple(const LElem& x, int i, int j) const {
        Int e = euler(class_of(WPLLabel<K>::lb(x)), class_of(WPLLabel<K>::tor_e(i, j, 1)));
        if (e != 0 && e != 1)
            fail(error::kind::internal_inconsistency, "line-to-simple hom outside {0,1}");
        return static_cast<long long>(e);
    }

    std::pair<long long, long long> hom_ext(const WPLLabel<K>& a, const WPLLabel<K>& b) const {
        using lk = typename WPLLabel<K>::kind;
        if (a.k == lk::lb && b.k == lk::lb) {
            long long hom = hom_dim_lb(a.x, b.x);
            Int chi = euler(class_of(a), class_of(b));
            Int ext = Int(hom) - chi;
            if (ext < 0) fail(error::kind::internal_inconsistency, "negative ext dimension");
            return {hom, static_cast<long long>(ext)};
        }
        if (a.k == lk::lb) {
            Int chi = euler(class_of(a), class_of(b));
            if (chi < 0) fail(error::kind::internal_inconsistency, "negative hom dimension");
            return {static_cast<long long>(chi), 0};
        }
        if (b.k == lk::lb) {
            Int chi = euler(class_of(a), class_of(b));
            if (chi > 0) fail(error::kind::internal_inconsistency, "negative ext dimension");
            return {0, static_cast<long long>(-chi)};
        }
        if (a.k == lk::tor_exceptional && b.k == lk::tor_exceptional) {
            if (a.arm != b.arm) return {0, 0};
            int p = weight(a.arm);
            TubeLabel ta = TubeLabel::make(p, a.j - 1, a.len);
            TubeLabel tb = TubeLabel::make(p, b.j - 1, b.len);
            return {tube_hom(ta, tb), tube_ext(ta, tb)};
        }
        if (a.k == lk::tor_homogeneous && b.k == lk::tor_homogeneous) {
            if (a.point != b.point) return {0, 0};
            long long d = static_cast<long long>(a.point.degree()) * std::min(a.r, b.r);
            return {d, d};
        }
        return {0, 0};
    }

    bool is_tilting(const std::vector<WPLLabel<K>>& labels) const {
        int n = static_cast<int>(labels.size());
        Mat<Int> ext(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                ext.at(i, j) = Int(hom_ext(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(j)]).second);
        std::vector<std::vector<Int>> classes;
        for (const auto& l : labels) classes.push_back(class_of(l));
        return is_tilting_data(gram_, ext, classes, m_);
    }

    std::vector<WPLLabel<K>> canonical_tilting() const {
        std::vector<WPLLabel<K>> out;
        out.push_back(WPLLabel<K>::lb(lelem(0)));
        for (int i = 1; i <= arms(); ++i)
            for (int j = 1; j <= weight(i) - 1; ++j) {
                std::vector<int> raw(static_cast<size_t>(arms()), 0);
                raw[static_cast<size_t>(i - 1)] = j;
                out.push_back(WPLLabel<K>::lb(lelem(0, raw)));
            }
        out.push_back(WPLLabel<K>::lb(c_vec()));
        return out;
    }

    std::vector<WPLLabel<K>> squid_basis() const {
        std::vector<WPLLabel<K>> out;
        out.push_back(WPLLabel<K>::lb(lelem(0)));
        out.push_back(WPLLabel<K>::lb(c_vec()));
        for (int i = 1; i <= arms(); ++i)
            for (int l = 1; l <= weight(i) - 1; ++l) out.push_back(WPLLabel<K>::tor_e(i, 1, l));
        return out;
    }

    bool is_homogeneous() const { return spec_.weights.empty(); }

    WeightFunction<K> weight_function() const {
        std::vector<std::pair<RationalPoint<K>, int>> e;
        for (size_t i = 0; i < spec_.weights.size(); ++i)
            e.emplace_back(spec_.points[i], spec_.weights[i]);
        return WeightFunction<K>::make(std::move(e));
    }

    int basis_index(int i, int l) const {
        if (i < 1 || i > arms() || l < 1 || l > weight(i) - 1)
            fail(error::kind::internal_inconsistency, "basis index out of range");
        return arm_offset_[static_cast<size_t>(i - 1)] + l - 1;
    }

private:
    void add_simple_class(std::vector<Int>& v, int i, int j, int mult) const {
        int p = weight(i);
        if (j == p) {
            v[0] -= mult;
            v[1] += mult;
            v[basis_index(i, p - 1)] -= mult;
            return;
        }
        v[basis_index(i, j)] += mult;
        if (j >= 2) v[basis_index(i, j - 1)] -= mult;
    }

    WPLSpec<K> spec_;
    std::vector<int> arm_offset_;
    int m_ = 2;
    long long period_ = 1;
    Mat<Int> gram_;
};

// expansion chain down to the homogeneous case: reduce the last arm by one,
// dropping it when its weight reaches one
template <class K>
std::vector<WPLSpec<K>> expansion_chain(const WPLSpec<K>& spec) {
    WPL<K> check(spec);
    std::vector<WPLSpec<K>> out{spec};
    WPLSpec<K> cur = spec;
    while (!cur.weights.empty()) {
        size_t k = cur.weights.size() - 1;
        if (cur.weights[k] > 2) {
            --cur.weights[k];
        } else {
            cur.weights.pop_back();
            cur.points.pop_back();
        }
        out.push_back(cur);
    }
    return out;
}

} // namespace sheafline
