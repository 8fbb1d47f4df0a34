#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fields.hpp"

namespace sheafline {

// Dense polynomial, coefficients stored lowest degree first.  The variable
// name is cosmetic (printing only); algebra never depends on it.
template <class K>
struct Poly {
    std::vector<K> c;
    std::string var = "y";

    Poly() = default;
    explicit Poly(std::vector<K> coeffs, std::string v = "y") : c(std::move(coeffs)), var(std::move(v)) { normalize(); }

    static Poly constant(const K& a, std::string v = "y") { return Poly(std::vector<K>{a}, std::move(v)); }

    void normalize() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }

    bool zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    K coeff(int e) const {
        if (e < 0 || e >= static_cast<int>(c.size())) return K(0);
        return c[static_cast<size_t>(e)];
    }
    K lead() const { return c.empty() ? K(0) : c.back(); }
};

template <class K>
std::string join_var(const Poly<K>& a, const Poly<K>& b) {
    if (a.degree() < 1) return b.degree() < 1 ? a.var : b.var;
    if (b.degree() < 1) return a.var;
    if (a.var != b.var) fail(error::kind::internal_inconsistency, "polynomials in different variables combined");
    return a.var;
}

template <class K>
Poly<K> operator+(const Poly<K>& a, const Poly<K>& b) {
    std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
    return Poly<K>(std::move(r), join_var(a, b));
}

template <class K>
Poly<K> operator-(const Poly<K>& a, const Poly<K>& b) {
    std::vector<K> r(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
    return Poly<K>(std::move(r), join_var(a, b));
}

template <class K>
Poly<K> operator-(const Poly<K>& a) {
    Poly<K> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

template <class K>
Poly<K> operator*(const Poly<K>& a, const Poly<K>& b) {
    if (a.zero() || b.zero()) return Poly<K>({}, join_var(a, b));
    std::vector<K> r(a.c.size() + b.c.size() - 1, K(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = r[i + j] + a.c[i] * b.c[j];
    return Poly<K>(std::move(r), join_var(a, b));
}

template <class K>
Poly<K> operator*(const K& s, const Poly<K>& a) {
    Poly<K> r = a;
    for (auto& x : r.c) x = s * x;
    r.normalize();
    return r;
}

template <class K>
bool operator==(const Poly<K>& a, const Poly<K>& b) {
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!(a.c[i] == b.c[i])) return false;
    return true;
}
template <class K>
bool operator!=(const Poly<K>& a, const Poly<K>& b) { return !(a == b); }

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.zero()) fail(error::kind::singular_matrix, "polynomial division by zero");
    std::string v = join_var(a, b);
    K lb_inv = field_inverse(b.lead());
    std::vector<K> rem = a.c;
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {Poly<K>({}, v), a};
    std::vector<K> q(static_cast<size_t>(dq) + 1, K(0));
    for (int i = a.degree(); i >= db; --i) {
        K cur = rem[static_cast<size_t>(i)];
        if (is_zero(cur)) continue;
        K f = cur * lb_inv;
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(i - db + j)] = rem[static_cast<size_t>(i - db + j)] - f * b.c[static_cast<size_t>(j)];
    }
    return {Poly<K>(std::move(q), v), Poly<K>(std::move(rem), v)};
}

template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) { return divmod(a, b).second; }
template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) { return divmod(a, b).first; }

template <class K>
Poly<K> monic(const Poly<K>& a) {
    if (a.zero()) return a;
    return field_inverse(a.lead()) * a;
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <class K>
Poly<K> derivative(const Poly<K>& a) {
    if (a.degree() < 1) return Poly<K>({}, a.var);
    std::vector<K> r(a.c.size() - 1, K(0));
    for (size_t i = 1; i < a.c.size(); ++i)
        r[i - 1] = K(static_cast<long long>(i)) * a.c[i];
    return Poly<K>(std::move(r), a.var);
}

template <class K>
K eval(const Poly<K>& a, const K& x) {
    K r(0);
    for (size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
    return r;
}

// a(y) * y^k for k >= 0
template <class K>
Poly<K> shift_up(const Poly<K>& a, int k) {
    if (a.zero()) return a;
    std::vector<K> r(a.c.size() + static_cast<size_t>(k), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i + static_cast<size_t>(k)] = a.c[i];
    return Poly<K>(std::move(r), a.var);
}

// coefficient reversal: y^deg(a) * a(1/y)
template <class K>
Poly<K> reversed(const Poly<K>& a, std::string var) {
    std::vector<K> r(a.c.rbegin(), a.c.rend());
    return Poly<K>(std::move(r), std::move(var));
}

template <class K>
int poly_cmp(const Poly<K>& a, const Poly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = scalar_cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

// Laurent polynomial: c[i] is the coefficient of var^(val + i).
template <class K>
struct LaurentPoly {
    int val = 0;
    std::vector<K> c;
    std::string var = "y";

    LaurentPoly() = default;
    LaurentPoly(int v, std::vector<K> coeffs, std::string name = "y") : val(v), c(std::move(coeffs)), var(std::move(name)) { normalize(); }

    static LaurentPoly from_poly(const Poly<K>& p, int shift = 0) { return LaurentPoly(shift, p.c, p.var); }
    static LaurentPoly constant(const K& a, std::string name = "y") { return LaurentPoly(0, {a}, std::move(name)); }

    void normalize() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
        size_t lead0 = 0;
        while (lead0 < c.size() && is_zero(c[lead0])) ++lead0;
        if (lead0 > 0) {
            c.erase(c.begin(), c.begin() + static_cast<long>(lead0));
            val += static_cast<int>(lead0);
        }
        if (c.empty()) val = 0;
    }

    bool zero() const { return c.empty(); }
    int low() const { return val; }
    int high() const { return val + static_cast<int>(c.size()) - 1; }

    K coeff(int e) const {
        if (e < val || e > high()) return K(0);
        return c[static_cast<size_t>(e - val)];
    }

    // If this is c * var^e, return (c, e).
    std::optional<std::pair<K, int>> unit() const {
        if (c.size() != 1) return std::nullopt;
        return std::make_pair(c[0], val);
    }

    // Requires val >= 0.
    Poly<K> as_poly() const {
        if (zero()) return Poly<K>({}, var);
        if (val < 0) fail(error::kind::internal_inconsistency, "laurent polynomial with negative valuation is not a polynomial");
        std::vector<K> r(static_cast<size_t>(val), K(0));
        r.insert(r.end(), c.begin(), c.end());
        return Poly<K>(std::move(r), var);
    }
};

template <class K>
std::string join_var(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    bool ac = a.zero() || (a.val == 0 && a.c.size() == 1);
    bool bc = b.zero() || (b.val == 0 && b.c.size() == 1);
    if (ac) return bc ? a.var : b.var;
    if (bc) return a.var;
    if (a.var != b.var) fail(error::kind::internal_inconsistency, "laurent polynomials in different variables combined");
    return a.var;
}

template <class K>
LaurentPoly<K> operator+(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    if (a.zero()) return LaurentPoly<K>(b.val, b.c, join_var(a, b));
    if (b.zero()) return LaurentPoly<K>(a.val, a.c, join_var(a, b));
    int lo = std::min(a.val, b.val), hi = std::max(a.high(), b.high());
    std::vector<K> r(static_cast<size_t>(hi - lo + 1), K(0));
    for (int e = lo; e <= hi; ++e) r[static_cast<size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
    return LaurentPoly<K>(lo, std::move(r), join_var(a, b));
}

template <class K>
LaurentPoly<K> operator-(const LaurentPoly<K>& a) {
    LaurentPoly<K> r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

template <class K>
LaurentPoly<K> operator-(const LaurentPoly<K>& a, const LaurentPoly<K>& b) { return a + (-b); }

template <class K>
LaurentPoly<K> operator*(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    if (a.zero() || b.zero()) return LaurentPoly<K>(0, {}, join_var(a, b));
    std::vector<K> r(a.c.size() + b.c.size() - 1, K(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = r[i + j] + a.c[i] * b.c[j];
    return LaurentPoly<K>(a.val + b.val, std::move(r), join_var(a, b));
}

template <class K>
bool operator==(const LaurentPoly<K>& a, const LaurentPoly<K>& b) {
    if (a.zero() || b.zero()) return a.zero() && b.zero();
    if (a.val != b.val || a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!(a.c[i] == b.c[i])) return false;
    return true;
}
template <class K>
bool operator!=(const LaurentPoly<K>& a, const LaurentPoly<K>& b) { return !(a == b); }

// multiply by var^k (k of either sign)
template <class K>
LaurentPoly<K> twist_monomial(const LaurentPoly<K>& a, int k) {
    if (a.zero()) return a;
    return LaurentPoly<K>(a.val + k, a.c, a.var);
}

} // namespace sheafline
