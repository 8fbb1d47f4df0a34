#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "error.hpp"

namespace sheafline {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Runtime choice of base field: p == 0 means Q, otherwise F_p.
struct FieldTag {
    uint32_t p = 0;
    bool rational() const { return p == 0; }
    bool operator==(const FieldTag& o) const { return p == o.p; }
};

// Element of F_p with the modulus carried at runtime.  A default-constructed
// value is an "unbound" zero/one carrier (p == 0) so that generic code can
// say K(0) or K(1) without knowing the modulus; any arithmetic against a
// bound value adopts its modulus.  Parsers always bind immediately.
struct Fp {
    long long v = 0;
    uint32_t p = 0;

    Fp() = default;
    Fp(long long n) : v(n) {}
    Fp(long long n, uint32_t mod) : v(n), p(mod) { reduce(); }

    void reduce() {
        if (p == 0) return;
        v %= static_cast<long long>(p);
        if (v < 0) v += static_cast<long long>(p);
    }

    Fp bound(uint32_t mod) const { return Fp(v, mod); }

    static uint32_t common(const Fp& a, const Fp& b) {
        if (a.p != 0 && b.p != 0 && a.p != b.p)
            fail(error::kind::mixed_fields, "elements of F_" + std::to_string(a.p) + " and F_" + std::to_string(b.p) + " mixed");
        return a.p != 0 ? a.p : b.p;
    }

    friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.v + b.v, common(a, b)); }
    friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.v - b.v, common(a, b)); }
    friend Fp operator-(const Fp& a) { return Fp(-a.v, a.p); }
    friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.v * b.v, common(a, b)); }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }

    friend bool operator==(const Fp& a, const Fp& b) {
        uint32_t m = common(a, b);
        if (m == 0) return a.v == b.v;
        return a.bound(m).v == b.bound(m).v;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inv() const {
        if (p == 0) {
            if (v == 1 || v == -1) return *this;
            fail(error::kind::internal_inconsistency, "inverse of unbound F_p element");
        }
        if (v % p == 0) fail(error::kind::singular_matrix, "division by zero in F_" + std::to_string(p));
        long long r0 = static_cast<long long>(p), r1 = v % static_cast<long long>(p);
        if (r1 < 0) r1 += r0;
        long long s0 = 0, s1 = 1;
        while (r1 != 0) {
            long long q2 = r0 / r1;
            long long rt = r0 - q2 * r1; r0 = r1; r1 = rt;
            long long st = s0 - q2 * s1; s0 = s1; s1 = st;
        }
        return Fp(s0, p);
    }
};

inline bool is_zero(const Rat& a) { return a == 0; }
inline bool is_zero(const Fp& a) {
    if (a.p == 0) return a.v == 0;
    return a.v % static_cast<long long>(a.p) == 0;
}

inline Rat field_inverse(const Rat& a) {
    if (a == 0) fail(error::kind::singular_matrix, "division by zero in Q");
    return Rat(1) / a;
}
inline Fp field_inverse(const Fp& a) { return a.inv(); }

// Total order on field elements, used only to make printed output and
// factor lists deterministic.
inline int scalar_cmp(const Rat& a, const Rat& b) { return a < b ? -1 : (a == b ? 0 : 1); }
inline int scalar_cmp(const Fp& a, const Fp& b) {
    uint32_t m = Fp::common(a, b);
    long long x = a.bound(m == 0 ? 1 : m).v, y = b.bound(m == 0 ? 1 : m).v;
    if (m == 0) { x = a.v; y = b.v; }
    return x < y ? -1 : (x == y ? 0 : 1);
}

inline std::string scalar_str(const Rat& a) {
    std::string s = numerator(a).str();
    if (denominator(a) != 1) s += "/" + denominator(a).str();
    return s;
}
inline std::string scalar_str(const Fp& a) {
    if (a.p == 0) return std::to_string(a.v);
    return std::to_string(a.bound(a.p).v);
}

template <class K> inline FieldTag tag_of(const K&);
template <> inline FieldTag tag_of<Rat>(const Rat&) { return FieldTag{0}; }
template <> inline FieldTag tag_of<Fp>(const Fp& a) { return FieldTag{a.p}; }

} // namespace sheafline
