#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "poly.hpp"

namespace sheafline {

template <class K>
Poly<K> powmod(const Poly<K>& base, Int e, const Poly<K>& m) {
    Poly<K> r = Poly<K>::constant(K(1), m.var);
    Poly<K> b = base % m;
    while (e > 0) {
        if ((e & 1) != 0) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

namespace detail {

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    auto mulmod = [](uint64_t a, uint64_t b, uint64_t m) -> uint64_t {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod_u = [&](uint64_t a, uint64_t ex, uint64_t m) -> uint64_t {
        uint64_t r = 1;
        a %= m;
        while (ex > 0) {
            if (ex & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            ex >>= 1;
        }
        return r;
    };
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

// All positive divisors of n > 0, or failure when n cannot be fully
// factored with small trial division plus a 64-bit primality test.
inline std::vector<Int> all_divisors(Int n) {
    std::vector<std::pair<Int, int>> pf;
    auto push = [&](const Int& q) {
        for (auto& [b, e] : pf)
            if (b == q) { ++e; return; }
        pf.push_back({q, 1});
    };
    for (Int t = 2; t <= 1000000 && t * t <= n; t += (t == 2 ? 1 : 2))
        while (n % t == 0) { push(t); n /= t; }
    if (n > 1) {
        if (n <= Int(1000000) * Int(1000000)) {
            push(n);
        } else if (n < (Int(1) << 64)) {
            uint64_t v = n.convert_to<uint64_t>();
            if (!is_prime_u64(v))
                fail(error::kind::unsupported_factorization, "constant term has large composite cofactor");
            push(n);
        } else {
            fail(error::kind::unsupported_factorization, "constant term too large to factor");
        }
    }
    std::vector<Int> divs = {Int(1)};
    for (auto& [b, e] : pf) {
        size_t sz = divs.size();
        if (sz * static_cast<size_t>(e + 1) > 200000)
            fail(error::kind::unsupported_factorization, "constant term has too many divisors");
        Int pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= b;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pw);
        }
    }
    return divs;
}

inline std::vector<Rat> rational_roots(Poly<Rat> g) {
    std::vector<Rat> roots;
    while (!g.zero() && g.degree() >= 1 && is_zero(g.coeff(0))) {
        roots.push_back(Rat(0));
        std::vector<Rat> q(g.c.begin() + 1, g.c.end());
        g = Poly<Rat>(std::move(q), g.var);
    }
    if (g.degree() < 1) {
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        return roots;
    }
    g = monic(g);
    Int L = 1;
    for (const Rat& c : g.c) L = lcm(L, denominator(c));
    int d = g.degree();
    std::vector<Int> h(static_cast<size_t>(d) + 1);
    Int Lp = 1;
    for (int i = d; i >= 0; --i) {
        Rat scaled = g.coeff(i) * Rat(Lp);
        h[static_cast<size_t>(i)] = numerator(scaled);
        Lp *= L;
    }
    Int n0 = abs(h[0]);
    auto eval_int = [&](const Int& x) {
        Int r = 0;
        for (int i = d; i >= 0; --i) r = r * x + h[static_cast<size_t>(i)];
        return r;
    };
    for (const Int& u : all_divisors(n0)) {
        if (eval_int(u) == 0) roots.push_back(Rat(u, L));
        if (eval_int(-u) == 0) roots.push_back(Rat(-u, L));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

inline bool rational_sqrt(const Rat& x, Rat& out) {
    if (x < 0) return false;
    Int n = numerator(x), d = denominator(x);
    Int sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return false;
    out = Rat(sn, sd);
    return true;
}

// Split a monic quartic with no rational roots into two monic quadratics,
// or report it irreducible.  Tries every rational root of the resolvent
// cubic; a rational quadratic factorization always shows up there.
inline std::vector<Poly<Rat>> quartic_split(const Poly<Rat>& g) {
    Rat P = g.coeff(3), Q = g.coeff(2), R = g.coeff(1), S = g.coeff(0);
    Poly<Rat> resolvent({-(P * P * S - 4 * Q * S + R * R), P * R - 4 * S, -Q, Rat(1)}, g.var);
    for (const Rat& z0 : rational_roots(resolvent)) {
        Rat d1 = P * P - 4 * (Q - z0);
        Rat e;
        if (!rational_sqrt(d1, e)) continue;
        Rat a = (P + e) / 2, c = (P - e) / 2;
        Rat b, dd;
        if (a != c) {
            b = (R - a * z0) / (c - a);
            dd = z0 - b;
        } else {
            Rat d2 = z0 * z0 - 4 * S, f;
            if (!rational_sqrt(d2, f)) continue;
            b = (z0 + f) / 2;
            dd = z0 - b;
        }
        Poly<Rat> q1({b, a, Rat(1)}, g.var), q2({dd, c, Rat(1)}, g.var);
        if (q1 * q2 == g) return {q1, q2};
    }
    return {g};
}

// g monic squarefree over Q; returns its monic irreducible factors.
inline std::vector<Poly<Rat>> factor_squarefree_q(Poly<Rat> g) {
    std::vector<Poly<Rat>> out;
    for (const Rat& r : rational_roots(g)) {
        out.push_back(Poly<Rat>({-r, Rat(1)}, g.var));
        g = g / out.back();
    }
    switch (g.degree()) {
        case 0: break;
        case 1: out.push_back(monic(g)); break;
        case 2:
        case 3: out.push_back(g); break;
        case 4: {
            auto qs = quartic_split(g);
            out.insert(out.end(), qs.begin(), qs.end());
            break;
        }
        default:
            fail(error::kind::unsupported_factorization,
                 "irreducibility test beyond degree 4 over Q is not supported");
    }
    return out;
}

inline std::vector<std::pair<Poly<Rat>, int>> yun_squarefree(Poly<Rat> f) {
    std::vector<std::pair<Poly<Rat>, int>> out;
    Poly<Rat> fp = derivative(f);
    Poly<Rat> g = poly_gcd(f, fp);
    if (g.degree() == 0) {
        out.push_back({f, 1});
        return out;
    }
    Poly<Rat> c = f / g;
    Poly<Rat> d = fp / g - derivative(c);
    int i = 1;
    while (c.degree() > 0) {
        Poly<Rat> a = poly_gcd(c, d);
        if (a.degree() > 0) out.push_back({a, i});
        c = c / a;
        d = d / a - derivative(c);
        ++i;
    }
    return out;
}

inline uint32_t poly_modulus(const Poly<Fp>& f) {
    for (const Fp& c : f.c)
        if (c.p != 0) return c.p;
    return 0;
}

inline Poly<Fp> bind_poly(const Poly<Fp>& f, uint32_t p) {
    std::vector<Fp> c;
    c.reserve(f.c.size());
    for (const Fp& x : f.c) c.push_back(x.bound(p));
    return Poly<Fp>(std::move(c), f.var);
}

inline Poly<Fp> pth_root(const Poly<Fp>& f, uint32_t p) {
    std::vector<Fp> r;
    for (int e = 0; e <= f.degree(); ++e) {
        if (e % static_cast<int>(p) == 0) {
            r.push_back(f.coeff(e));
        } else if (!is_zero(f.coeff(e))) {
            fail(error::kind::internal_inconsistency, "p-th root of a polynomial that is not a p-th power");
        }
    }
    return Poly<Fp>(std::move(r), f.var);
}

inline std::vector<std::pair<Poly<Fp>, int>> squarefree_char_p(Poly<Fp> f, uint32_t p) {
    std::vector<std::pair<Poly<Fp>, int>> out;
    Poly<Fp> c = poly_gcd(f, derivative(f));
    Poly<Fp> w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly<Fp> y = poly_gcd(w, c);
        Poly<Fp> fac = w / y;
        if (fac.degree() > 0) out.push_back({fac, i});
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_char_p(pth_root(c, p), p))
            out.push_back({g, m * static_cast<int>(p)});
    }
    return out;
}

// g squarefree monic; returns (product of irreducibles of degree d, d).
inline std::vector<std::pair<Poly<Fp>, int>> distinct_degree(Poly<Fp> g, uint32_t p) {
    std::vector<std::pair<Poly<Fp>, int>> out;
    Poly<Fp> ypoly({Fp(0, p), Fp(1, p)}, g.var);
    Poly<Fp> h = ypoly % g;
    int d = 0;
    while (g.degree() > 0) {
        ++d;
        if (2 * d > g.degree()) {
            out.push_back({g, g.degree()});
            break;
        }
        h = powmod(h, Int(p), g);
        Poly<Fp> gd = poly_gcd(g, h - ypoly);
        if (gd.degree() > 0) {
            out.push_back({gd, d});
            g = g / gd;
            h = h % g;
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting; g is a product of distinct
// irreducibles all of degree d.
inline void equal_degree(const Poly<Fp>& g, int d, uint32_t p, std::mt19937& rng, std::vector<Poly<Fp>>& out) {
    if (g.degree() == d) {
        out.push_back(monic(g));
        return;
    }
    std::uniform_int_distribution<long long> coeff(0, static_cast<long long>(p) - 1);
    for (int tries = 0; tries < 400; ++tries) {
        std::vector<Fp> uc(static_cast<size_t>(g.degree()), Fp(0, p));
        for (auto& x : uc) x = Fp(coeff(rng), p);
        Poly<Fp> u(std::move(uc), g.var);
        if (u.degree() < 1) continue;
        Poly<Fp> shared = poly_gcd(g, u);
        Poly<Fp> cand;
        if (shared.degree() > 0 && shared.degree() < g.degree()) {
            cand = shared;
        } else if (p % 2 == 1) {
            Int e = (pow(Int(p), static_cast<unsigned>(d)) - 1) / 2;
            Poly<Fp> w = powmod(u, e, g);
            cand = poly_gcd(g, w - Poly<Fp>::constant(Fp(1, p), g.var));
        } else {
            Poly<Fp> t = u % g, acc = t;
            for (int i = 1; i < d; ++i) {
                t = (t * t) % g;
                acc = acc + t;
            }
            cand = poly_gcd(g, acc);
        }
        if (cand.degree() > 0 && cand.degree() < g.degree()) {
            equal_degree(cand, d, p, rng, out);
            equal_degree(g / cand, d, p, rng, out);
            return;
        }
    }
    fail(error::kind::internal_inconsistency, "equal-degree splitting did not converge");
}

} // namespace detail

template <class K>
struct factor_impl;

template <>
struct factor_impl<Rat> {
    static std::vector<std::pair<Poly<Rat>, int>> run(const Poly<Rat>& f) {
        std::vector<std::pair<Poly<Rat>, int>> out;
        for (auto& [part, mult] : detail::yun_squarefree(f))
            for (auto& irr : detail::factor_squarefree_q(part))
                out.push_back({irr, mult});
        return out;
    }
};

template <>
struct factor_impl<Fp> {
    static std::vector<std::pair<Poly<Fp>, int>> run(const Poly<Fp>& f) {
        uint32_t p = detail::poly_modulus(f);
        if (p == 0) fail(error::kind::internal_inconsistency, "factoring over F_p requires a bound modulus");
        Poly<Fp> g = monic(detail::bind_poly(f, p));
        std::mt19937 rng(0x5eaf11e);
        std::vector<std::pair<Poly<Fp>, int>> out;
        for (auto& [part, mult] : detail::squarefree_char_p(g, p))
            for (auto& [prod, d] : detail::distinct_degree(part, p)) {
                std::vector<Poly<Fp>> irr;
                detail::equal_degree(prod, d, p, rng, irr);
                for (auto& q : irr) out.push_back({q, mult});
            }
        return out;
    }
};

// Monic irreducible factorization of a nonzero polynomial, deterministic
// order (degree, then coefficient order).  Constants factor to nothing.
template <class K>
std::vector<std::pair<Poly<K>, int>> factor(const Poly<K>& f) {
    if (f.zero()) fail(error::kind::internal_inconsistency, "factor of the zero polynomial");
    if (f.degree() < 1) return {};
    auto out = factor_impl<K>::run(monic(f));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int c = poly_cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    return out;
}

} // namespace sheafline
