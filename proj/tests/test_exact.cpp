#include <doctest.h>

#include <random>

#include <sheafline/factor.hpp>
#include <sheafline/fields.hpp>
#include <sheafline/io.hpp>
#include <sheafline/matrix.hpp>
#include <sheafline/poly.hpp>
#include <sheafline/smith.hpp>

using namespace sheafline;

namespace {

Poly<Fp> random_poly(std::mt19937& rng, uint32_t p, int maxdeg) {
    int d = static_cast<int>(rng() % static_cast<uint32_t>(maxdeg + 1));
    std::vector<Fp> c(static_cast<size_t>(d + 1));
    for (auto& x : c) x = Fp(static_cast<long long>(rng() % p), p);
    return Poly<Fp>(std::move(c));
}

// irreducibility over F_p by trial division with every monic divisor of
// degree at most deg/2
bool brute_irreducible(const Poly<Fp>& f, uint32_t p) {
    int d = f.degree();
    if (d <= 0) return false;
    for (int dd = 1; 2 * dd <= d; ++dd) {
        std::vector<long long> c(static_cast<size_t>(dd), 0);
        for (;;) {
            std::vector<Fp> cand;
            for (long long x : c) cand.emplace_back(x, p);
            cand.emplace_back(1, p);
            auto [q, r] = divmod(f, Poly<Fp>(std::move(cand)));
            (void)q;
            if (r.zero()) return false;
            size_t i = 0;
            while (i < c.size() && c[i] == static_cast<long long>(p) - 1) c[i++] = 0;
            if (i == c.size()) break;
            ++c[i];
        }
    }
    return true;
}

} // namespace

TEST_CASE("Fp arithmetic and binding") {
    Fp a(3, 7), b(12, 7);
    CHECK(a + b == Fp(1, 7));
    CHECK(a * b == Fp(1, 7));
    CHECK((a / b) * b == a);
    // unbound carriers adopt the modulus on contact
    Fp one(1);
    CHECK(one + Fp(6, 7) == Fp(0, 7));
    CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), error);
    for (long long x = 1; x < 13; ++x) CHECK(Fp(x, 13) * Fp(x, 13).inv() == Fp(1, 13));
}

TEST_CASE("polynomial gcd over F7") {
    std::mt19937 rng(42);
    for (int iter = 0; iter < 100; ++iter) {
        auto a = random_poly(rng, 7, 5);
        auto b = random_poly(rng, 7, 5);
        if (a.zero() || b.zero()) continue;
        auto g = poly_gcd(a, b);
        CHECK(divmod(a, g).second.zero());
        CHECK(divmod(b, g).second.zero());
        // common factors land in the gcd
        auto c = random_poly(rng, 7, 3);
        if (c.zero()) continue;
        auto g2 = poly_gcd(a * c, b * c);
        CHECK(divmod(g2, monic(c)).second.zero());
    }
}

TEST_CASE("factorization over F5 agrees with trial division") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        auto f = random_poly(rng, 5, 6);
        if (f.degree() < 1) continue;
        auto fs = factor(f);
        Poly<Fp> prod = Poly<Fp>::constant(f.c.back());
        for (const auto& [q, m] : fs) {
            CHECK(brute_irreducible(q, 5));
            for (int i = 0; i < m; ++i) prod = prod * q;
        }
        CHECK(prod == f);
    }
}

TEST_CASE("factorization over Q") {
    auto poly = [](std::vector<long long> v) {
        std::vector<Rat> c;
        for (long long x : v) c.emplace_back(x);
        return Poly<Rat>(std::move(c));
    };
    SUBCASE("rational roots with multiplicity") {
        // 6y^2 - y - 1 = 6 (y - 1/2)(y + 1/3)
        auto fs = factor(poly({-1, -1, 6}));
        REQUIRE(fs.size() == 2);
        CHECK(fs[0].second == 1);
        CHECK(fs[1].second == 1);
        Poly<Rat> prod = fs[0].first * fs[1].first;
        CHECK(prod * Poly<Rat>::constant(Rat(6)) == poly({-1, -1, 6}));
    }
    SUBCASE("quartic splitting into quadratics") {
        // y^4 - 4 = (y^2 - 2)(y^2 + 2)
        auto fs = factor(poly({-4, 0, 0, 0, 1}));
        REQUIRE(fs.size() == 2);
        CHECK(fs[0].first.degree() == 2);
        CHECK(fs[1].first.degree() == 2);
        CHECK(fs[0].first * fs[1].first == poly({-4, 0, 0, 0, 1}));
    }
    SUBCASE("irreducible quartic stays whole") {
        auto fs = factor(poly({1, 0, 0, 0, 1}));
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].first.degree() == 4);
    }
    SUBCASE("unsupported degree") {
        CHECK_THROWS_AS(factor(poly({-1, -1, 0, 0, 0, 1})), error);
        try {
            factor(poly({-1, -1, 0, 0, 0, 1}));
        } catch (const error& e) {
            CHECK(e.which() == error::kind::unsupported_factorization);
        }
    }
}

TEST_CASE("determinants agree across algorithms") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 1 + static_cast<int>(rng() % 4);
        Mat<Int> m(n, n);
        for (auto& x : m.a) x = Int(static_cast<long long>(rng() % 21) - 10);
        Mat<Rat> q(n, n);
        for (int i = 0; i < n * n; ++i) q.a[static_cast<size_t>(i)] = Rat(m.a[static_cast<size_t>(i)]);
        CHECK(Rat(det_int(m)) == det_field(q));
    }
}

TEST_CASE("polynomial determinant matches evaluation") {
    std::mt19937 rng(13);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 1 + static_cast<int>(rng() % 3);
        Mat<Poly<Fp>> m(n, n);
        for (auto& x : m.a) x = random_poly(rng, 7, 2);
        auto d = det_poly(m);
        Fp t(static_cast<long long>(rng() % 7), 7);
        Mat<Fp> ev(n, n);
        for (int i = 0; i < n * n; ++i) ev.a[static_cast<size_t>(i)] = eval(m.a[static_cast<size_t>(i)], t);
        CHECK(eval(d, t) == det_field(ev));
    }
}

TEST_CASE("smith form over k[y]: transforms and divisor chain") {
    std::mt19937 rng(17);
    for (int iter = 0; iter < 40; ++iter) {
        int r = 1 + static_cast<int>(rng() % 3);
        int c = 1 + static_cast<int>(rng() % 3);
        Mat<Poly<Fp>> m(r, c);
        for (auto& x : m.a) x = random_poly(rng, 7, 2);
        auto s = smith_poly(m);
        CHECK(s.S * m * s.T_ == s.D);
        CHECK(poly_matrix_unimodular(s.S));
        CHECK(poly_matrix_unimodular(s.T_));
        auto d = s.diagonal();
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i + 1].zero()) continue;
            CHECK(!d[i].zero());
            CHECK(divmod(d[i + 1], d[i]).second.zero());
        }
        for (const auto& x : d)
            if (!x.zero()) CHECK(x.c.back() == Fp(1, 7));
        // off-diagonal entries vanish
        for (int i = 0; i < s.D.rows; ++i)
            for (int j = 0; j < s.D.cols; ++j)
                if (i != j) CHECK(s.D.at(i, j).zero());
    }
}

TEST_CASE("smith form over Z") {
    std::mt19937 rng(19);
    for (int iter = 0; iter < 40; ++iter) {
        int r = 1 + static_cast<int>(rng() % 4);
        int c = 1 + static_cast<int>(rng() % 4);
        Mat<Int> m(r, c);
        for (auto& x : m.a) x = Int(static_cast<long long>(rng() % 19) - 9);
        auto s = smith_int(m);
        CHECK(s.S * m * s.T_ == s.D);
        Int ds = det_int(s.S), dt = det_int(s.T_);
        CHECK((ds == 1 || ds == -1));
        CHECK((dt == 1 || dt == -1));
        auto d = s.diagonal();
        for (const auto& x : d) CHECK(x >= 0);
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i + 1] == 0) continue;
            CHECK(d[i] != 0);
            CHECK(d[i + 1] % d[i] == 0);
        }
    }
}

TEST_CASE("laurent printing and parsing round trip") {
    FieldTag q{0};
    for (const char* s : {"y-1", "2*y+y^-1", "y^3-2*y+1/2", "0", "-y^-2", "3"}) {
        auto f = parse_laurent<Rat>(s, "y", q);
        CHECK(laurent_str(f) == s);
    }
    FieldTag f7{7};
    auto g = parse_laurent<Fp>("6*y+3", "y", f7);
    CHECK(laurent_str(g) == "6*y+3");
    CHECK(eval(g.as_poly(), Fp(1, 7)) == Fp(2, 7));
    CHECK_THROWS_AS(parse_laurent<Rat>("y+", "y", q), error);
    CHECK_THROWS_AS(parse_laurent<Rat>("", "y", q), error);
    CHECK_THROWS_AS(parse_poly<Rat>("y^-1", "y", q), error);
}
