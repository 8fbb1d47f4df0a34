#include <doctest.h>

#include <random>

#include <sheafline/io.hpp>
#include <sheafline/p1.hpp>
#include <sheafline/selftest.hpp>

using namespace sheafline;

namespace {

Mat<LaurentPoly<Rat>> qmat(const std::vector<std::vector<const char*>>& rows) {
    FieldTag q{0};
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat<LaurentPoly<Rat>> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = parse_laurent<Rat>(rows[static_cast<size_t>(i)][static_cast<size_t>(j)], "y", q);
    return m;
}

Mat<Poly<Rat>> qpoly(const std::vector<std::vector<const char*>>& rows, const std::string& var) {
    FieldTag q{0};
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat<Poly<Rat>> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = parse_poly<Rat>(rows[static_cast<size_t>(i)][static_cast<size_t>(j)], var, q);
    return m;
}

ClosedPoint<Rat> pq(const char* s) { return parse_point<Rat>(s, FieldTag{0}); }

} // namespace

TEST_CASE("birkhoff splitting on worked examples") {
    SUBCASE("identity splits trivially") {
        auto s = birkhoff_split(qmat({{"1", "0"}, {"0", "1"}}));
        CHECK(s.type == std::vector<int>{0, 0});
    }
    SUBCASE("diagonal twists are read off") {
        auto s = birkhoff_split(qmat({{"y", "0"}, {"0", "y^-1"}}));
        CHECK(s.type == std::vector<int>{-1, 1});
    }
    SUBCASE("an upper triangular unit matrix is trivial") {
        auto mu = qmat({{"y", "1"}, {"0", "y^-1"}});
        auto s = birkhoff_split(mu);
        CHECK(s.type == std::vector<int>{0, 0});
        CHECK(s.U * s.D * s.V == mu);
    }
    SUBCASE("non-unimodular input is rejected") {
        CHECK_THROWS_AS(birkhoff_split(qmat({{"y-1", "0"}, {"0", "1"}})), error);
        CHECK_THROWS_AS(birkhoff_split(qmat({{"1", "0"}})), error);
    }
}

TEST_CASE("splitting type is invariant under chart-preserving transformations") {
    std::mt19937 rng(101);
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<uint32_t>(n)); };
    for (int iter = 0; iter < 50; ++iter) {
        int r = 2 + iter % 3;
        auto mu = selftest::detail::random_unimodular(rng, r, 7);
        auto type = birkhoff_split(mu).type;
        auto m2 = mu;
        // left multiply by a random elementary matrix over k[y^-1] and right
        // multiply by one over k[y]; both charts keep the splitting type
        for (int t = 0; t < 6; ++t) {
            int i = pick(r), j = pick(r);
            if (i == j) continue;
            if (t % 2 == 0) {
                auto c = selftest::detail::fp_mono(7, pick(7), -pick(3));
                for (int k = 0; k < r; ++k) m2.at(i, k) = m2.at(i, k) + c * m2.at(j, k);
            } else {
                auto c = selftest::detail::fp_mono(7, pick(7), pick(3));
                for (int k = 0; k < r; ++k) m2.at(k, i) = m2.at(k, i) + c * m2.at(k, j);
            }
        }
        CHECK(birkhoff_split(m2).type == type);
    }
}

TEST_CASE("torsion decomposition") {
    SUBCASE("finite part only") {
        TorsionData<Rat> t;
        t.finite_part = qpoly({{"y", "0"}, {"0", "y^2-y"}}, "y");
        t.infinity_part = Mat<Poly<Rat>>(0, 0);
        auto parts = torsion_decompose(t);
        REQUIRE(parts.size() == 3);
        CHECK(point_str(parts[0].first) == "y-1");
        CHECK(parts[0].second == 1);
        CHECK(point_str(parts[1].first) == "y");
        CHECK(parts[1].second == 1);
        CHECK(point_str(parts[2].first) == "y");
        CHECK(parts[2].second == 1);
    }
    SUBCASE("a point at infinity") {
        TorsionData<Rat> t;
        t.finite_part = qpoly({{"y"}}, "y");
        t.infinity_part = qpoly({{"z"}}, "z");
        auto parts = torsion_decompose(t);
        REQUIRE(parts.size() == 2);
        CHECK(point_str(parts[0].first) == "y");
        CHECK(point_str(parts[1].first) == "inf");
        CHECK(parts[1].second == 1);
    }
    SUBCASE("shared finite point appears once") {
        TorsionData<Rat> t;
        // y - 1 on the finite chart is z(1/z - 1) ~ (z - 1) up to a unit at infinity
        t.finite_part = qpoly({{"y-1"}}, "y");
        t.infinity_part = qpoly({{"z-1"}}, "z");
        auto parts = torsion_decompose(t);
        REQUIRE(parts.size() == 1);
        CHECK(point_str(parts[0].first) == "y-1");
    }
    SUBCASE("inconsistent glue is rejected") {
        TorsionData<Rat> t;
        t.finite_part = qpoly({{"y"}}, "y");
        t.infinity_part = qpoly({{"z-1"}}, "z");
        CHECK_THROWS_AS(torsion_decompose(t), error);
        try {
            torsion_decompose(t);
        } catch (const error& e) {
            CHECK(e.which() == error::kind::inconsistent_glue);
        }
    }
    SUBCASE("nilpotent block at infinity") {
        TorsionData<Rat> t;
        t.finite_part = Mat<Poly<Rat>>(0, 0);
        t.infinity_part = qpoly({{"z^3"}}, "z");
        auto parts = torsion_decompose(t);
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].first.infinity);
        CHECK(parts[0].second == 3);
    }
}

TEST_CASE("hom and ext tables on the projective line") {
    using P = P1Label<Rat>;
    auto y = pq("y");
    auto quad = pq("y^2+1");
    SUBCASE("line bundles") {
        CHECK(hom_dim(P::lb(0), P::lb(3)) == 4);
        CHECK(hom_dim(P::lb(2), P::lb(2)) == 1);
        CHECK(hom_dim(P::lb(1), P::lb(0)) == 0);
        CHECK(ext_dim(P::lb(0), P::lb(-2)) == 1);
        CHECK(ext_dim(P::lb(0), P::lb(-1)) == 0);
        CHECK(ext_dim(P::lb(-3), P::lb(0)) == 0);
    }
    SUBCASE("torsion") {
        CHECK(hom_dim(P::lb(5), P::tor(y, 2)) == 2);
        CHECK(hom_dim(P::lb(5), P::tor(quad, 1)) == 2);
        CHECK(hom_dim(P::tor(y, 1), P::lb(5)) == 0);
        CHECK(ext_dim(P::tor(y, 1), P::lb(0)) == 1);
        CHECK(hom_dim(P::tor(y, 2), P::tor(y, 3)) == 2);
        CHECK(hom_dim(P::tor(y, 1), P::tor(pq("y-1"), 1)) == 0);
        CHECK(hom_dim(P::tor(quad, 1), P::tor(quad, 2)) == 2);
        CHECK(ext_dim(P::tor(y, 2), P::tor(y, 2)) == 2);
    }
    SUBCASE("serre duality is built in") {
        for (int n = -2; n <= 2; ++n)
            for (int m = -2; m <= 2; ++m)
                CHECK(ext_dim(P::lb(n), P::lb(m)) == hom_dim(P::lb(m), P::lb(n - 2)));
    }
}

TEST_CASE("twist, tau and mutation") {
    using P = P1Label<Rat>;
    CHECK(twist_label(P::lb(1), 3) == P::lb(4));
    CHECK(twist_label(P::tor(pq("y"), 2), 5) == P::tor(pq("y"), 2));
    CHECK(tau(P::lb(0)) == P::lb(-2));
    CHECK(mutate(P::lb(0), pq("y^2+1"), 1) == P::lb(2));
    CHECK(mutate(P::lb(0), pq("y"), -1) == P::lb(-1));
}

TEST_CASE("tilting pairs on the projective line") {
    using P = P1Label<Rat>;
    std::vector<P> good = {P::lb(4), P::lb(5)};
    CHECK(is_tilting_p1(good));
    std::vector<P> gap = {P::lb(0), P::lb(2)};
    CHECK(!is_tilting_p1(gap));
    std::vector<P> torsion = {P::lb(0), P::lb(1), P::tor(pq("y"), 1)};
    CHECK(!is_tilting_p1(torsion));
    std::vector<P> one = {P::lb(0)};
    CHECK(!is_tilting_p1(one));
}

TEST_CASE("p1 label parsing round trips") {
    FieldTag q{0};
    for (const char* s : {"LB(0)", "LB(-3)", "Tor(y,2)", "Tor(y^2+1,1)", "Tor(inf,4)"}) {
        auto l = parse_p1_label<Rat>(s, q);
        CHECK(label_str(l) == s);
    }
    CHECK_THROWS_AS(parse_p1_label<Rat>("LB()", q), error);
    CHECK_THROWS_AS(parse_p1_label<Rat>("Tor(y)", q), error);
    CHECK_THROWS_AS(parse_p1_label<Rat>("Tor(y^2-1,1)", q), error);
}
