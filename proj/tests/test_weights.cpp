#include <doctest.h>

#include <sheafline/sheafline.hpp>

#include <random>
#include <vector>

using namespace sheafline;

namespace {

RationalPoint<Rat> fin(long long v) { return RationalPoint<Rat>::finite(Rat(v)); }
RationalPoint<Rat> frac(long long n, long long d) { return RationalPoint<Rat>::finite(Rat(n) / Rat(d)); }
RationalPoint<Rat> pinf() { return RationalPoint<Rat>::infinity(); }

WeightFunction<Rat> wf(std::vector<std::pair<RationalPoint<Rat>, int>> e) {
    return WeightFunction<Rat>::make(std::move(e));
}

} // namespace

TEST_CASE("moebius transformations act on the projective line") {
    auto shift = PGL2<Rat>::make(Rat(1), Rat(0), Rat(1), Rat(1));
    CHECK(moebius_apply(shift, fin(0)) == fin(1));
    CHECK(moebius_apply(shift, fin(-5)) == fin(-4));
    CHECK(moebius_apply(shift, pinf()) == pinf());

    auto invert = PGL2<Rat>::make(Rat(0), Rat(1), Rat(1), Rat(0));
    CHECK(moebius_apply(invert, fin(2)) == frac(1, 2));
    CHECK(moebius_apply(invert, pinf()) == fin(0));
    CHECK(moebius_apply(invert, fin(0)) == pinf());

    CHECK_THROWS_AS(PGL2<Rat>::make(Rat(1), Rat(2), Rat(2), Rat(4)), error);
}

TEST_CASE("composition and inverse") {
    auto s = PGL2<Rat>::make(Rat(2), Rat(1), Rat(1), Rat(1));
    auto t = PGL2<Rat>::make(Rat(0), Rat(-1), Rat(1), Rat(3));
    std::vector<RationalPoint<Rat>> pts = {fin(0), fin(1), fin(-2), frac(3, 7), pinf()};
    for (const auto& x : pts) {
        CHECK(moebius_apply(s.compose(t), x) == moebius_apply(s, moebius_apply(t, x)));
        CHECK(moebius_apply(s.inverse(), moebius_apply(s, x)) == x);
    }
    CHECK(s.compose(s.inverse()) == PGL2<Rat>::identity());
}

TEST_CASE("three points determine the transformation") {
    std::mt19937 rng(424242);
    auto rand_pt = [&]() -> RationalPoint<Rat> {
        int v = static_cast<int>(rng() % 12);
        return v == 11 ? pinf() : fin(v - 5);
    };
    for (int iter = 0; iter < 40; ++iter) {
        RationalPoint<Rat> a = rand_pt(), b = rand_pt(), c = rand_pt();
        RationalPoint<Rat> a2 = rand_pt(), b2 = rand_pt(), c2 = rand_pt();
        if (a == b || b == c || a == c || a2 == b2 || b2 == c2 || a2 == c2) continue;
        auto s = mobius_through(a, b, c, a2, b2, c2);
        CHECK(moebius_apply(s, a) == a2);
        CHECK(moebius_apply(s, b) == b2);
        CHECK(moebius_apply(s, c) == c2);
    }

    Fp z(0, 7), o(1, 7), t(3, 7);
    auto s7 = mobius_through(RationalPoint<Fp>::finite(z), RationalPoint<Fp>::finite(o),
                             RationalPoint<Fp>::infinity(), RationalPoint<Fp>::infinity(),
                             RationalPoint<Fp>::finite(t), RationalPoint<Fp>::finite(z));
    CHECK(moebius_apply(s7, RationalPoint<Fp>::finite(z)) == RationalPoint<Fp>::infinity());
    CHECK(moebius_apply(s7, RationalPoint<Fp>::finite(o)) == RationalPoint<Fp>::finite(t));
    CHECK(moebius_apply(s7, RationalPoint<Fp>::infinity()) == RationalPoint<Fp>::finite(z));

    CHECK_THROWS_AS(mobius_through(fin(0), fin(0), fin(1), fin(0), fin(1), fin(2)), error);
    try {
        mobius_through(fin(0), fin(1), fin(2), fin(3), fin(3), fin(4));
        FAIL("expected degenerate_triple");
    } catch (const error& e) {
        CHECK(e.which() == error::kind::degenerate_triple);
    }
}

TEST_CASE("weight functions validate and sort their entries") {
    auto w = wf({{fin(1), 3}, {pinf(), 2}, {fin(0), 5}});
    REQUIRE(w.entries.size() == 3);
    CHECK(w.entries[0].first == fin(0));
    CHECK(w.entries[1].first == fin(1));
    CHECK(w.entries[2].first == pinf());
    CHECK(w.weight_at(fin(0)) == 5);
    CHECK(w.weight_at(fin(9)) == 1);
    CHECK(w.weight_multiset() == std::vector<int>{2, 3, 5});

    CHECK_THROWS_AS(wf({{fin(0), 1}}), error);
    CHECK_THROWS_AS(wf({{fin(0), 2}, {fin(0), 3}}), error);
}

TEST_CASE("equivalence of weight functions") {
    auto check_witness = [](const WeightFunction<Rat>& a, const WeightFunction<Rat>& b) {
        auto s = weights_equivalent(a, b);
        REQUIRE(s.has_value());
        for (const auto& [x, wt] : b.entries) CHECK(a.weight_at(moebius_apply(*s, x)) == wt);
        for (const auto& [x, wt] : a.entries) CHECK(b.weight_at(moebius_apply(s->inverse(), x)) == wt);
    };

    check_witness(wf({}), wf({}));
    check_witness(wf({{fin(0), 2}}), wf({{pinf(), 2}}));
    check_witness(wf({{fin(0), 2}, {fin(1), 3}}), wf({{fin(0), 3}, {fin(1), 2}}));
    check_witness(wf({{fin(0), 2}, {fin(1), 3}, {pinf(), 5}}),
                  wf({{fin(4), 5}, {fin(7), 3}, {fin(9), 2}}));

    // four marked points carry a cross ratio
    auto base = wf({{fin(0), 2}, {fin(1), 2}, {pinf(), 2}, {fin(2), 2}});
    check_witness(base, wf({{fin(0), 2}, {fin(1), 2}, {pinf(), 2}, {frac(1, 2), 2}}));
    CHECK_FALSE(weights_equivalent(base, wf({{fin(0), 2}, {fin(1), 2}, {pinf(), 2}, {fin(3), 2}})));

    // weight multisets must match
    CHECK_FALSE(weights_equivalent(wf({{fin(0), 2}}), wf({{fin(0), 3}})));
    CHECK_FALSE(weights_equivalent(wf({{fin(0), 2}}), wf({})));

    // asymmetric weights pin the points down
    auto u = wf({{fin(0), 2}, {fin(1), 3}, {pinf(), 7}, {fin(2), 5}});
    check_witness(u, u);
    auto moved = wf({{fin(1), 2}, {fin(2), 3}, {pinf(), 7}, {fin(3), 5}});
    check_witness(u, moved);
}

TEST_CASE("equivalence over a finite field") {
    auto p = [](long long v) { return RationalPoint<Fp>::finite(Fp(v, 5)); };
    auto w1 = WeightFunction<Fp>::make({{p(0), 2}, {p(1), 3}});
    auto w2 = WeightFunction<Fp>::make({{p(3), 3}, {RationalPoint<Fp>::infinity(), 2}});
    auto s = weights_equivalent(w1, w2, Fp(0, 5));
    REQUIRE(s.has_value());
    for (const auto& [x, wt] : w2.entries) CHECK(w1.weight_at(moebius_apply(*s, x)) == wt);

    auto w3 = WeightFunction<Fp>::make({{p(0), 2}, {p(1), 2}, {p(2), 2}, {p(3), 2}, {p(4), 2},
                                        {RationalPoint<Fp>::infinity(), 2}});
    CHECK(weights_equivalent(w3, w3, Fp(0, 5)).has_value());
}

TEST_CASE("weight function text round trip") {
    auto w = parse_weight_function<Rat>("0:2,1:3,inf:5,-1/2:2", FieldTag{0});
    REQUIRE(w.entries.size() == 4);
    CHECK(w.weight_at(frac(-1, 2)) == 2);
    CHECK(w.weight_at(pinf()) == 5);

    for (const auto& [pt, wt] : w.entries) {
        auto back = parse_rational_point<Rat>(rational_point_str(pt), FieldTag{0});
        CHECK(back == pt);
        (void)wt;
    }

    CHECK_THROWS_AS(parse_weight_function<Rat>("0", FieldTag{0}), error);
    CHECK_THROWS_AS(parse_weight_function<Rat>("0:1", FieldTag{0}), error);
}
