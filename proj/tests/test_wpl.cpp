#include <doctest.h>

#include <sheafline/sheafline.hpp>

#include <random>
#include <vector>

using namespace sheafline;

namespace {

WPL<Rat> model235() {
    WPLSpec<Rat> s;
    s.weights = {2, 3, 5};
    s.points = {RationalPoint<Rat>::finite(Rat(0)), RationalPoint<Rat>::finite(Rat(1)),
                RationalPoint<Rat>::infinity()};
    return WPL<Rat>(s);
}

LElem omega(const WPL<Rat>& X) {
    std::vector<int> raw(static_cast<size_t>(X.arms()), -1);
    return X.lelem(X.arms() - 2, raw);
}

std::vector<Int> phi_class(const WPL<Rat>& X, const WPLLabel<Rat>& l) {
    auto phi = X.coxeter_action();
    auto cls = X.class_of(l);
    std::vector<Int> out(cls.size(), Int(0));
    for (int i = 0; i < phi.rows; ++i)
        for (int j = 0; j < phi.cols; ++j) out[static_cast<size_t>(i)] += phi.at(i, j) * cls[static_cast<size_t>(j)];
    return out;
}

} // namespace

TEST_CASE("grothendieck group of the (2,3,5) line") {
    auto X = model235();
    CHECK(X.k0_rank() == 9);
    CHECK(X.period() == 30);

    std::vector<Int> e0(9, Int(0)), e1(9, Int(0));
    e0[0] = Int(1);
    e1[1] = Int(1);
    CHECK(X.class_of(WPLLabel<Rat>::lb(X.lelem(0))) == e0);
    CHECK(X.class_of(WPLLabel<Rat>::lb(X.c_vec())) == e1);

    auto basis = X.squid_basis();
    REQUIRE(static_cast<int>(basis.size()) == 9);
    for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<Int> want(9, Int(0));
        want[i] = Int(1);
        CHECK(X.class_of(basis[i]) == want);
    }
}

TEST_CASE("graded pieces of the coordinate algebra") {
    auto X = model235();
    CHECK(X.graded_dim(X.lelem(0)) == 1);
    CHECK(X.graded_dim(X.c_vec()) == 2);
    for (int i = 1; i <= 3; ++i) CHECK(X.graded_dim(X.x_vec(i)) == 1);
    CHECK(X.graded_dim(X.lelem(-1)) == 0);

    // euler characteristic equals the section count whenever ext vanishes
    auto o = WPLLabel<Rat>::lb(X.lelem(0));
    for (long long l = 0; l <= 3; ++l) {
        auto b = WPLLabel<Rat>::lb(X.lelem(l));
        auto [h, e] = X.hom_ext(o, b);
        CHECK(e == 0);
        CHECK(h == X.graded_dim(X.lelem(l)));
        CHECK(h == static_cast<long long>(X.euler(X.class_of(o), X.class_of(b))));
    }
}

TEST_CASE("tau acts by adding the dualizing element") {
    auto X = model235();
    auto w = omega(X);
    CHECK(w.l == -2);
    CHECK(w.arm == std::vector<int>{1, 2, 4});

    std::mt19937 rng(20240601);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<int> raw(3);
        for (int i = 0; i < 3; ++i) raw[static_cast<size_t>(i)] = static_cast<int>(rng() % 7);
        auto x = X.lelem(static_cast<long long>(rng() % 11) - 5, raw);
        auto t = X.tau_label(WPLLabel<Rat>::lb(x));
        REQUIRE(t.k == WPLLabel<Rat>::kind::lb);
        CHECK(t.x == X.add(x, w));
    }
}

TEST_CASE("coxeter transformation tracks tau on classes") {
    auto X = model235();
    std::vector<WPLLabel<Rat>> labels = {
        WPLLabel<Rat>::lb(X.lelem(0)),
        WPLLabel<Rat>::lb(X.lelem(2, {1, 0, 3})),
        WPLLabel<Rat>::tor_e(1, 1, 1),
        WPLLabel<Rat>::tor_e(2, 3, 2),
        WPLLabel<Rat>::tor_e(3, 2, 4),
        WPLLabel<Rat>::tor_h(ClosedPoint<Rat>::finite(parse_poly<Rat>("y-2", "y", FieldTag{0})), 2),
    };
    for (const auto& l : labels) CHECK(phi_class(X, l) == X.class_of(X.tau_label(l)));

    // exceptional tubes close up after exactly p_i steps
    for (int i = 1; i <= 3; ++i) {
        auto l = WPLLabel<Rat>::tor_e(i, 1, 1);
        auto cur = l;
        for (int step = 0; step < X.weight(i); ++step) {
            cur = X.tau_label(cur);
            bool back = cur == l;
            CHECK(back == (step == X.weight(i) - 1));
        }
    }
}

TEST_CASE("serre duality for line bundles") {
    auto X = model235();
    auto w = omega(X);
    std::vector<LElem> xs = {X.lelem(0), X.lelem(1), X.lelem(-2, {1, 1, 0}), X.lelem(3, {0, 2, 4}),
                             X.lelem(-1, {1, 0, 2})};
    for (const auto& a : xs)
        for (const auto& b : xs) {
            auto [h, e] = X.hom_ext(WPLLabel<Rat>::lb(a), WPLLabel<Rat>::lb(b));
            CHECK(h == X.graded_dim(X.sub(b, a)));
            CHECK(e == X.graded_dim(X.sub(X.add(a, w), b)));
        }
}

TEST_CASE("rank and degree on classes") {
    auto X = model235();
    auto cls_o = X.class_of(WPLLabel<Rat>::lb(X.lelem(0)));
    auto cls_c = X.class_of(WPLLabel<Rat>::lb(X.c_vec()));
    CHECK(X.rank_of(cls_o) == 1);
    CHECK(X.rank_of(cls_c) == 1);
    CHECK(X.degree_of(cls_o) == 0);
    CHECK(X.degree_of(cls_c) == 30);

    for (int i = 1; i <= 3; ++i) {
        auto cls = X.class_of(WPLLabel<Rat>::tor_e(i, 1, 1));
        CHECK(X.rank_of(cls) == 0);
        CHECK(X.degree_of(cls) == 30 / X.weight(i));
    }

    auto q = ClosedPoint<Rat>::finite(parse_poly<Rat>("y^2+1", "y", FieldTag{0}));
    auto cls_h = X.class_of(WPLLabel<Rat>::tor_h(q, 3));
    CHECK(X.rank_of(cls_h) == 0);
    CHECK(X.degree_of(cls_h) == 2 * 3 * 30);
}

TEST_CASE("torsion hom and ext") {
    auto X = model235();
    auto p = ClosedPoint<Rat>::finite(parse_poly<Rat>("y-3", "y", FieldTag{0}));
    auto q = ClosedPoint<Rat>::finite(parse_poly<Rat>("y^2+1", "y", FieldTag{0}));

    CHECK(X.hom_ext(WPLLabel<Rat>::tor_h(p, 2), WPLLabel<Rat>::tor_h(p, 3)) ==
          std::pair<long long, long long>{2, 2});
    CHECK(X.hom_ext(WPLLabel<Rat>::tor_h(q, 2), WPLLabel<Rat>::tor_h(q, 2)) ==
          std::pair<long long, long long>{4, 4});
    CHECK(X.hom_ext(WPLLabel<Rat>::tor_h(p, 1), WPLLabel<Rat>::tor_h(q, 1)) ==
          std::pair<long long, long long>{0, 0});

    // different arms never interact; same arm matches the tube calculus
    CHECK(X.hom_ext(WPLLabel<Rat>::tor_e(1, 1, 1), WPLLabel<Rat>::tor_e(2, 1, 1)) ==
          std::pair<long long, long long>{0, 0});
    auto he = X.hom_ext(WPLLabel<Rat>::tor_e(3, 2, 4), WPLLabel<Rat>::tor_e(3, 4, 3));
    auto ta = TubeLabel::make(5, 1, 4);
    auto tb = TubeLabel::make(5, 3, 3);
    CHECK(he.first == tube_hom(ta, tb));
    CHECK(he.second == tube_ext(ta, tb));
}

TEST_CASE("tilting families") {
    auto X = model235();
    auto ct = X.canonical_tilting();
    CHECK(static_cast<int>(ct.size()) == X.k0_rank());
    CHECK(X.is_tilting(ct));
    CHECK(X.is_tilting(X.squid_basis()));

    // dropping an element breaks completeness
    auto partial = ct;
    partial.pop_back();
    CHECK_FALSE(X.is_tilting(partial));

    // a line bundle together with its shift by c has ext in one direction
    std::vector<WPLLabel<Rat>> bad = {WPLLabel<Rat>::lb(X.lelem(0)), WPLLabel<Rat>::lb(X.lelem(-2))};
    CHECK_FALSE(X.is_tilting(bad));
}

TEST_CASE("classes determine line bundles") {
    auto X = model235();
    std::mt19937 rng(777);
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<int> raw(3);
        for (int i = 0; i < 3; ++i) raw[static_cast<size_t>(i)] = static_cast<int>(rng() % 9);
        auto x = X.lelem(static_cast<long long>(rng() % 7) - 3, raw);
        auto back = X.lb_with_class(X.class_of(WPLLabel<Rat>::lb(x)));
        REQUIRE(back.k == WPLLabel<Rat>::kind::lb);
        CHECK(back.x == x);
    }

    try {
        X.lb_with_class(X.class_of(WPLLabel<Rat>::tor_e(2, 1, 1)));
        FAIL("expected no_line_bundle_with_class");
    } catch (const error& e) {
        CHECK(e.which() == error::kind::no_line_bundle_with_class);
    }
}

TEST_CASE("expansion chains shrink one weight at a time") {
    WPLSpec<Rat> s;
    s.weights = {2, 3};
    s.points = {RationalPoint<Rat>::finite(Rat(0)), RationalPoint<Rat>::finite(Rat(1))};
    auto chain = expansion_chain(s);
    REQUIRE(chain.size() == 4);
    CHECK(chain[0].weights == std::vector<int>{2, 3});
    CHECK(chain[1].weights == std::vector<int>{2, 2});
    CHECK(chain[2].weights == std::vector<int>{2});
    CHECK(chain[3].weights.empty());
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        CHECK(WPL<Rat>(chain[i]).k0_rank() == WPL<Rat>(chain[i + 1]).k0_rank() + 1);
    CHECK(WPL<Rat>(chain[3]).is_homogeneous());
}
