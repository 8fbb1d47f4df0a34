#include <doctest.h>

#include <sheafline/sheafline.hpp>

#include <string>
#include <vector>

using namespace sheafline;

namespace {

ValuedQuiver cycle(int p) {
    ValuedQuiver q;
    for (int i = 0; i < p; ++i) q.vertices.push_back("v" + std::to_string(i));
    for (int i = 0; i < p; ++i) q.arrows.push_back({q.vertices[static_cast<size_t>(i)], q.vertices[static_cast<size_t>((i + 1) % p)], 1, 1});
    return q;
}

std::vector<int> dimvec(const TubeLabel& a) {
    std::vector<int> d(static_cast<size_t>(a.p), 0);
    for (int t = 0; t < a.l; ++t) d[static_cast<size_t>((a.j + t) % a.p)]++;
    return d;
}

// Euler form of the cyclic quiver, computed from dimension vectors alone
int chi(const TubeLabel& a, const TubeLabel& b) {
    auto x = dimvec(a), y = dimvec(b);
    int s = 0;
    for (int v = 0; v < a.p; ++v) {
        s += x[static_cast<size_t>(v)] * y[static_cast<size_t>(v)];
        s -= x[static_cast<size_t>(v)] * y[static_cast<size_t>((v + 1) % a.p)];
    }
    return s;
}

} // namespace

TEST_CASE("uniserial check on cycles and near-cycles") {
    for (int p = 1; p <= 8; ++p) CHECK(check_uniserial(cycle(p)));

    auto q = cycle(3);
    q.arrows.push_back({"v0", "v2", 1, 1});
    CHECK_FALSE(check_uniserial(q));

    auto q2 = cycle(2);
    q2.arrows[0].s = 2;
    CHECK_FALSE(check_uniserial(q2));

    auto q3 = cycle(2);
    q3.arrows[0].t = 2;
    CHECK_FALSE(check_uniserial(q3));
}

TEST_CASE("tube label normalization") {
    CHECK(TubeLabel::make(3, 5, 2).j == 2);
    CHECK(TubeLabel::make(3, -1, 2).j == 2);
    CHECK(TubeLabel::make(1, 7, 4) == TubeLabel::make(1, 0, 4));
    CHECK_THROWS_AS(TubeLabel::make(3, 0, 0), error);
    CHECK_THROWS_AS(TubeLabel::make(0, 0, 1), error);
    CHECK_THROWS_AS(tube_hom(TubeLabel::make(2, 0, 1), TubeLabel::make(3, 0, 1)), error);
}

TEST_CASE("hom minus ext is the euler form of the cycle") {
    for (int p = 1; p <= 4; ++p)
        for (int j = 0; j < p; ++j)
            for (int l = 1; l <= 6; ++l)
                for (int j2 = 0; j2 < p; ++j2)
                    for (int l2 = 1; l2 <= 6; ++l2) {
                        auto a = TubeLabel::make(p, j, l);
                        auto b = TubeLabel::make(p, j2, l2);
                        CHECK(tube_hom(a, b) - tube_ext(a, b) == chi(a, b));
                    }
}

TEST_CASE("simple objects in a tube") {
    for (int p = 2; p <= 5; ++p)
        for (int j = 0; j < p; ++j)
            for (int j2 = 0; j2 < p; ++j2) {
                auto s = TubeLabel::make(p, j, 1);
                auto s2 = TubeLabel::make(p, j2, 1);
                CHECK(tube_hom(s, s2) == (j == j2 ? 1 : 0));
                CHECK(tube_ext(s, s2) == (j2 == (j + 1) % p ? 1 : 0));
            }
}

TEST_CASE("top and socle of a uniserial object") {
    for (int p = 1; p <= 4; ++p)
        for (int j = 0; j < p; ++j)
            for (int l = 1; l <= 5; ++l) {
                auto u = TubeLabel::make(p, j, l);
                int socle = (j + l - 1) % p;
                for (int j2 = 0; j2 < p; ++j2) {
                    auto s = TubeLabel::make(p, j2, 1);
                    if (p == 1) {
                        CHECK(tube_hom(u, s) == 1);
                        CHECK(tube_hom(s, u) == 1);
                    } else {
                        CHECK(tube_hom(u, s) == (j2 == j ? 1 : 0));
                        CHECK(tube_hom(s, u) == (j2 == socle ? 1 : 0));
                    }
                }
            }
}

TEST_CASE("tau is periodic and ar sequences are exact on dimensions") {
    for (int p = 1; p <= 5; ++p) {
        auto a = TubeLabel::make(p, 1, 3);
        auto b = a;
        for (int i = 0; i < p; ++i) b = tube_tau(b);
        CHECK(b == a);
        if (p > 1) CHECK(tube_tau(a) != a);
    }

    for (int p = 1; p <= 4; ++p)
        for (int j = 0; j < p; ++j)
            for (int l = 1; l <= 5; ++l) {
                auto a = TubeLabel::make(p, j, l);
                auto s = ar_sequence(a);
                CHECK(s.right == a);
                CHECK(s.left == tube_tau(a));
                CHECK(s.middle.size() == (l > 1 ? 2u : 1u));
                auto want = dimvec(s.left);
                auto dr = dimvec(s.right);
                for (int v = 0; v < p; ++v) want[static_cast<size_t>(v)] += dr[static_cast<size_t>(v)];
                std::vector<int> got(static_cast<size_t>(p), 0);
                for (const auto& m : s.middle) {
                    auto dm = dimvec(m);
                    for (int v = 0; v < p; ++v) got[static_cast<size_t>(v)] += dm[static_cast<size_t>(v)];
                }
                CHECK(got == want);
            }

    auto s1 = ar_sequence(TubeLabel::make(3, 0, 1));
    REQUIRE(s1.middle.size() == 1);
    CHECK(s1.middle[0] == TubeLabel::make(3, 0, 2));

    auto s2 = ar_sequence(TubeLabel::make(3, 0, 2));
    REQUIRE(s2.middle.size() == 2);
    CHECK(s2.middle[0] == TubeLabel::make(3, 0, 3));
    CHECK(s2.middle[1] == TubeLabel::make(3, 1, 1));
}

TEST_CASE("expanding a vertex rewires arrows through the new edge") {
    ValuedQuiver q;
    q.vertices = {"u", "v", "w"};
    q.arrows = {{"u", "v", 2, 1}, {"v", "w", 1, 3}, {"v", "v", 1, 1}};

    auto e = expand_quiver(q, "v");
    CHECK(e.vertices == std::vector<std::string>{"u", "v_l", "v_r", "w"});
    REQUIRE(e.arrows.size() == 4);
    CHECK(e.arrows[0] == ValuedArrow{"u", "v_l", 2, 1});
    CHECK(e.arrows[1] == ValuedArrow{"v_r", "w", 1, 3});
    CHECK(e.arrows[2] == ValuedArrow{"v_r", "v_l", 1, 1});
    CHECK(e.arrows[3] == ValuedArrow{"v_l", "v_r", 1, 1});

    CHECK_THROWS_AS(expand_quiver(q, "missing"), error);
}

TEST_CASE("contracting the new edge undoes an expansion") {
    ValuedQuiver q;
    q.vertices = {"u", "v", "w"};
    q.arrows = {{"u", "v", 2, 1}, {"v", "w", 1, 3}};

    auto e = expand_quiver(q, "v");
    auto back = contract_quiver(e, "v_l", "v_r");

    ValuedQuiver want = q;
    want.vertices[1] = "v_l";
    for (auto& a : want.arrows) {
        if (a.from == "v") a.from = "v_l";
        if (a.to == "v") a.to = "v_l";
    }
    CHECK(back == want);
}

TEST_CASE("contraction rejects edges that would change the category") {
    ValuedQuiver q;
    q.vertices = {"a", "b", "c"};

    auto expect_kind = [](const ValuedQuiver& g, const char* from, const char* to, error::kind k) {
        try {
            contract_quiver(g, from, to);
            FAIL("expected an error");
        } catch (const error& e) {
            CHECK(e.which() == k);
        }
    };

    auto q1 = q;
    q1.arrows = {{"a", "b", 2, 1}};
    expect_kind(q1, "a", "b", error::kind::not_contractible);

    auto q2 = q;
    q2.arrows = {{"a", "b", 1, 1}, {"a", "c", 1, 1}};
    expect_kind(q2, "a", "b", error::kind::not_contractible);

    auto q3 = q;
    q3.arrows = {{"a", "b", 1, 1}, {"c", "b", 1, 1}};
    expect_kind(q3, "a", "b", error::kind::not_contractible);

    auto q4 = q;
    q4.arrows = {{"a", "a", 1, 1}};
    expect_kind(q4, "a", "a", error::kind::not_contractible);

    auto q5 = q;
    q5.arrows = {{"a", "b", 1, 1}};
    expect_kind(q5, "b", "a", error::kind::not_contractible);
    expect_kind(q5, "x", "b", error::kind::vertex_not_found);
}
