#include <doctest.h>

#include <sheafline/sheafline.hpp>

#include <vector>

using namespace sheafline;

namespace {

RationalPoint<Rat> rp(long long v) { return RationalPoint<Rat>::finite(Rat(v)); }
RationalPoint<Rat> rinf() { return RationalPoint<Rat>::infinity(); }

Mat<Int> imat(const std::vector<std::vector<long long>>& rows) {
    Mat<Int> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = Int(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return m;
}

} // namespace

TEST_CASE("cartan matrices of the model algebras") {
    auto kr = cartan(kronecker_algebra<Rat>());
    CHECK(kr == imat({{1, 2}, {0, 1}}));
    CHECK(det_int(kr) == 1);
    CHECK(check_H5(kr));

    auto sq = cartan(squid<Rat>({2}, {rp(0)}));
    CHECK(sq == imat({{1, 2, 1}, {0, 1, 1}, {0, 0, 1}}));

    auto ca = cartan(canonical<Rat>({2, 2}, {rp(0), rp(1)}));
    CHECK(ca == imat({{1, 1, 1, 2}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}}));
}

TEST_CASE("squid and canonical algebras are derived equivalent in rank") {
    std::vector<std::vector<int>> tuples = {{2, 2}, {2, 3}, {3, 3}, {2, 3, 5}, {2, 2, 2, 2}};
    std::vector<RationalPoint<Rat>> base = {rp(0), rp(1), rinf(), rp(2)};
    for (const auto& p : tuples) {
        std::vector<RationalPoint<Rat>> pts(base.begin(), base.begin() + static_cast<long>(p.size()));
        int n = 2;
        for (int w : p) n += w - 1;

        auto gs = euler_gram(squid<Rat>(p, pts));
        auto gc = euler_gram(canonical<Rat>(p, pts));
        CHECK(gs.rows == n);
        CHECK(gc.rows == n);
        CHECK(check_H5(gs));
        CHECK(check_H5(gc));

        auto phi_s = to_int_matrix(coxeter(gs));
        auto phi_c = to_int_matrix(coxeter(gc));
        Int ds = det_int(phi_s), dc = det_int(phi_c);
        CHECK((ds == 1 || ds == -1));
        CHECK((dc == 1 || dc == -1));
    }
}

TEST_CASE("coxeter transformation of the kronecker algebra") {
    auto g = euler_gram(kronecker_algebra<Rat>());
    auto phi = coxeter(g);
    CHECK(to_int_matrix(phi) == imat({{3, 2}, {-2, -1}}));

    auto v = mat_vec(phi, std::vector<Rat>{Rat(1), Rat(0)});
    CHECK(v == std::vector<Rat>{Rat(3), Rat(-2)});

    // the coxeter transformation is an isometry of the euler form
    auto form = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
        Rat s(0);
        for (int i = 0; i < g.rows; ++i)
            for (int j = 0; j < g.cols; ++j) s = s + x[static_cast<size_t>(i)] * Rat(g.at(i, j)) * y[static_cast<size_t>(j)];
        return s;
    };
    std::vector<std::vector<Rat>> sample = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(2), Rat(-3)}};
    for (const auto& x : sample)
        for (const auto& y : sample) CHECK(form(mat_vec(phi, x), mat_vec(phi, y)) == form(x, y));
}

TEST_CASE("coxeter rejects singular gram matrices") {
    CHECK_THROWS_AS(coxeter(imat({{1, 1}, {1, 1}})), error);
    try {
        coxeter(imat({{0, 0}, {0, 0}}));
        FAIL("expected degenerate_form");
    } catch (const error& e) {
        CHECK(e.which() == error::kind::degenerate_form);
    }
}

TEST_CASE("path enumeration requires an acyclic quiver") {
    PathAlgebra<Rat> a;
    a.vertices = {"u", "v"};
    a.arrows = {{"f", "u", "v"}, {"g", "v", "u"}};
    try {
        cartan(a);
        FAIL("expected non_acyclic");
    } catch (const error& e) {
        CHECK(e.which() == error::kind::non_acyclic);
    }
}

TEST_CASE("weight data validation") {
    try {
        squid<Rat>({1}, {rp(0)});
        FAIL("expected weight_too_small");
    } catch (const error& e) {
        CHECK(e.which() == error::kind::weight_too_small);
    }
    try {
        squid<Rat>({2, 2}, {rp(0), rp(0)});
        FAIL("expected duplicate_points");
    } catch (const error& e) {
        CHECK(e.which() == error::kind::duplicate_points);
    }
    try {
        canonical<Rat>({2, 2}, {rp(0)});
        FAIL("expected arity_mismatch");
    } catch (const error& e) {
        CHECK(e.which() == error::kind::arity_mismatch);
    }
}

TEST_CASE("tilting data recognizes unimodular class lattices") {
    auto zero = Mat<Int>(2, 2);
    auto g = imat({{1, 1}, {0, 1}});
    CHECK(is_tilting_data(g, zero, {{Int(1), Int(0)}, {Int(1), Int(1)}}, 2));
    CHECK_FALSE(is_tilting_data(g, zero, {{Int(1), Int(0)}, {Int(2), Int(0)}}, 2));

    auto ext = Mat<Int>(2, 2);
    ext.at(1, 0) = Int(1);
    CHECK_FALSE(is_tilting_data(g, ext, {{Int(1), Int(0)}, {Int(0), Int(1)}}, 2));
}
