#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "algebras.hpp"
#include "kronecker.hpp"
#include "lengthcat.hpp"
#include "p1.hpp"
#include "weights.hpp"
#include "wpl.hpp"

namespace sheafline::selftest {

struct Result {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline std::string fmt_secs(double s) {
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(2);
    o << s << "s";
    return o.str();
}

inline LaurentPoly<Fp> fp_mono(uint32_t p, long long c, int e) {
    return LaurentPoly<Fp>(e, {Fp(c, p)});
}

inline Mat<LaurentPoly<Fp>> random_unimodular(std::mt19937& rng, int r, uint32_t p) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<uint32_t>(n)); };
    Mat<LaurentPoly<Fp>> m(r, r);
    for (int i = 0; i < r; ++i) m.at(i, i) = fp_mono(p, 1, 0);
    int nops = 1 + pick(10);
    for (int t = 0; t < nops; ++t) {
        int kind = pick(10);
        if (kind < 8) {
            int i = pick(r), j = pick(r);
            if (i == j) continue;
            LaurentPoly<Fp> c = fp_mono(p, pick(static_cast<int>(p)), pick(3) - 1);
            if (kind < 4)
                for (int k = 0; k < r; ++k) m.at(i, k) = m.at(i, k) + c * m.at(j, k);
            else
                for (int k = 0; k < r; ++k) m.at(k, i) = m.at(k, i) + c * m.at(k, j);
        } else if (kind == 8) {
            int i = pick(r), j = pick(r);
            if (i != j)
                for (int k = 0; k < r; ++k) std::swap(m.at(i, k), m.at(j, k));
        } else {
            int i = pick(r);
            LaurentPoly<Fp> c = fp_mono(p, 1 + pick(static_cast<int>(p) - 1), pick(3) - 1);
            for (int k = 0; k < r; ++k) m.at(i, k) = c * m.at(i, k);
        }
    }
    return m;
}

inline std::vector<Mat<LaurentPoly<Fp>>> splitting_samples() {
    std::mt19937 rng(0x5eaf0001u);
    std::vector<Mat<LaurentPoly<Fp>>> out;
    out.reserve(200);
    for (int iter = 0; iter < 200; ++iter) out.push_back(random_unimodular(rng, 2 + iter % 3, 7));
    return out;
}

inline ClosedPoint<Rat> q_point(std::vector<long long> coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long long x : coeffs) c.emplace_back(x);
    return ClosedPoint<Rat>::finite(Poly<Rat>(std::move(c)));
}

} // namespace detail

inline Result criterion1() {
    Result res{1, "birkhoff-split-random", false, ""};
    auto t0 = detail::Clock::now();
    auto mats = detail::splitting_samples();
    for (size_t idx = 0; idx < mats.size(); ++idx) {
        const auto& mu = mats[idx];
        std::string where = "matrix " + std::to_string(idx);
        auto s = birkhoff_split(mu);
        if (!(s.U * s.D * s.V == mu)) {
            res.detail = where + ": U*D*V != mu";
            return res;
        }
        if (!std::is_sorted(s.type.begin(), s.type.end())) {
            res.detail = where + ": type not ascending";
            return res;
        }
        for (const auto& e : s.U.a)
            if (!e.zero() && e.high() > 0) {
                res.detail = where + ": U has a positive power of y";
                return res;
            }
        for (const auto& e : s.V.a)
            if (!e.zero() && e.low() < 0) {
                res.detail = where + ": V has a negative power of y";
                return res;
            }
        auto du = det_laurent(s.U).unit();
        auto dv = det_laurent(s.V).unit();
        if (!du || du->second != 0) {
            res.detail = where + ": det U is not a nonzero constant";
            return res;
        }
        if (!dv || dv->second != 0) {
            res.detail = where + ": det V is not a nonzero constant";
            return res;
        }
        for (int k = 0; k < s.D.rows; ++k) {
            auto dk = s.D.at(k, k).unit();
            if (!dk || dk->second != -s.type[static_cast<size_t>(k)]) {
                res.detail = where + ": D does not match the type";
                return res;
            }
        }
        auto dm = det_laurent(mu).unit();
        long long total = 0;
        for (int n : s.type) total += n;
        if (!dm || total != -static_cast<long long>(dm->second)) {
            res.detail = where + ": sum of type != -deg det";
            return res;
        }
    }
    double el = detail::seconds_since(t0);
    if (el >= 10.0) {
        res.detail = "exceeded 10s budget: " + detail::fmt_secs(el);
        return res;
    }
    res.pass = true;
    res.detail = "200 matrices verified in " + detail::fmt_secs(el);
    return res;
}

inline Result criterion2() {
    Result res{2, "tilt-untilt-roundtrip", false, ""};
    auto t0 = detail::Clock::now();
    auto mats = detail::splitting_samples();
    for (size_t idx = 0; idx < mats.size(); ++idx) {
        const auto& mu = mats[idx];
        std::string where = "matrix " + std::to_string(idx);
        auto type = birkhoff_split(mu).type;
        int minn = *std::min_element(type.begin(), type.end());
        int t = minn < 0 ? -minn : 0;
        auto rep = tilt_bundle(twist_bundle(mu, t));
        auto labels = pencil_decompose(rep);
        std::vector<int> got;
        for (const auto& l : labels) {
            auto d = untilt(l);
            if (d.shift != 0 || d.base.torsion) {
                res.detail = where + ": untilt produced a non-bundle summand";
                return res;
            }
            got.push_back(d.base.n - t);
        }
        std::sort(got.begin(), got.end());
        if (got != type) {
            res.detail = where + ": recovered twists disagree with splitting type";
            return res;
        }
    }
    res.pass = true;
    res.detail = "200 matrices round-tripped in " + detail::fmt_secs(detail::seconds_since(t0));
    return res;
}

inline Result criterion3() {
    Result res{3, "serre-duality-table", false, ""};
    using P = P1Label<Rat>;
    std::vector<P> labels;
    for (int n = 0; n <= 4; ++n) labels.push_back(P::lb(n));
    std::vector<ClosedPoint<Rat>> pts = {detail::q_point({0, 1}), detail::q_point({-1, 1}),
                                         ClosedPoint<Rat>::inf(), detail::q_point({1, 0, 1})};
    for (const auto& p : pts)
        for (int r = 1; r <= 3; ++r) labels.push_back(P::tor(p, r));
    int pairs = 0;
    for (const auto& f : labels)
        for (const auto& g : labels) {
            auto [ra, sa] = tilt_label(f);
            auto [rb, sb] = tilt_label(g);
            if (sa != 0 || sb != 0) {
                res.detail = "unexpected tilt shift";
                return res;
            }
            auto [h, e] = rep_hom_ext(ra, rb);
            if (h != hom_dim(f, g)) {
                res.detail = "hom mismatch at pair " + std::to_string(pairs);
                return res;
            }
            if (e != ext_dim(f, g)) {
                res.detail = "ext mismatch at pair " + std::to_string(pairs);
                return res;
            }
            ++pairs;
        }
    res.pass = true;
    res.detail = std::to_string(pairs) + " label pairs agree with the module computation";
    return res;
}

inline Result criterion4() {
    Result res{4, "squid-canonical-cartan", false, ""};
    auto t0 = detail::Clock::now();
    std::vector<RationalPoint<Rat>> base = {RationalPoint<Rat>::finite(Rat(0)),
                                            RationalPoint<Rat>::finite(Rat(1)),
                                            RationalPoint<Rat>::infinity()};
    int count = 0;
    for (int n = 0; n <= 3; ++n) {
        std::vector<int> w(static_cast<size_t>(n), 2);
        for (;;) {
            std::vector<RationalPoint<Rat>> pts(base.begin(), base.begin() + n);
            int expect = 2;
            for (int x : w) expect += x - 1;
            std::string tag = "weights (";
            for (size_t i = 0; i < w.size(); ++i) tag += (i ? "," : "") + std::to_string(w[i]);
            tag += ")";
            {
                auto c = cartan(squid(w, pts));
                if (c.rows != expect || !check_H5(c)) {
                    res.detail = "squid " + tag + " failed";
                    return res;
                }
            }
            {
                auto c = cartan(canonical(w, pts));
                if (c.rows != expect || !check_H5(c)) {
                    res.detail = "canonical " + tag + " failed";
                    return res;
                }
            }
            ++count;
            int i = n - 1;
            while (i >= 0 && w[static_cast<size_t>(i)] == 5) {
                w[static_cast<size_t>(i)] = 2;
                --i;
            }
            if (i < 0) break;
            ++w[static_cast<size_t>(i)];
        }
    }
    double el = detail::seconds_since(t0);
    if (el >= 5.0) {
        res.detail = "exceeded 5s budget: " + detail::fmt_secs(el);
        return res;
    }
    res.pass = true;
    res.detail = std::to_string(count) + " weight sequences, both algebras, in " + detail::fmt_secs(el);
    return res;
}

inline Result criterion5() {
    Result res{5, "line-to-simple-hom", false, ""};
    WPL<Rat> x235(WPLSpec<Rat>{{2, 3, 5},
                               {RationalPoint<Rat>::finite(Rat(0)), RationalPoint<Rat>::finite(Rat(1)),
                                RationalPoint<Rat>::infinity()}});
    std::mt19937 rng(0x5eaf0005u);
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<uint32_t>(n)); };
    LElem zero = x235.lelem(0);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= x235.weight(i); ++j) {
            long long h = x235.hom_line_to_simple(zero, i, j);
            if (h != (j == 1 ? 1 : 0)) {
                res.detail = "structure sheaf pairs with the wrong simple";
                return res;
            }
        }
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<int> raw(3);
        for (int i = 0; i < 3; ++i) raw[static_cast<size_t>(i)] = pick(x235.weight(i + 1));
        LElem x = x235.lelem(pick(11) - 5, raw);
        for (int i = 1; i <= 3; ++i) {
            long long sum = 0;
            for (int j = 1; j <= x235.weight(i); ++j) {
                long long h = x235.hom_line_to_simple(x, i, j);
                if (h != 0 && h != 1) {
                    res.detail = "hom value outside {0,1}";
                    return res;
                }
                sum += h;
            }
            if (sum != 1) {
                res.detail = "arm " + std::to_string(i) + " does not pair with exactly one simple";
                return res;
            }
        }
    }
    res.pass = true;
    res.detail = "200 random line bundles checked on weights (2,3,5)";
    return res;
}

inline Result criterion6() {
    Result res{6, "coxeter-transformation", false, ""};
    WPL<Rat> x235(WPLSpec<Rat>{{2, 3, 5},
                               {RationalPoint<Rat>::finite(Rat(0)), RationalPoint<Rat>::finite(Rat(1)),
                                RationalPoint<Rat>::infinity()}});
    Mat<Int> phi = x235.coxeter_action();
    int m = x235.k0_rank();
    std::mt19937 rng(0x5eaf0006u);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Int> u(static_cast<size_t>(m)), v(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
            u[static_cast<size_t>(i)] = Int(static_cast<long long>(rng() % 19) - 9);
            v[static_cast<size_t>(i)] = Int(static_cast<long long>(rng() % 19) - 9);
        }
        if (x235.euler(mat_vec(phi, u), mat_vec(phi, v)) != x235.euler(u, v)) {
            res.detail = "coxeter action does not preserve the euler form";
            return res;
        }
    }
    for (auto coeffs : {std::vector<long long>{-2, 1}, std::vector<long long>{1, 1, 1}}) {
        auto cls = x235.class_of(WPLLabel<Rat>::tor_h(detail::q_point(coeffs), 1));
        if (mat_vec(phi, cls) != cls) {
            res.detail = "homogeneous torsion class is not fixed";
            return res;
        }
    }
    for (int i = 1; i <= 3; ++i) {
        int p = x235.weight(i);
        for (int j = 1; j <= p; ++j) {
            auto cur = mat_vec(phi, x235.class_of(WPLLabel<Rat>::tor_e(i, j, 1)));
            if (cur != x235.class_of(WPLLabel<Rat>::tor_e(i, j % p + 1, 1))) {
                res.detail = "exceptional simple classes are not cycled";
                return res;
            }
        }
        auto start = x235.class_of(WPLLabel<Rat>::tor_e(i, 1, 1));
        auto orbit = start;
        for (int t = 1; t <= p; ++t) {
            orbit = mat_vec(phi, orbit);
            if (t < p && orbit == start) {
                res.detail = "orbit of arm " + std::to_string(i) + " closes early";
                return res;
            }
        }
        if (orbit != start) {
            res.detail = "orbit of arm " + std::to_string(i) + " does not close at the weight";
            return res;
        }
    }
    WPL<Rat> line(WPLSpec<Rat>{{}, {}});
    Mat<Int> phi1 = line.coxeter_action();
    if (phi1.rows != 2 || phi1.at(0, 0) != 3 || phi1.at(0, 1) != 2 || phi1.at(1, 0) != -2 ||
        phi1.at(1, 1) != -1) {
        res.detail = "projective line coxeter matrix is wrong";
        return res;
    }
    if (mat_vec(phi1, std::vector<Int>{Int(1), Int(0)}) != std::vector<Int>{Int(3), Int(-2)}) {
        res.detail = "projective line coxeter action on [O] is wrong";
        return res;
    }
    res.pass = true;
    res.detail = "form preserved on 100 random pairs; torsion orbits have the right periods";
    return res;
}

inline Result criterion7() {
    Result res{7, "tilting-checks", false, ""};
    using P = P1Label<Rat>;
    for (int n = -3; n <= 3; ++n) {
        std::vector<P> pair = {P::lb(n), P::lb(n + 1)};
        if (!is_tilting_p1(pair)) {
            res.detail = "O(n)+O(n+1) rejected at n = " + std::to_string(n);
            return res;
        }
    }
    std::vector<P> gap = {P::lb(0), P::lb(2)};
    if (is_tilting_p1(gap)) {
        res.detail = "O+O(2) accepted";
        return res;
    }
    std::vector<WPLSpec<Rat>> specs = {
        {{2, 3}, {RationalPoint<Rat>::finite(Rat(0)), RationalPoint<Rat>::finite(Rat(1))}},
        {{2, 2, 2},
         {RationalPoint<Rat>::finite(Rat(0)), RationalPoint<Rat>::finite(Rat(1)),
          RationalPoint<Rat>::infinity()}}};
    for (const auto& s : specs) {
        WPL<Rat> x(s);
        if (!x.is_tilting(x.squid_basis())) {
            res.detail = "squid basis rejected";
            return res;
        }
        if (!x.is_tilting(x.canonical_tilting())) {
            res.detail = "canonical tilting bundle rejected";
            return res;
        }
    }
    res.pass = true;
    res.detail = "twist pairs, the gap pair, and both standard tilting sets behave";
    return res;
}

inline Result criterion8() {
    Result res{8, "uniserial-and-tube-ext", false, ""};
    auto cycle = [](int p) {
        ValuedQuiver q;
        for (int i = 0; i < p; ++i) q.vertices.push_back("v" + std::to_string(i));
        for (int i = 0; i < p; ++i)
            q.arrows.push_back({q.vertices[static_cast<size_t>(i)],
                                q.vertices[static_cast<size_t>((i + 1) % p)], 1, 1});
        return q;
    };
    for (int p = 1; p <= 8; ++p)
        if (!check_uniserial(cycle(p))) {
            res.detail = "cycle of length " + std::to_string(p) + " rejected";
            return res;
        }
    {
        ValuedQuiver q = cycle(3);
        q.arrows.push_back({"v0", "v2", 1, 1});
        if (check_uniserial(q)) {
            res.detail = "extra arrow not detected";
            return res;
        }
    }
    {
        ValuedQuiver q = cycle(2);
        q.arrows[0].s = 2;
        if (check_uniserial(q)) {
            res.detail = "valuation (2,1) not detected";
            return res;
        }
    }
    {
        ValuedQuiver q;
        q.vertices = {"a"};
        q.arrows.push_back({"a", "a", 2, 2});
        if (check_uniserial(q)) {
            res.detail = "valued loop not detected";
            return res;
        }
    }
    for (int p = 1; p <= 5; ++p)
        for (int j = 0; j < p; ++j)
            for (int j2 = 0; j2 < p; ++j2) {
                int expect = j2 == (j + 1) % p ? 1 : 0;
                if (tube_ext(TubeLabel::make(p, j, 1), TubeLabel::make(p, j2, 1)) != expect) {
                    res.detail = "ext between tube simples is off at rank " + std::to_string(p);
                    return res;
                }
            }
    res.pass = true;
    res.detail = "cycles up to 8 accepted, violations rejected, simple ext table exact";
    return res;
}

inline Result criterion9() {
    Result res{9, "expand-contract", false, ""};
    std::mt19937 rng(0x5eaf0009u);
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<uint32_t>(n)); };
    for (int iter = 0; iter < 100; ++iter) {
        int nv = 1 + pick(6);
        ValuedQuiver q;
        for (int i = 0; i < nv; ++i) q.vertices.push_back("n" + std::to_string(i));
        for (int a = 0; a < nv; ++a)
            for (int b = 0; b < nv; ++b)
                if (pick(10) < 3)
                    q.arrows.push_back({q.vertices[static_cast<size_t>(a)],
                                        q.vertices[static_cast<size_t>(b)], 1 + pick(3),
                                        1 + pick(3)});
        std::string v = q.vertices[static_cast<size_t>(pick(nv))];
        ValuedQuiver e = expand_quiver(q, v);
        std::vector<std::string> fresh;
        for (const auto& name : e.vertices)
            if (q.vertex_index(name) < 0) fresh.push_back(name);
        if (fresh.size() != 2) {
            res.detail = "expansion did not introduce exactly two vertices";
            return res;
        }
        ValuedQuiver back = contract_quiver(e, fresh[0], fresh[1]);
        ValuedQuiver want = q;
        for (auto& name : want.vertices)
            if (name == v) name = fresh[0];
        for (auto& ar : want.arrows) {
            if (ar.from == v) ar.from = fresh[0];
            if (ar.to == v) ar.to = fresh[0];
        }
        if (!(back == want)) {
            res.detail = "contract after expand is not the identity at iteration " +
                         std::to_string(iter);
            return res;
        }
    }
    ValuedQuiver c;
    c.vertices = {"a"};
    c.arrows.push_back({"a", "a", 1, 1});
    for (int n = 1; n <= 4; ++n) {
        c = expand_quiver(c, c.vertices[0]);
        if (static_cast<int>(c.vertices.size()) != n + 1 ||
            static_cast<int>(c.arrows.size()) != n + 1) {
            res.detail = "loop expansion has the wrong size at step " + std::to_string(n);
            return res;
        }
        std::map<std::string, int> outd, ind;
        std::map<std::string, std::string> next;
        for (const auto& ar : c.arrows) {
            if (ar.s != 1 || ar.t != 1) {
                res.detail = "loop expansion produced a non-(1,1) arrow";
                return res;
            }
            ++outd[ar.from];
            ++ind[ar.to];
            next[ar.from] = ar.to;
        }
        std::set<std::string> seen;
        std::string cur = c.vertices[0];
        for (int t = 0; t <= n; ++t) {
            if (outd[cur] != 1 || ind[cur] != 1) {
                res.detail = "loop expansion is not a single cycle";
                return res;
            }
            seen.insert(cur);
            cur = next[cur];
        }
        if (cur != c.vertices[0] || static_cast<int>(seen.size()) != n + 1) {
            res.detail = "loop expansion walk does not close";
            return res;
        }
    }
    WPLSpec<Rat> start{{2, 3},
                       {RationalPoint<Rat>::finite(Rat(0)), RationalPoint<Rat>::finite(Rat(1))}};
    auto chain = expansion_chain(start);
    if (chain.size() != 4) {
        res.detail = "expansion chain on (2,3) has " + std::to_string(chain.size() - 1) +
                     " steps instead of 3";
        return res;
    }
    for (size_t t = 0; t + 1 < chain.size(); ++t) {
        int a = WPL<Rat>(chain[t]).k0_rank();
        int b = WPL<Rat>(chain[t + 1]).k0_rank();
        if (a - b != 1) {
            res.detail = "expansion chain step does not drop the rank by one";
            return res;
        }
    }
    res.pass = true;
    res.detail = "100 random quivers, loop towers, and the (2,3) chain check out";
    return res;
}

inline Result criterion10() {
    Result res{10, "pgl2-equivalence", false, ""};
    auto t0 = detail::Clock::now();
    constexpr uint32_t p = 5;
    Fp sample(0, p);
    std::vector<RationalPoint<Fp>> pts;
    for (uint32_t i = 0; i < p; ++i) pts.push_back(RationalPoint<Fp>::finite(Fp(i, p)));
    pts.push_back(RationalPoint<Fp>::infinity());
    std::vector<WeightFunction<Fp>> funcs;
    int npts = static_cast<int>(pts.size());
    for (int mask = 0; mask < (1 << npts); ++mask) {
        int cnt = std::popcount(static_cast<unsigned>(mask));
        if (cnt > 4) continue;
        std::vector<int> chosen;
        for (int i = 0; i < npts; ++i)
            if (mask & (1 << i)) chosen.push_back(i);
        for (int wmask = 0; wmask < (1 << cnt); ++wmask) {
            std::vector<std::pair<RationalPoint<Fp>, int>> entries;
            for (int i = 0; i < cnt; ++i)
                entries.emplace_back(pts[static_cast<size_t>(chosen[static_cast<size_t>(i)])],
                                     (wmask & (1 << i)) ? 3 : 2);
            funcs.push_back(WeightFunction<Fp>::make(std::move(entries)));
        }
    }
    std::vector<PGL2<Fp>> group;
    for (uint32_t b = 0; b < p; ++b)
        for (uint32_t c = 0; c < p; ++c)
            for (uint32_t d = 0; d < p; ++d) {
                Fp det = Fp(1, p) * Fp(d, p) - Fp(b, p) * Fp(c, p);
                if (!is_zero(det)) group.push_back(PGL2<Fp>::make(Fp(1, p), Fp(b, p), Fp(c, p), Fp(d, p)));
            }
    for (uint32_t c = 1; c < p; ++c)
        for (uint32_t d = 0; d < p; ++d)
            group.push_back(PGL2<Fp>::make(Fp(0, p), Fp(1, p), Fp(c, p), Fp(d, p)));
    if (group.size() != 120) {
        res.detail = "PGL2(F5) enumeration has " + std::to_string(group.size()) + " elements";
        return res;
    }
    long long agreed = 0;
    for (size_t i = 0; i < funcs.size(); ++i) {
        auto mi = funcs[i].weight_multiset();
        for (size_t j = 0; j < funcs.size(); ++j) {
            auto mine = weights_equivalent(funcs[i], funcs[j], sample);
            if (mi != funcs[j].weight_multiset()) {
                // a witness would carry marked points to marked points of the
                // same weight, so distinct multisets force inequivalence
                if (mine) {
                    res.detail = "witness produced across different weight multisets";
                    return res;
                }
                ++agreed;
                continue;
            }
            bool brute = false;
            for (const auto& s : group)
                if (sheafline::detail::witness_ok(funcs[i], funcs[j], s)) {
                    brute = true;
                    break;
                }
            if (mine.has_value() != brute) {
                res.detail = "disagrees with exhaustive search at pair (" + std::to_string(i) +
                             "," + std::to_string(j) + ")";
                return res;
            }
            if (mine && !sheafline::detail::witness_ok(funcs[i], funcs[j], *mine)) {
                res.detail = "returned witness fails verification";
                return res;
            }
            ++agreed;
        }
    }
    auto qw = [](std::vector<Rat> finite) {
        std::vector<std::pair<RationalPoint<Rat>, int>> e;
        for (const auto& x : finite) e.emplace_back(RationalPoint<Rat>::finite(x), 2);
        e.emplace_back(RationalPoint<Rat>::infinity(), 2);
        return WeightFunction<Rat>::make(std::move(e));
    };
    auto w1 = qw({Rat(0), Rat(1), Rat(2)});
    auto w2 = qw({Rat(0), Rat(1), Rat(1) / Rat(2)});
    auto w3 = qw({Rat(0), Rat(1), Rat(3)});
    if (!weights_equivalent(w1, w2)) {
        res.detail = "cross-ratio orbit pair over Q rejected";
        return res;
    }
    if (weights_equivalent(w1, w3)) {
        res.detail = "inequivalent quadruple over Q accepted";
        return res;
    }
    double el = detail::seconds_since(t0);
    if (el >= 30.0) {
        res.detail = "exceeded 30s budget: " + detail::fmt_secs(el);
        return res;
    }
    res.pass = true;
    res.detail = std::to_string(funcs.size()) + " weight functions, " + std::to_string(agreed) +
                 " pairs vs exhaustive search, in " + detail::fmt_secs(el);
    return res;
}

inline std::vector<Result> run_all() {
    std::vector<Result> out;
    auto add = [&](int id, const char* name, Result (*fn)()) {
        try {
            out.push_back(fn());
        } catch (const std::exception& e) {
            out.push_back({id, name, false, std::string("exception: ") + e.what()});
        }
    };
    add(1, "birkhoff-split-random", &criterion1);
    add(2, "tilt-untilt-roundtrip", &criterion2);
    add(3, "serre-duality-table", &criterion3);
    add(4, "squid-canonical-cartan", &criterion4);
    add(5, "line-to-simple-hom", &criterion5);
    add(6, "coxeter-transformation", &criterion6);
    add(7, "tilting-checks", &criterion7);
    add(8, "uniserial-and-tube-ext", &criterion8);
    add(9, "expand-contract", &criterion9);
    add(10, "pgl2-equivalence", &criterion10);
    return out;
}

} // namespace sheafline::selftest
