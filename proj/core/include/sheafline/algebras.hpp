#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "smith.hpp"
#include "weights.hpp"

namespace sheafline {

// A finite quiver with monomial-combination relations. Paths are stored as
// arrow name sequences in traversal order (source first).
template <class K>
struct PathAlgebra {
    struct Arrow {
        std::string name, from, to;
    };
    struct Relation {
        std::vector<std::pair<K, std::vector<std::string>>> terms;
    };
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;

    int vertex_index(const std::string& v) const {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == v) return static_cast<int>(i);
        return -1;
    }
    const Arrow& arrow(const std::string& name) const {
        for (const auto& a : arrows)
            if (a.name == name) return a;
        fail(error::kind::internal_inconsistency, "unknown arrow " + name);
    }
};

template <class K>
PathAlgebra<K> kronecker_algebra() {
    PathAlgebra<K> a;
    a.vertices = {"L", "L'"};
    a.arrows = {{"b0", "L", "L'"}, {"b1", "L", "L'"}};
    return a;
}

namespace detail {

template <class K>
void check_weight_data(const std::vector<int>& p, const std::vector<RationalPoint<K>>& lambda) {
    if (p.size() != lambda.size())
        fail(error::kind::arity_mismatch, "weight and point lists have different lengths");
    for (int w : p)
        if (w < 2) fail(error::kind::weight_too_small, "weights must be >= 2");
    for (size_t i = 0; i < lambda.size(); ++i)
        for (size_t j = i + 1; j < lambda.size(); ++j)
            if (lambda[i] == lambda[j])
                fail(error::kind::duplicate_points, "weighted points must be distinct");
}

} // namespace detail

// Squid algebra: L => L' -> S_i^[p_i-1] -> ... -> S_i^[1], with the relation
// c_i (lambda_i0 b1 - lambda_i1 b0) = 0 for each arm.
template <class K>
PathAlgebra<K> squid(const std::vector<int>& p, const std::vector<RationalPoint<K>>& lambda) {
    detail::check_weight_data(p, lambda);
    PathAlgebra<K> a;
    a.vertices = {"L", "L'"};
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 1; j <= p[i] - 1; ++j)
            a.vertices.push_back("S" + std::to_string(i + 1) + "_" + std::to_string(j));
    a.arrows.push_back({"b0", "L", "L'"});
    a.arrows.push_back({"b1", "L", "L'"});
    for (size_t i = 0; i < p.size(); ++i) {
        std::string arm = std::to_string(i + 1);
        a.arrows.push_back({"c" + arm, "L'", "S" + arm + "_" + std::to_string(p[i] - 1)});
        for (int j = p[i] - 1; j >= 2; --j)
            a.arrows.push_back({"a" + arm + "_" + std::to_string(j), "S" + arm + "_" + std::to_string(j),
                                "S" + arm + "_" + std::to_string(j - 1)});
        auto [l0, l1] = lambda[i].coords();
        typename PathAlgebra<K>::Relation rel;
        rel.terms.push_back({l0, {"b1", "c" + arm}});
        rel.terms.push_back({-l1, {"b0", "c" + arm}});
        a.relations.push_back(std::move(rel));
    }
    return a;
}

// Canonical algebra: arms of length p_i from L to L', plus b0, b1 : L -> L',
// subject to (x_i arm path) = lambda_i0 b1 - lambda_i1 b0.
template <class K>
PathAlgebra<K> canonical(const std::vector<int>& p, const std::vector<RationalPoint<K>>& lambda) {
    detail::check_weight_data(p, lambda);
    PathAlgebra<K> a;
    a.vertices.push_back("L");
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 1; j <= p[i] - 1; ++j)
            a.vertices.push_back("X" + std::to_string(i + 1) + "_" + std::to_string(j));
    a.vertices.push_back("L'");
    a.arrows.push_back({"b0", "L", "L'"});
    a.arrows.push_back({"b1", "L", "L'"});
    for (size_t i = 0; i < p.size(); ++i) {
        std::string arm = std::to_string(i + 1);
        std::vector<std::string> chain;
        std::string prev = "L";
        for (int j = 1; j <= p[i]; ++j) {
            std::string next = j == p[i] ? "L'" : "X" + arm + "_" + std::to_string(j);
            std::string name = "x" + arm + "_" + std::to_string(j);
            a.arrows.push_back({name, prev, next});
            chain.push_back(name);
            prev = next;
        }
        auto [l0, l1] = lambda[i].coords();
        typename PathAlgebra<K>::Relation rel;
        rel.terms.push_back({K(1), std::move(chain)});
        rel.terms.push_back({-l0, {"b1"}});
        rel.terms.push_back({l1, {"b0"}});
        a.relations.push_back(std::move(rel));
    }
    return a;
}

namespace detail {

template <class K>
struct PathSpace {
    // paths grouped by (source, target); each path is an arrow name sequence
    std::map<std::pair<int, int>, std::vector<std::vector<std::string>>> paths;
    std::map<std::pair<int, int>, std::map<std::vector<std::string>, int>> index;

    void add(int s, int t, std::vector<std::string> p) {
        auto key = std::make_pair(s, t);
        index[key][p] = static_cast<int>(paths[key].size());
        paths[key].push_back(std::move(p));
    }
};

template <class K>
PathSpace<K> enumerate_paths(const PathAlgebra<K>& alg) {
    int n = static_cast<int>(alg.vertices.size());
    // acyclicity check via Kahn's algorithm on the arrow graph
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (const auto& ar : alg.arrows) ++indeg[static_cast<size_t>(alg.vertex_index(ar.to))];
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<size_t>(v)] == 0) queue.push_back(v);
    int seen = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        ++seen;
        for (const auto& ar : alg.arrows)
            if (alg.vertex_index(ar.from) == v)
                if (--indeg[static_cast<size_t>(alg.vertex_index(ar.to))] == 0)
                    queue.push_back(alg.vertex_index(ar.to));
    }
    if (seen != n) fail(error::kind::non_acyclic, "quiver has an oriented cycle");

    PathSpace<K> ps;
    for (int s = 0; s < n; ++s) {
        // BFS over paths starting at s
        std::vector<std::pair<int, std::vector<std::string>>> frontier{{s, {}}};
        ps.add(s, s, {});
        for (size_t fi = 0; fi < frontier.size(); ++fi) {
            auto [v, path] = frontier[fi];
            for (const auto& ar : alg.arrows) {
                if (alg.vertex_index(ar.from) != v) continue;
                auto ext = path;
                ext.push_back(ar.name);
                int t = alg.vertex_index(ar.to);
                ps.add(s, t, ext);
                frontier.emplace_back(t, std::move(ext));
            }
        }
    }
    return ps;
}

} // namespace detail

// Cartan matrix C[u][v] = dim of paths from u to v modulo the spread of the
// relations (all u * r * w with r a relation).
template <class K>
Mat<Int> cartan(const PathAlgebra<K>& alg) {
    int n = static_cast<int>(alg.vertices.size());
    auto ps = detail::enumerate_paths<K>(alg);

    // spread each relation by pre- and post-composition, grouped by endpoint pair
    std::map<std::pair<int, int>, std::vector<std::vector<K>>> spread;
    for (const auto& rel : alg.relations) {
        if (rel.terms.empty()) continue;
        const auto& first = rel.terms[0].second;
        int rs, rt;
        if (first.empty()) fail(error::kind::parse_error, "empty relation path");
        rs = alg.vertex_index(alg.arrow(first.front()).from);
        rt = alg.vertex_index(alg.arrow(first.back()).to);
        for (const auto& [coef, term] : rel.terms) {
            if (term.empty()) fail(error::kind::parse_error, "empty relation path");
            if (alg.vertex_index(alg.arrow(term.front()).from) != rs ||
                alg.vertex_index(alg.arrow(term.back()).to) != rt)
                fail(error::kind::parse_error, "relation terms are not parallel");
            (void)coef;
        }
        for (int a = 0; a < n; ++a) {
            auto pre_it = ps.paths.find({a, rs});
            if (pre_it == ps.paths.end()) continue;
            for (const auto& pre : pre_it->second)
                for (int b = 0; b < n; ++b) {
                    auto post_it = ps.paths.find({rt, b});
                    if (post_it == ps.paths.end()) continue;
                    for (const auto& post : post_it->second) {
                        std::vector<K> vec(ps.paths[{a, b}].size(), K(0));
                        for (const auto& [coef, term] : rel.terms) {
                            std::vector<std::string> whole = pre;
                            whole.insert(whole.end(), term.begin(), term.end());
                            whole.insert(whole.end(), post.begin(), post.end());
                            auto& idx = ps.index[{a, b}];
                            auto it = idx.find(whole);
                            if (it == idx.end())
                                fail(error::kind::internal_inconsistency, "spread path missing");
                            vec[static_cast<size_t>(it->second)] =
                                vec[static_cast<size_t>(it->second)] + coef;
                        }
                        spread[{a, b}].push_back(std::move(vec));
                    }
                }
        }
    }

    Mat<Int> c(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto it = ps.paths.find({a, b});
            int total = it == ps.paths.end() ? 0 : static_cast<int>(it->second.size());
            int rk = 0;
            auto sp = spread.find({a, b});
            if (sp != spread.end() && total > 0) {
                Mat<K> m(static_cast<int>(sp->second.size()), total);
                for (int i = 0; i < m.rows; ++i)
                    for (int j = 0; j < total; ++j)
                        m.at(i, j) = sp->second[static_cast<size_t>(i)][static_cast<size_t>(j)];
                rk = rank(m);
            }
            c.at(a, b) = total - rk;
        }
    return c;
}

template <class K>
Mat<Int> euler_gram(const PathAlgebra<K>& alg) {
    return cartan(alg);
}

inline bool check_H5(const Mat<Int>& gram) {
    Int d = det_int(gram);
    return d == 1 || d == -1;
}

// Coxeter transformation -G^{-1} G^T of a nondegenerate Gram matrix.
inline Mat<Rat> coxeter(const Mat<Int>& gram) {
    if (gram.rows != gram.cols) fail(error::kind::dimension_mismatch, "gram matrix must be square");
    if (det_int(gram) == 0) fail(error::kind::degenerate_form, "gram matrix is singular");
    Mat<Rat> g(gram.rows, gram.cols);
    for (int i = 0; i < gram.rows; ++i)
        for (int j = 0; j < gram.cols; ++j) g.at(i, j) = Rat(gram.at(i, j));
    Mat<Rat> inv = inverse(g);
    Mat<Rat> res = inv * transpose(g);
    for (auto& x : res.a) x = -x;
    return res;
}

inline Mat<Int> to_int_matrix(const Mat<Rat>& m) {
    Mat<Int> out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            const Rat& x = m.at(i, j);
            if (denominator(x) != 1)
                fail(error::kind::internal_inconsistency, "matrix entry is not an integer");
            out.at(i, j) = numerator(x);
        }
    return out;
}

// True iff ext_matrix vanishes and the classes span a full sublattice of
// index one in Z^n.
inline bool is_tilting_data(const Mat<Int>& gram, const Mat<Int>& ext_matrix,
                            const std::vector<std::vector<Int>>& classes, int n) {
    (void)gram;
    if (!ext_matrix.is_zero_matrix()) return false;
    Mat<Int> m(static_cast<int>(classes.size()), n);
    for (size_t i = 0; i < classes.size(); ++i) {
        if (static_cast<int>(classes[i].size()) != n)
            fail(error::kind::dimension_mismatch, "class vector has wrong length");
        for (int j = 0; j < n; ++j) m.at(static_cast<int>(i), j) = classes[i][static_cast<size_t>(j)];
    }
    auto d = smith_int_diagonal(m);
    int ones = 0;
    for (const auto& x : d)
        if (x == 1) ++ones;
        else if (x != 0) return false;
    return ones == n;
}

} // namespace sheafline
