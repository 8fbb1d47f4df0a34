#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace sheafline {

struct ValuedArrow {
    std::string from, to;
    int s = 1, t = 1;
    friend bool operator==(const ValuedArrow& a, const ValuedArrow& b) {
        return a.from == b.from && a.to == b.to && a.s == b.s && a.t == b.t;
    }
};

struct ValuedQuiver {
    std::vector<std::string> vertices;
    std::vector<ValuedArrow> arrows;

    int vertex_index(const std::string& v) const {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == v) return static_cast<int>(i);
        return -1;
    }
    void validate() const {
        for (size_t i = 0; i < vertices.size(); ++i)
            for (size_t j = i + 1; j < vertices.size(); ++j)
                if (vertices[i] == vertices[j])
                    fail(error::kind::parse_error, "duplicate vertex name: " + vertices[i]);
        for (const auto& a : arrows) {
            if (vertex_index(a.from) < 0) fail(error::kind::vertex_not_found, a.from);
            if (vertex_index(a.to) < 0) fail(error::kind::vertex_not_found, a.to);
            if (a.s < 1 || a.t < 1)
                fail(error::kind::parse_error, "arrow valuation components must be >= 1");
        }
        for (size_t i = 0; i < arrows.size(); ++i)
            for (size_t j = i + 1; j < arrows.size(); ++j)
                if (arrows[i].from == arrows[j].from && arrows[i].to == arrows[j].to)
                    fail(error::kind::parse_error,
                         "parallel arrows are not allowed; merge them into the valuation");
    }
    friend bool operator==(const ValuedQuiver& a, const ValuedQuiver& b) {
        return a.vertices == b.vertices && a.arrows == b.arrows;
    }
};

// Every indecomposable of the associated length category is uniserial iff no
// vertex splits or merges composition series.
inline bool check_uniserial(const ValuedQuiver& q) {
    q.validate();
    for (const auto& v : q.vertices) {
        int in_s = 0, out_t = 0;
        for (const auto& a : q.arrows) {
            if (a.to == v) in_s += a.s;
            if (a.from == v) out_t += a.t;
        }
        if (in_s > 1 || out_t > 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Tubes: the length category of the cyclic (1,1)-quiver of rank p
// ---------------------------------------------------------------------------

struct TubeLabel {
    int p = 1; // rank
    int j = 0; // top simple, 0-based mod p
    int l = 1; // length

    static TubeLabel make(int p, int j, int l) {
        if (p < 1) fail(error::kind::parse_error, "tube rank must be >= 1");
        if (l < 1) fail(error::kind::parse_error, "tube length must be >= 1");
        TubeLabel t;
        t.p = p;
        t.j = ((j % p) + p) % p;
        t.l = l;
        return t;
    }
    friend bool operator==(const TubeLabel& a, const TubeLabel& b) {
        return a.p == b.p && a.j == b.j && a.l == b.l;
    }
    friend bool operator!=(const TubeLabel& a, const TubeLabel& b) { return !(a == b); }
};

inline TubeLabel tube_tau(const TubeLabel& a) { return TubeLabel::make(a.p, a.j + 1, a.l); }

namespace detail {

// canonical nilpotent representation of (j,l): basis vector e_t sits at vertex
// (j+t) mod p, the arrow v -> v+1 sends e_t to e_{t+1}
struct TubeRep {
    int p;
    std::vector<std::vector<int>> basis_at; // vertex -> list of t values, increasing
    std::vector<int> vertex_of;             // t -> vertex
    std::vector<int> pos_of;                // t -> position within its vertex list
};

inline TubeRep tube_rep(const TubeLabel& a) {
    TubeRep r;
    r.p = a.p;
    r.basis_at.assign(static_cast<size_t>(a.p), {});
    r.vertex_of.resize(static_cast<size_t>(a.l));
    r.pos_of.resize(static_cast<size_t>(a.l));
    for (int t = 0; t < a.l; ++t) {
        int v = (a.j + t) % a.p;
        r.vertex_of[static_cast<size_t>(t)] = v;
        r.pos_of[static_cast<size_t>(t)] = static_cast<int>(r.basis_at[static_cast<size_t>(v)].size());
        r.basis_at[static_cast<size_t>(v)].push_back(t);
    }
    return r;
}

} // namespace detail

// dim Hom((j,l), (j',l')) by solving the intertwiner equations of the
// canonical representations
inline int tube_hom(const TubeLabel& a, const TubeLabel& b) {
    if (a.p != b.p) fail(error::kind::rank_mismatch, "tube ranks differ");
    auto A = detail::tube_rep(a);
    auto B = detail::tube_rep(b);
    int p = a.p;

    // unknowns phi_v : A_v -> B_v
    std::vector<int> offset(static_cast<size_t>(p) + 1, 0);
    for (int v = 0; v < p; ++v)
        offset[static_cast<size_t>(v) + 1] =
            offset[static_cast<size_t>(v)] +
            static_cast<int>(A.basis_at[static_cast<size_t>(v)].size() *
                             B.basis_at[static_cast<size_t>(v)].size());
    int nvars = offset[static_cast<size_t>(p)];
    auto var = [&](int v, int brow, int acol) {
        return offset[static_cast<size_t>(v)] +
               brow * static_cast<int>(A.basis_at[static_cast<size_t>(v)].size()) + acol;
    };

    // phi_{v+1} A_alpha = B_alpha phi_v, one equation per (B-basis of v+1, A-basis of v)
    std::vector<std::vector<Rat>> rows;
    for (int v = 0; v < p; ++v) {
        int w = (v + 1) % p;
        int na_v = static_cast<int>(A.basis_at[static_cast<size_t>(v)].size());
        int nb_w = static_cast<int>(B.basis_at[static_cast<size_t>(w)].size());
        for (int bi = 0; bi < nb_w; ++bi)
            for (int ai = 0; ai < na_v; ++ai) {
                std::vector<Rat> row(static_cast<size_t>(nvars), Rat(0));
                int ta = A.basis_at[static_cast<size_t>(v)][static_cast<size_t>(ai)];
                // A_alpha e_{ta} = e_{ta+1} if it exists
                if (ta + 1 < static_cast<int>(A.vertex_of.size())) {
                    int apos = A.pos_of[static_cast<size_t>(ta) + 1];
                    row[static_cast<size_t>(var(w, bi, apos))] += Rat(1);
                }
                int tb = B.basis_at[static_cast<size_t>(w)][static_cast<size_t>(bi)];
                // (B_alpha phi_v) picks the phi_v entry mapping onto e_{tb}, i.e. from e_{tb-1}
                if (tb - 1 >= 0 && B.vertex_of[static_cast<size_t>(tb) - 1] == v) {
                    int bpos = B.pos_of[static_cast<size_t>(tb) - 1];
                    row[static_cast<size_t>(var(v, bpos, ai))] -= Rat(1);
                }
                bool any = false;
                for (const auto& x : row)
                    if (!is_zero(x)) { any = true; break; }
                if (any) rows.push_back(std::move(row));
            }
    }
    Mat<Rat> M(static_cast<int>(rows.size()), nvars);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < nvars; ++j) M.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return kernel_basis(M).cols;
}

inline int tube_ext(const TubeLabel& a, const TubeLabel& b) {
    if (a.p != b.p) fail(error::kind::rank_mismatch, "tube ranks differ");
    return tube_hom(b, tube_tau(a));
}

struct ArSequence {
    TubeLabel left;                 // tau of the end term
    std::vector<TubeLabel> middle;
    TubeLabel right;
};

inline ArSequence ar_sequence(const TubeLabel& a) {
    ArSequence s{tube_tau(a), {}, a};
    s.middle.push_back(TubeLabel::make(a.p, a.j, a.l + 1));
    if (a.l > 1) s.middle.push_back(TubeLabel::make(a.p, a.j + 1, a.l - 1));
    return s;
}

// ---------------------------------------------------------------------------
// Expansion and contraction of valued quivers
// ---------------------------------------------------------------------------

namespace detail {

inline std::string fresh_name(const ValuedQuiver& q, std::string base) {
    while (q.vertex_index(base) >= 0) base += "_";
    return base;
}

} // namespace detail

inline ValuedQuiver expand_quiver(const ValuedQuiver& q, const std::string& v) {
    q.validate();
    int vi = q.vertex_index(v);
    if (vi < 0) fail(error::kind::vertex_not_found, v);
    std::string vl = detail::fresh_name(q, v + "_l");
    ValuedQuiver probe = q;
    probe.vertices.push_back(vl);
    std::string vr = detail::fresh_name(probe, v + "_r");

    ValuedQuiver out;
    for (const auto& w : q.vertices) {
        if (w == v) {
            out.vertices.push_back(vl);
            out.vertices.push_back(vr);
        } else {
            out.vertices.push_back(w);
        }
    }
    for (const auto& a : q.arrows) {
        if (a.from == v && a.to == v) out.arrows.push_back({vr, vl, a.s, a.t});
        else if (a.to == v) out.arrows.push_back({a.from, vl, a.s, a.t});
        else if (a.from == v) out.arrows.push_back({vr, a.to, a.s, a.t});
        else out.arrows.push_back(a);
    }
    out.arrows.push_back({vl, vr, 1, 1});
    out.validate();
    return out;
}

inline ValuedQuiver contract_quiver(const ValuedQuiver& q, const std::string& from,
                                    const std::string& to) {
    q.validate();
    if (q.vertex_index(from) < 0) fail(error::kind::vertex_not_found, from);
    if (q.vertex_index(to) < 0) fail(error::kind::vertex_not_found, to);
    const ValuedArrow* arrow = nullptr;
    for (const auto& a : q.arrows)
        if (a.from == from && a.to == to) arrow = &a;
    if (!arrow) fail(error::kind::not_contractible, "no arrow between the given vertices");
    if (arrow->s != 1 || arrow->t != 1)
        fail(error::kind::not_contractible, "arrow valuation is not (1,1)");
    if (from == to) fail(error::kind::not_contractible, "cannot contract a loop");
    for (const auto& a : q.arrows) {
        if (&a == arrow) continue;
        if (a.from == from) fail(error::kind::not_contractible, "source has another outgoing arrow");
        if (a.to == to) fail(error::kind::not_contractible, "target has another incoming arrow");
    }

    ValuedQuiver out;
    for (const auto& w : q.vertices)
        if (w != to) out.vertices.push_back(w);
    for (const auto& a : q.arrows) {
        if (&a == arrow) continue;
        ValuedArrow b = a;
        if (b.from == to) b.from = from;
        if (b.to == to) b.to = from;
        out.arrows.push_back(b);
    }
    out.validate();
    return out;
}

} // namespace sheafline
