#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "kronecker.hpp"
#include "lengthcat.hpp"
#include "p1.hpp"
#include "weights.hpp"
#include "wpl.hpp"

namespace sheafline {

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

inline Rat bind_value(const Rat& x, FieldTag) { return x; }
inline Fp bind_value(const Fp& x, FieldTag tag) { return x.p ? x : x.bound(tag.p); }

template <class K>
K parse_scalar(const std::string& s, FieldTag tag);

template <>
inline Rat parse_scalar<Rat>(const std::string& s, FieldTag) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) fail(error::kind::parse_error, "zero denominator in " + s);
        return Rat(num, den);
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        fail(error::kind::parse_error, "bad rational: " + s);
    }
}

template <>
inline Fp parse_scalar<Fp>(const std::string& s, FieldTag tag) {
    if (!tag.p) fail(error::kind::parse_error, "finite field scalar needs a modulus");
    size_t slash = s.find('/');
    auto part = [&](const std::string& t) {
        if (t.empty() || (t[0] != '-' && !std::isdigit(static_cast<unsigned char>(t[0]))))
            fail(error::kind::parse_error, "bad scalar: " + s);
        Int v;
        try {
            v = Int(t);
        } catch (const std::exception&) {
            fail(error::kind::parse_error, "bad scalar: " + s);
        }
        Int r = v % tag.p;
        if (r < 0) r += tag.p;
        return Fp(static_cast<long long>(r), tag.p);
    };
    if (slash == std::string::npos) return part(s);
    return part(s.substr(0, slash)) / part(s.substr(slash + 1));
}

// ---------------------------------------------------------------------------
// Polynomial grammar: terms in descending exponent order, e.g. "y^2-2*y+1",
// "2*y+y^-1", "0". A unit coefficient is elided unless the exponent is zero.
// ---------------------------------------------------------------------------

namespace detail {

inline void append_scalar_str(std::string& out, const std::string& s, bool first) {
    if (!first) {
        if (!s.empty() && s[0] == '-') {
            out += "-";
            out += s.substr(1);
        } else {
            out += "+";
            out += s;
        }
    } else {
        out += s;
    }
}

template <class K>
void append_term(std::string& out, const K& coeff, int exp, const std::string& var, bool first) {
    std::string cs = scalar_str(coeff);
    if (exp == 0) {
        append_scalar_str(out, cs, first);
        return;
    }
    std::string body;
    if (cs == "1") {
        body = "";
    } else if (cs == "-1") {
        body = "-";
    } else {
        body = cs + "*";
    }
    body += var;
    if (exp != 1) body += "^" + std::to_string(exp);
    append_scalar_str(out, body, first);
}

} // namespace detail

template <class K>
std::string laurent_str(const LaurentPoly<K>& f) {
    if (f.c.empty()) return "0";
    std::string out;
    bool first = true;
    for (int i = static_cast<int>(f.c.size()) - 1; i >= 0; --i) {
        const K& coeff = f.c[static_cast<size_t>(i)];
        if (is_zero(coeff)) continue;
        detail::append_term(out, coeff, f.val + i, f.var, first);
        first = false;
    }
    return first ? "0" : out;
}

template <class K>
std::string poly_str(const Poly<K>& f) {
    return laurent_str(LaurentPoly<K>::from_poly(f));
}

namespace detail {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

inline std::string read_number(Cursor& c) {
    c.skip_ws();
    std::string out;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) out += c.s[c.i++];
    if (c.i < c.s.size() && c.s[c.i] == '/') {
        std::string den;
        size_t save = c.i;
        ++c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) den += c.s[c.i++];
        if (den.empty()) c.i = save;
        else out += "/" + den;
    }
    return out;
}

} // namespace detail

template <class K>
LaurentPoly<K> parse_laurent(const std::string& s, const std::string& var, FieldTag tag) {
    detail::Cursor c{s};
    LaurentPoly<K> acc;
    acc.var = var;
    bool any = false;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            ++c.i;
        } else if (any) {
            fail(error::kind::parse_error, "expected + or - in: " + s);
        }
        std::string num = detail::read_number(c);
        bool have_var = false;
        c.skip_ws();
        if (c.i < c.s.size() && c.s[c.i] == '*') {
            ++c.i;
            c.skip_ws();
        }
        if (c.s.compare(c.i, var.size(), var) == 0) {
            have_var = true;
            c.i += var.size();
        }
        if (num.empty() && !have_var)
            fail(error::kind::parse_error, "expected term in: " + s);
        int exp = 0;
        if (have_var) {
            exp = 1;
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '^') {
                ++c.i;
                c.skip_ws();
                int esign = 1;
                if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) {
                    esign = c.s[c.i] == '-' ? -1 : 1;
                    ++c.i;
                }
                std::string digits;
                while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
                    digits += c.s[c.i++];
                if (digits.empty()) fail(error::kind::parse_error, "bad exponent in: " + s);
                if (digits.size() > 6) fail(error::kind::parse_error, "exponent too large in: " + s);
                exp = esign * std::stoi(digits);
            }
        }
        K coeff = num.empty() ? K(1) : parse_scalar<K>(num, tag);
        coeff = bind_value(coeff, tag);
        if (sign < 0) coeff = -coeff;
        LaurentPoly<K> term;
        term.var = var;
        term.val = exp;
        term.c = {coeff};
        term.normalize();
        acc = acc + term;
        any = true;
    }
    if (!any) fail(error::kind::parse_error, "empty polynomial");
    return acc;
}

template <class K>
Poly<K> parse_poly(const std::string& s, const std::string& var, FieldTag tag) {
    LaurentPoly<K> f = parse_laurent<K>(s, var, tag);
    if (f.c.size() && f.low() < 0)
        fail(error::kind::parse_error, "negative exponent in polynomial: " + s);
    return f.as_poly();
}

// ---------------------------------------------------------------------------
// Points and labels
// ---------------------------------------------------------------------------

template <class K>
std::string point_str(const ClosedPoint<K>& p) {
    return p.infinity ? "inf" : poly_str(p.f);
}

template <class K>
ClosedPoint<K> parse_point(const std::string& s, FieldTag tag) {
    if (s == "inf") return ClosedPoint<K>::inf();
    return ClosedPoint<K>::finite(parse_poly<K>(s, "y", tag));
}

template <class K>
std::string rational_point_str(const RationalPoint<K>& p) {
    return p.inf ? "inf" : scalar_str(p.lambda);
}

template <class K>
RationalPoint<K> parse_rational_point(const std::string& s, FieldTag tag) {
    if (s == "inf") return RationalPoint<K>::infinity();
    std::string t = s;
    bool neg = false;
    if (!t.empty() && t[0] == '-') {
        neg = true;
        t = t.substr(1);
    }
    K v = bind_value(parse_scalar<K>(t, tag), tag);
    if (neg) v = -v;
    return RationalPoint<K>::finite(v);
}

namespace detail {

inline std::pair<std::string, std::string> split_args(const std::string& s, const std::string& name) {
    if (s.size() < name.size() + 2 || s.compare(0, name.size(), name) != 0 ||
        s[name.size()] != '(' || s.back() != ')')
        fail(error::kind::parse_error, "bad label: " + s);
    std::string inner = s.substr(name.size() + 1, s.size() - name.size() - 2);
    size_t comma = inner.rfind(',');
    if (comma == std::string::npos) fail(error::kind::parse_error, "bad label arguments: " + s);
    return {inner.substr(0, comma), inner.substr(comma + 1)};
}

inline int parse_int(const std::string& s) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos != s.size()) fail(error::kind::parse_error, "bad integer: " + s);
        if (v > 1000000000ll || v < -1000000000ll)
            fail(error::kind::parse_error, "integer out of range: " + s);
        return static_cast<int>(v);
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        fail(error::kind::parse_error, "bad integer: " + s);
    }
}

} // namespace detail

template <class K>
std::string label_str(const P1Label<K>& l) {
    if (!l.torsion) return "LB(" + std::to_string(l.n) + ")";
    return "Tor(" + point_str(l.point) + "," + std::to_string(l.r) + ")";
}

template <class K>
P1Label<K> parse_p1_label(const std::string& s, FieldTag tag) {
    if (s.rfind("LB(", 0) == 0 && s.back() == ')')
        return P1Label<K>::lb(detail::parse_int(s.substr(3, s.size() - 4)));
    if (s.rfind("Tor(", 0) == 0) {
        auto [pt, r] = detail::split_args(s, "Tor");
        return P1Label<K>::tor(parse_point<K>(pt, tag), detail::parse_int(r));
    }
    fail(error::kind::parse_error, "bad label: " + s);
}

template <class K>
std::string label_str(const KroneckerLabel<K>& l) {
    switch (l.fam) {
    case KroneckerLabel<K>::family::preproj: return "Preproj(" + std::to_string(l.n) + ")";
    case KroneckerLabel<K>::family::preinj: return "Preinj(" + std::to_string(l.n) + ")";
    default: return "Regular(" + point_str(l.point) + "," + std::to_string(l.r) + ")";
    }
}

template <class K>
KroneckerLabel<K> parse_kronecker_label(const std::string& s, FieldTag tag) {
    if (s.rfind("Preproj(", 0) == 0 && s.back() == ')')
        return KroneckerLabel<K>::preproj(detail::parse_int(s.substr(8, s.size() - 9)));
    if (s.rfind("Preinj(", 0) == 0 && s.back() == ')')
        return KroneckerLabel<K>::preinj(detail::parse_int(s.substr(7, s.size() - 8)));
    if (s.rfind("Regular(", 0) == 0) {
        auto [pt, r] = detail::split_args(s, "Regular");
        return KroneckerLabel<K>::regular(parse_point<K>(pt, tag), detail::parse_int(r));
    }
    fail(error::kind::parse_error, "bad label: " + s);
}

inline std::string label_str(const TubeLabel& l) {
    return "(" + std::to_string(l.j) + "," + std::to_string(l.l) + ")";
}

inline TubeLabel parse_tube_label(const std::string& s, int rank) {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        fail(error::kind::parse_error, "bad tube label: " + s);
    std::string inner = s.substr(1, s.size() - 2);
    size_t comma = inner.find(',');
    if (comma == std::string::npos) fail(error::kind::parse_error, "bad tube label: " + s);
    return TubeLabel::make(rank, detail::parse_int(inner.substr(0, comma)),
                           detail::parse_int(inner.substr(comma + 1)));
}

inline std::string lelem_str(const LElem& x) {
    std::string out = std::to_string(x.l);
    if (!x.arm.empty()) {
        out += ";";
        for (size_t i = 0; i < x.arm.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(x.arm[i]);
        }
    }
    return out;
}

template <class K>
LElem parse_lelem(const std::string& s, const WPL<K>& wpl) {
    size_t semi = s.find(';');
    long long l = detail::parse_int(s.substr(0, semi == std::string::npos ? s.size() : semi));
    std::vector<long long> raw(static_cast<size_t>(wpl.arms()), 0);
    if (semi != std::string::npos) {
        std::string rest = s.substr(semi + 1);
        size_t pos = 0, idx = 0;
        while (pos <= rest.size()) {
            size_t comma = rest.find(',', pos);
            std::string piece = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
            if (idx >= raw.size()) fail(error::kind::arity_mismatch, "too many arm coordinates: " + s);
            raw[idx++] = detail::parse_int(piece);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (idx != raw.size()) fail(error::kind::arity_mismatch, "too few arm coordinates: " + s);
    }
    return wpl.normal_form(l, std::move(raw));
}

template <class K>
std::string label_str(const WPLLabel<K>& l) {
    switch (l.k) {
    case WPLLabel<K>::kind::lb: return "LB(" + lelem_str(l.x) + ")";
    case WPLLabel<K>::kind::tor_exceptional:
        return "TorE(" + std::to_string(l.arm) + "," + std::to_string(l.j) + "," +
               std::to_string(l.len) + ")";
    default: return "TorH(" + point_str(l.point) + "," + std::to_string(l.r) + ")";
    }
}

template <class K>
WPLLabel<K> parse_wpl_label(const std::string& s, const WPL<K>& wpl, FieldTag tag) {
    if (s.rfind("LB(", 0) == 0 && s.back() == ')')
        return WPLLabel<K>::lb(parse_lelem(s.substr(3, s.size() - 4), wpl));
    if (s.rfind("TorE(", 0) == 0 && s.back() == ')') {
        std::string inner = s.substr(5, s.size() - 6);
        size_t c1 = inner.find(',');
        size_t c2 = c1 == std::string::npos ? std::string::npos : inner.find(',', c1 + 1);
        if (c2 == std::string::npos) fail(error::kind::parse_error, "bad label: " + s);
        int arm = detail::parse_int(inner.substr(0, c1));
        int j = detail::parse_int(inner.substr(c1 + 1, c2 - c1 - 1));
        int len = detail::parse_int(inner.substr(c2 + 1));
        if (arm < 1 || arm > wpl.arms()) fail(error::kind::parse_error, "arm index out of range: " + s);
        if (j < 1 || j > wpl.weight(arm)) fail(error::kind::parse_error, "top simple out of range: " + s);
        return WPLLabel<K>::tor_e(arm, j, len);
    }
    if (s.rfind("TorH(", 0) == 0) {
        auto [pt, r] = detail::split_args(s, "TorH");
        auto point = parse_point<K>(pt, tag);
        if (!point.infinity && point.f.degree() == 1) {
            K root = -point.f.coeff(0);
            for (const auto& q : wpl.spec().points)
                if (!q.inf && q.lambda == root)
                    fail(error::kind::parse_error, "TorH point must avoid the weighted points");
        }
        if (point.infinity)
            for (const auto& q : wpl.spec().points)
                if (q.inf) fail(error::kind::parse_error, "TorH point must avoid the weighted points");
        return WPLLabel<K>::tor_h(point, detail::parse_int(r));
    }
    fail(error::kind::parse_error, "bad label: " + s);
}

// csv helpers shared by the CLI and tests
inline std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    size_t pos = 0;
    for (;;) {
        size_t comma = s.find(',', pos);
        out.push_back(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

template <class K>
WPLSpec<K> parse_wpl_spec(const std::string& weights, const std::string& points, FieldTag tag) {
    WPLSpec<K> spec;
    for (const auto& w : split_csv(weights)) spec.weights.push_back(detail::parse_int(w));
    for (const auto& p : split_csv(points)) spec.points.push_back(parse_rational_point<K>(p, tag));
    return spec;
}

template <class K>
WeightFunction<K> parse_weight_function(const std::string& s, FieldTag tag) {
    std::vector<std::pair<RationalPoint<K>, int>> entries;
    for (const auto& item : split_csv(s)) {
        size_t colon = item.rfind(':');
        if (colon == std::string::npos)
            fail(error::kind::parse_error, "expected point:weight in " + item);
        entries.emplace_back(parse_rational_point<K>(item.substr(0, colon), tag),
                             detail::parse_int(item.substr(colon + 1)));
    }
    return WeightFunction<K>::make(std::move(entries));
}

} // namespace sheafline
