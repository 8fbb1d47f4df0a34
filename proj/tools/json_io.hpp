#pragma once

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>
#include <sheafline/sheafline.hpp>

namespace sheafline::cli {

using json = nlohmann::ordered_json;

inline json field_json(const FieldTag& tag) {
    if (tag.rational()) return json("Q");
    json o = json::object();
    o["Fp"] = tag.p;
    return o;
}

inline FieldTag parse_field_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldTag{0};
        fail(error::kind::parse_error, "unknown field: " + j.get<std::string>());
    }
    if (j.is_object() && j.contains("Fp")) {
        const auto& v = j.at("Fp");
        if (!v.is_number_integer() && !v.is_number_unsigned())
            fail(error::kind::parse_error, "Fp modulus must be an integer");
        long long p = v.get<long long>();
        if (p < 2 || p > 0x7fffffffLL || !detail::is_prime_u64(static_cast<uint64_t>(p)))
            fail(error::kind::parse_error, "Fp modulus must be a prime");
        return FieldTag{static_cast<uint32_t>(p)};
    }
    fail(error::kind::parse_error, "field must be \"Q\" or {\"Fp\": p}");
}

inline json scalar_json(const Rat& a) {
    if (boost::multiprecision::denominator(a) == 1) {
        Int n = boost::multiprecision::numerator(a);
        static const Int bound = Int(1) << 53;
        if (n > -bound && n < bound) return json(n.convert_to<long long>());
    }
    return json(scalar_str(a));
}

inline json scalar_json(const Fp& a) { return json(a.v); }

template <class K>
K parse_scalar_json(const json& j, FieldTag tag) {
    if (j.is_number_integer() || j.is_number_unsigned())
        return bind_value(parse_scalar<K>(std::to_string(j.get<long long>()), tag), tag);
    if (j.is_string()) return bind_value(parse_scalar<K>(j.get<std::string>(), tag), tag);
    fail(error::kind::parse_error, "scalar entries must be integers or strings");
}

template <class K>
json laurent_rows_json(const Mat<LaurentPoly<K>>& m, FieldTag tag) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json r = json::array();
        for (int j = 0; j < m.cols; ++j) {
            LaurentPoly<K> e = m.at(i, j);
            for (auto& c : e.c) c = bind_value(c, tag);
            r.push_back(laurent_str(e));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

template <class K>
json matrix_json(const Mat<LaurentPoly<K>>& m, FieldTag tag) {
    json o = json::object();
    o["field"] = field_json(tag);
    o["rows"] = laurent_rows_json(m, tag);
    return o;
}

inline std::string cell_text(const json& c) {
    if (c.is_string()) return c.get<std::string>();
    if (c.is_number_integer() || c.is_number_unsigned()) return std::to_string(c.get<long long>());
    fail(error::kind::parse_error, "matrix entries must be strings or integers");
}

inline std::pair<int, int> rows_shape(const json& rows) {
    if (!rows.is_array()) fail(error::kind::parse_error, "\"rows\" must be an array of arrays");
    int r = static_cast<int>(rows.size());
    int c = 0;
    for (int i = 0; i < r; ++i) {
        if (!rows[static_cast<size_t>(i)].is_array())
            fail(error::kind::parse_error, "\"rows\" must be an array of arrays");
        int len = static_cast<int>(rows[static_cast<size_t>(i)].size());
        if (i == 0)
            c = len;
        else if (len != c)
            fail(error::kind::parse_error, "matrix rows have unequal lengths");
    }
    return {r, c};
}

template <class K>
Mat<LaurentPoly<K>> parse_laurent_rows(const json& rows, FieldTag tag, const std::string& var = "y") {
    auto [r, c] = rows_shape(rows);
    Mat<LaurentPoly<K>> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = parse_laurent<K>(
                cell_text(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]), var, tag);
    return m;
}

template <class K>
Mat<Poly<K>> parse_poly_rows(const json& rows, FieldTag tag, const std::string& var) {
    auto [r, c] = rows_shape(rows);
    Mat<Poly<K>> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = parse_poly<K>(
                cell_text(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]), var, tag);
    return m;
}

template <class K>
json poly_rows_json(const Mat<Poly<K>>& m, FieldTag tag) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json r = json::array();
        for (int j = 0; j < m.cols; ++j) {
            Poly<K> e = m.at(i, j);
            for (auto& c : e.c) c = bind_value(c, tag);
            r.push_back(poly_str(e));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

template <class K>
json torsion_json(const TorsionData<K>& t, FieldTag tag) {
    json o = json::object();
    o["field"] = field_json(tag);
    o["finite_part"] = poly_rows_json(t.finite_part, tag);
    o["infinity_part"] = poly_rows_json(t.infinity_part, tag);
    return o;
}

template <class K>
TorsionData<K> parse_torsion_json(const json& j, FieldTag tag) {
    if (!j.is_object() || !j.contains("finite_part") || !j.contains("infinity_part"))
        fail(error::kind::parse_error,
             "torsion input needs \"field\", \"finite_part\" and \"infinity_part\"");
    TorsionData<K> t;
    t.finite_part = parse_poly_rows<K>(j.at("finite_part"), tag, "y");
    t.infinity_part = parse_poly_rows<K>(j.at("infinity_part"), tag, "z");
    return t;
}

template <class K>
json scalar_rows_json(const Mat<K>& m, FieldTag tag) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json r = json::array();
        for (int j = 0; j < m.cols; ++j) r.push_back(scalar_json(bind_value(m.at(i, j), tag)));
        rows.push_back(std::move(r));
    }
    return rows;
}

template <class K>
Mat<K> parse_scalar_rows(const json& rows, FieldTag tag) {
    auto [r, c] = rows_shape(rows);
    Mat<K> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) =
                parse_scalar_json<K>(rows[static_cast<size_t>(i)][static_cast<size_t>(j)], tag);
    return m;
}

inline json int_rows_json(const Mat<Int>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json r = json::array();
        for (int j = 0; j < m.cols; ++j) r.push_back(scalar_json(Rat(m.at(i, j))));
        rows.push_back(std::move(r));
    }
    return rows;
}

template <class K>
json rep_json(const KroneckerRep<K>& rep, FieldTag tag) {
    json o = json::object();
    o["d1"] = rep.d1;
    o["d0"] = rep.d0;
    o["f0"] = scalar_rows_json(rep.f0, tag);
    o["f1"] = scalar_rows_json(rep.f1, tag);
    o["field"] = field_json(tag);
    return o;
}

template <class K>
KroneckerRep<K> parse_rep_json(const json& j, FieldTag tag) {
    if (!j.is_object() || !j.contains("d1") || !j.contains("d0") || !j.contains("f0") ||
        !j.contains("f1"))
        fail(error::kind::parse_error, "representation input needs d1, d0, f0, f1");
    if (!j.at("d1").is_number_integer() && !j.at("d1").is_number_unsigned())
        fail(error::kind::parse_error, "d1 must be an integer");
    if (!j.at("d0").is_number_integer() && !j.at("d0").is_number_unsigned())
        fail(error::kind::parse_error, "d0 must be an integer");
    int d1 = j.at("d1").get<int>();
    int d0 = j.at("d0").get<int>();
    if (d1 < 0 || d0 < 0) fail(error::kind::parse_error, "dimensions must be >= 0");
    return KroneckerRep<K>::make(d1, d0, parse_scalar_rows<K>(j.at("f0"), tag),
                                 parse_scalar_rows<K>(j.at("f1"), tag));
}

inline json quiver_json(const ValuedQuiver& q) {
    json o = json::object();
    o["vertices"] = q.vertices;
    json arrows = json::array();
    for (const auto& a : q.arrows) {
        json e = json::object();
        e["from"] = a.from;
        e["to"] = a.to;
        e["val"] = json::array({a.s, a.t});
        arrows.push_back(std::move(e));
    }
    o["arrows"] = std::move(arrows);
    return o;
}

inline ValuedQuiver parse_quiver_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        fail(error::kind::parse_error, "quiver input needs \"vertices\" and \"arrows\"");
    ValuedQuiver q;
    if (!j.at("vertices").is_array())
        fail(error::kind::parse_error, "\"vertices\" must be an array of names");
    for (const auto& v : j.at("vertices")) {
        if (!v.is_string()) fail(error::kind::parse_error, "vertex names must be strings");
        q.vertices.push_back(v.get<std::string>());
    }
    if (!j.at("arrows").is_array()) fail(error::kind::parse_error, "\"arrows\" must be an array");
    for (const auto& a : j.at("arrows")) {
        if (!a.is_object() || !a.contains("from") || !a.contains("to"))
            fail(error::kind::parse_error, "arrows need \"from\" and \"to\"");
        ValuedArrow e;
        e.from = a.at("from").get<std::string>();
        e.to = a.at("to").get<std::string>();
        if (a.contains("val")) {
            const auto& v = a.at("val");
            if (!v.is_array() || v.size() != 2)
                fail(error::kind::parse_error, "\"val\" must be a pair [s,t]");
            e.s = v[0].get<int>();
            e.t = v[1].get<int>();
        }
        q.arrows.push_back(std::move(e));
    }
    q.validate();
    return q;
}

inline json read_json_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) fail(error::kind::parse_error, "cannot open input file: " + path);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        fail(error::kind::parse_error, std::string("invalid JSON input: ") + e.what());
    }
}

inline void emit(const json& j) { std::cout << j.dump() << "\n"; }

} // namespace sheafline::cli
