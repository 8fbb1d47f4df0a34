#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "json_io.hpp"

using namespace sheafline;
using sheafline::cli::json;

namespace {

struct FieldOpt {
    std::string name = "Q";
    uint32_t p = 0;
    CLI::Option* opt = nullptr;
    CLI::Option* popt = nullptr;
};

void attach_field(CLI::App* sub, FieldOpt& f) {
    f.opt = sub->add_option("--field", f.name, "base field, Q or Fp")
                ->check(CLI::IsMember({"Q", "Fp"}));
    f.popt = sub->add_option("--p", f.p, "prime modulus for --field Fp");
}

FieldTag resolve_field(const FieldOpt& f) {
    if (f.name == "Fp") {
        if (f.popt->count() == 0 || f.p < 2 || !sheafline::detail::is_prime_u64(f.p))
            fail(error::kind::parse_error, "--field Fp needs a prime --p");
        return FieldTag{f.p};
    }
    if (f.popt->count()) fail(error::kind::parse_error, "--p is only meaningful with --field Fp");
    return FieldTag{0};
}

FieldTag resolve_with_input(const FieldOpt& f, const json& j) {
    std::optional<FieldTag> file;
    if (j.is_object() && j.contains("field")) file = cli::parse_field_json(j.at("field"));
    if (f.opt->count() == 0) return file ? *file : resolve_field(f);
    FieldTag tag = resolve_field(f);
    if (file && !(tag == *file))
        fail(error::kind::mixed_fields, "--field disagrees with the field of the input file");
    return tag;
}

template <class F>
void with_field(FieldTag tag, F&& fn) {
    if (tag.rational())
        fn(Rat{}, tag);
    else
        fn(Fp(0, tag.p), tag);
}

const json& matrix_rows(const json& j) {
    if (j.is_object() && j.contains("rows")) return j.at("rows");
    if (j.is_array()) return j;
    fail(error::kind::parse_error, "matrix input needs a \"rows\" array");
}

template <class K>
Mat<LaurentPoly<K>> to_laurent(const Mat<Poly<K>>& m) {
    Mat<LaurentPoly<K>> out(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(i, j) = LaurentPoly<K>::from_poly(m.at(i, j));
    return out;
}

template <class K>
PathAlgebra<K> make_algebra(const std::string& which, const std::string& wcsv,
                            const std::string& pcsv, FieldTag tag) {
    if (which == "kronecker") {
        if (!wcsv.empty() || !pcsv.empty())
            fail(error::kind::parse_error, "the kronecker algebra takes no weight data");
        return kronecker_algebra<K>();
    }
    auto spec = parse_wpl_spec<K>(wcsv, pcsv, tag);
    if (which == "squid") return squid(spec.weights, spec.points);
    return canonical(spec.weights, spec.points);
}

std::vector<Int> parse_int_csv(const std::string& s) {
    std::vector<Int> out;
    for (const auto& t : split_csv(s)) out.emplace_back(sheafline::detail::parse_int(t));
    return out;
}

int g_exit = 0;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sheaves on the projective line and weighted projective lines"};
    app.set_version_flag("--version", "sheafline 1.0.0");
    app.require_subcommand(1);

    // split
    FieldOpt split_field;
    std::string split_in = "-";
    {
        auto* sub = app.add_subcommand("split", "Birkhoff splitting of a unimodular Laurent matrix");
        sub->add_option("--in", split_in, "matrix JSON file, - for stdin");
        attach_field(sub, split_field);
        sub->callback([&] {
            json j = cli::read_json_input(split_in);
            with_field(resolve_with_input(split_field, j), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                auto mu = cli::parse_laurent_rows<K>(matrix_rows(j), tag);
                auto s = birkhoff_split(mu);
                json o = json::object();
                o["type"] = s.type;
                o["U"] = cli::matrix_json(s.U, tag);
                o["D"] = cli::matrix_json(s.D, tag);
                o["V"] = cli::matrix_json(s.V, tag);
                cli::emit(o);
            });
        });
    }

    // smith
    FieldOpt smith_field;
    std::string smith_in = "-";
    {
        auto* sub = app.add_subcommand("smith", "Smith normal form over k[y] with transforms");
        sub->add_option("--in", smith_in, "matrix JSON file, - for stdin");
        attach_field(sub, smith_field);
        sub->callback([&] {
            json j = cli::read_json_input(smith_in);
            with_field(resolve_with_input(smith_field, j), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                auto m = cli::parse_poly_rows<K>(matrix_rows(j), tag, "y");
                auto s = smith_poly(m);
                json o = json::object();
                o["S"] = cli::matrix_json(to_laurent(s.S), tag);
                o["D"] = cli::matrix_json(to_laurent(s.D), tag);
                o["T"] = cli::matrix_json(to_laurent(s.T_), tag);
                cli::emit(o);
            });
        });
    }

    // decompose-torsion
    FieldOpt dt_field;
    std::string dt_in = "-";
    {
        auto* sub = app.add_subcommand("decompose-torsion",
                                       "decompose a torsion sheaf given by finite and infinity presentations");
        sub->add_option("--in", dt_in, "torsion JSON file, - for stdin");
        attach_field(sub, dt_field);
        sub->callback([&] {
            json j = cli::read_json_input(dt_in);
            with_field(resolve_with_input(dt_field, j), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                auto t = cli::parse_torsion_json<K>(j, tag);
                auto parts = torsion_decompose(t);
                json arr = json::array();
                for (const auto& [pt, r] : parts) {
                    json e = json::object();
                    e["point"] = point_str(pt);
                    e["r"] = r;
                    arr.push_back(std::move(e));
                }
                json o = json::object();
                o["summands"] = std::move(arr);
                cli::emit(o);
            });
        });
    }

    // hom / ext
    FieldOpt hom_field, ext_field;
    std::string hom_a, hom_b, ext_a, ext_b;
    std::string hom_w, hom_pts, ext_w, ext_pts;
    {
        auto* sub = app.add_subcommand("hom", "dimension of Hom between two sheaf labels");
        sub->add_option("from", hom_a, "source label")->required();
        sub->add_option("to", hom_b, "target label")->required();
        sub->add_option("--weights", hom_w, "weighted mode: weight csv");
        sub->add_option("--points", hom_pts, "weighted mode: point csv");
        attach_field(sub, hom_field);
        sub->callback([&] {
            with_field(resolve_field(hom_field), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                json o = json::object();
                if (hom_w.empty() && hom_pts.empty()) {
                    o["hom"] = hom_dim(parse_p1_label<K>(hom_a, tag), parse_p1_label<K>(hom_b, tag));
                } else {
                    WPL<K> x(parse_wpl_spec<K>(hom_w, hom_pts, tag));
                    o["hom"] = x.hom_ext(parse_wpl_label(hom_a, x, tag), parse_wpl_label(hom_b, x, tag)).first;
                }
                cli::emit(o);
            });
        });
    }
    {
        auto* sub = app.add_subcommand("ext", "dimension of Ext1 between two sheaf labels");
        sub->add_option("from", ext_a, "source label")->required();
        sub->add_option("to", ext_b, "target label")->required();
        sub->add_option("--weights", ext_w, "weighted mode: weight csv");
        sub->add_option("--points", ext_pts, "weighted mode: point csv");
        attach_field(sub, ext_field);
        sub->callback([&] {
            with_field(resolve_field(ext_field), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                json o = json::object();
                if (ext_w.empty() && ext_pts.empty()) {
                    o["ext"] = ext_dim(parse_p1_label<K>(ext_a, tag), parse_p1_label<K>(ext_b, tag));
                } else {
                    WPL<K> x(parse_wpl_spec<K>(ext_w, ext_pts, tag));
                    o["ext"] = x.hom_ext(parse_wpl_label(ext_a, x, tag), parse_wpl_label(ext_b, x, tag)).second;
                }
                cli::emit(o);
            });
        });
    }

    // tilt
    FieldOpt tilt_field;
    std::string tilt_label_arg, tilt_in;
    {
        auto* sub = app.add_subcommand("tilt", "Kronecker representation of a sheaf label or bundle");
        sub->add_option("label", tilt_label_arg, "sheaf label, e.g. LB(2) or Tor(y-1,2)");
        sub->add_option("--in", tilt_in, "gluing matrix JSON file, - for stdin");
        attach_field(sub, tilt_field);
        sub->callback([&] {
            if (tilt_label_arg.empty() == tilt_in.empty())
                fail(error::kind::parse_error, "tilt needs either a label or --in, not both");
            json j;
            FieldTag tag{};
            if (!tilt_in.empty()) {
                j = cli::read_json_input(tilt_in);
                tag = resolve_with_input(tilt_field, j);
            } else {
                tag = resolve_field(tilt_field);
            }
            with_field(tag, [&](auto zero, FieldTag tg) {
                using K = decltype(zero);
                KroneckerRep<K> rep;
                int shift = 0;
                if (!tilt_in.empty()) {
                    rep = tilt_bundle(cli::parse_laurent_rows<K>(matrix_rows(j), tg));
                } else {
                    auto [r, s] = tilt_label(parse_p1_label<K>(tilt_label_arg, tg));
                    rep = r;
                    shift = s;
                }
                json o = cli::rep_json(rep, tg);
                o["shift"] = shift;
                cli::emit(o);
            });
        });
    }

    // pencil-decompose
    FieldOpt pd_field;
    std::string pd_in = "-";
    {
        auto* sub = app.add_subcommand("pencil-decompose",
                                       "decompose a Kronecker representation into indecomposables");
        sub->add_option("--in", pd_in, "representation JSON file, - for stdin");
        attach_field(sub, pd_field);
        sub->callback([&] {
            json j = cli::read_json_input(pd_in);
            with_field(resolve_with_input(pd_field, j), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                auto rep = cli::parse_rep_json<K>(j, tag);
                json arr = json::array();
                for (const auto& l : pencil_decompose(rep)) arr.push_back(label_str(l));
                json o = json::object();
                o["summands"] = std::move(arr);
                cli::emit(o);
            });
        });
    }

    // cartan
    FieldOpt cart_field;
    std::string cart_alg = "kronecker", cart_w, cart_pts;
    {
        auto* sub = app.add_subcommand("cartan", "Cartan matrix of a finite dimensional algebra");
        sub->add_option("--algebra", cart_alg, "kronecker, squid or canonical")
            ->check(CLI::IsMember({"kronecker", "squid", "canonical"}));
        sub->add_option("--weights", cart_w, "weight csv for squid/canonical");
        sub->add_option("--points", cart_pts, "point csv for squid/canonical");
        attach_field(sub, cart_field);
        sub->callback([&] {
            with_field(resolve_field(cart_field), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                auto c = cartan(make_algebra<K>(cart_alg, cart_w, cart_pts, tag));
                json o = json::object();
                o["cartan"] = cli::int_rows_json(c);
                o["det"] = cli::scalar_json(Rat(det_int(c)));
                cli::emit(o);
            });
        });
    }

    // euler
    FieldOpt eul_field;
    std::string eul_alg = "kronecker", eul_w, eul_pts, eul_u, eul_v;
    {
        auto* sub = app.add_subcommand("euler", "Euler form of an algebra, or a single pairing");
        sub->add_option("--algebra", eul_alg, "kronecker, squid or canonical")
            ->check(CLI::IsMember({"kronecker", "squid", "canonical"}));
        sub->add_option("--weights", eul_w, "weight csv for squid/canonical");
        sub->add_option("--points", eul_pts, "point csv for squid/canonical");
        sub->add_option("--u", eul_u, "left class, integer csv");
        sub->add_option("--v", eul_v, "right class, integer csv");
        attach_field(sub, eul_field);
        sub->callback([&] {
            with_field(resolve_field(eul_field), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                auto g = euler_gram(make_algebra<K>(eul_alg, eul_w, eul_pts, tag));
                json o = json::object();
                if (eul_u.empty() && eul_v.empty()) {
                    o["gram"] = cli::int_rows_json(g);
                    o["det"] = cli::scalar_json(Rat(det_int(g)));
                } else {
                    auto u = parse_int_csv(eul_u);
                    auto v = parse_int_csv(eul_v);
                    if (static_cast<int>(u.size()) != g.rows || static_cast<int>(v.size()) != g.rows)
                        fail(error::kind::dimension_mismatch,
                             "--u and --v must have one entry per vertex");
                    Int s(0);
                    for (int i = 0; i < g.rows; ++i)
                        for (int k = 0; k < g.cols; ++k)
                            s += u[static_cast<size_t>(i)] * g.at(i, k) * v[static_cast<size_t>(k)];
                    o["euler"] = cli::scalar_json(Rat(s));
                }
                cli::emit(o);
            });
        });
    }

    // coxeter
    FieldOpt cox_field;
    std::string cox_alg = "kronecker", cox_w, cox_pts;
    {
        auto* sub = app.add_subcommand("coxeter", "Coxeter transformation of an algebra");
        sub->add_option("--algebra", cox_alg, "kronecker, squid or canonical")
            ->check(CLI::IsMember({"kronecker", "squid", "canonical"}));
        sub->add_option("--weights", cox_w, "weight csv for squid/canonical");
        sub->add_option("--points", cox_pts, "point csv for squid/canonical");
        attach_field(sub, cox_field);
        sub->callback([&] {
            with_field(resolve_field(cox_field), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                auto g = euler_gram(make_algebra<K>(cox_alg, cox_w, cox_pts, tag));
                json o = json::object();
                o["coxeter"] = cli::int_rows_json(to_int_matrix(coxeter(g)));
                cli::emit(o);
            });
        });
    }

    // k0
    FieldOpt k0_field;
    std::string k0_w, k0_pts;
    {
        auto* sub = app.add_subcommand("k0", "Grothendieck group data of a weighted projective line");
        sub->add_option("--weights", k0_w, "weight csv");
        sub->add_option("--points", k0_pts, "point csv");
        attach_field(sub, k0_field);
        sub->callback([&] {
            with_field(resolve_field(k0_field), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                WPL<K> x(parse_wpl_spec<K>(k0_w, k0_pts, tag));
                json basis = json::array();
                for (const auto& l : x.squid_basis()) basis.push_back(label_str(l));
                json o = json::object();
                o["rank"] = x.k0_rank();
                o["basis"] = std::move(basis);
                cli::emit(o);
            });
        });
    }

    // canonical-tilting / squid-tilting
    FieldOpt ct_field, st_field;
    std::string ct_w, ct_pts, st_w, st_pts;
    {
        auto* sub = app.add_subcommand("canonical-tilting",
                                       "line bundle labels of the canonical tilting bundle");
        sub->add_option("--weights", ct_w, "weight csv");
        sub->add_option("--points", ct_pts, "point csv");
        attach_field(sub, ct_field);
        sub->callback([&] {
            with_field(resolve_field(ct_field), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                WPL<K> x(parse_wpl_spec<K>(ct_w, ct_pts, tag));
                json arr = json::array();
                for (const auto& l : x.canonical_tilting()) arr.push_back(label_str(l));
                json o = json::object();
                o["labels"] = std::move(arr);
                cli::emit(o);
            });
        });
    }
    {
        auto* sub = app.add_subcommand("squid-tilting",
                                       "labels of the tilting object matching the squid algebra");
        sub->add_option("--weights", st_w, "weight csv");
        sub->add_option("--points", st_pts, "point csv");
        attach_field(sub, st_field);
        sub->callback([&] {
            with_field(resolve_field(st_field), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                WPL<K> x(parse_wpl_spec<K>(st_w, st_pts, tag));
                json arr = json::array();
                for (const auto& l : x.squid_basis()) arr.push_back(label_str(l));
                json o = json::object();
                o["labels"] = std::move(arr);
                cli::emit(o);
            });
        });
    }

    // is-tilting
    FieldOpt it_field;
    std::vector<std::string> it_labels;
    std::string it_w, it_pts;
    {
        auto* sub = app.add_subcommand("is-tilting", "check whether a set of labels is tilting");
        sub->add_option("labels", it_labels, "sheaf labels")->required();
        sub->add_option("--weights", it_w, "weighted mode: weight csv");
        sub->add_option("--points", it_pts, "weighted mode: point csv");
        attach_field(sub, it_field);
        sub->callback([&] {
            with_field(resolve_field(it_field), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                bool ans = false;
                if (it_w.empty() && it_pts.empty()) {
                    std::vector<P1Label<K>> ls;
                    for (const auto& s : it_labels) ls.push_back(parse_p1_label<K>(s, tag));
                    ans = is_tilting_p1(ls);
                } else {
                    WPL<K> x(parse_wpl_spec<K>(it_w, it_pts, tag));
                    std::vector<WPLLabel<K>> ls;
                    for (const auto& s : it_labels) ls.push_back(parse_wpl_label(s, x, tag));
                    ans = x.is_tilting(ls);
                }
                json o = json::object();
                o["tilting"] = ans;
                cli::emit(o);
            });
        });
    }

    // uniserial-check
    std::string uc_in = "-";
    {
        auto* sub = app.add_subcommand("uniserial-check",
                                       "check that all indecomposables of a valued quiver are uniserial");
        sub->add_option("--in", uc_in, "quiver JSON file, - for stdin");
        sub->callback([&] {
            json o = json::object();
            o["uniserial"] = check_uniserial(cli::parse_quiver_json(cli::read_json_input(uc_in)));
            cli::emit(o);
        });
    }

    // tube
    int tube_rank = 0;
    std::string tube_mode;
    std::vector<std::string> tube_args;
    {
        auto* sub = app.add_subcommand("tube", "calculus in a tube of given rank");
        sub->add_option("--rank", tube_rank, "tube rank p >= 1")->required();
        sub->add_option("mode", tube_mode, "hom, ext, tau or ar")->required();
        sub->add_option("labels", tube_args, "tube labels (j,l)");
        sub->callback([&] {
            if (tube_rank < 1) fail(error::kind::parse_error, "--rank must be >= 1");
            json o = json::object();
            if (tube_mode == "hom" || tube_mode == "ext") {
                if (tube_args.size() != 2)
                    fail(error::kind::parse_error, tube_mode + " needs two labels");
                TubeLabel a = parse_tube_label(tube_args[0], tube_rank);
                TubeLabel b = parse_tube_label(tube_args[1], tube_rank);
                o[tube_mode] = tube_mode == "hom" ? tube_hom(a, b) : tube_ext(a, b);
            } else if (tube_mode == "tau") {
                if (tube_args.size() != 1) fail(error::kind::parse_error, "tau needs one label");
                o["tau"] = label_str(tube_tau(parse_tube_label(tube_args[0], tube_rank)));
            } else if (tube_mode == "ar") {
                if (tube_args.size() != 1) fail(error::kind::parse_error, "ar needs one label");
                auto s = ar_sequence(parse_tube_label(tube_args[0], tube_rank));
                json mid = json::array();
                for (const auto& m : s.middle) mid.push_back(label_str(m));
                json inner = json::object();
                inner["left"] = label_str(s.left);
                inner["middle"] = std::move(mid);
                inner["right"] = label_str(s.right);
                o["ar"] = std::move(inner);
            } else {
                fail(error::kind::parse_error, "mode must be hom, ext, tau or ar");
            }
            cli::emit(o);
        });
    }

    // expand / contract
    std::string exp_in = "-", exp_vertex;
    {
        auto* sub = app.add_subcommand("expand", "expand a vertex of a valued quiver");
        sub->add_option("--in", exp_in, "quiver JSON file, - for stdin");
        sub->add_option("--vertex", exp_vertex, "vertex to expand")->required();
        sub->callback([&] {
            auto q = cli::parse_quiver_json(cli::read_json_input(exp_in));
            cli::emit(cli::quiver_json(expand_quiver(q, exp_vertex)));
        });
    }
    std::string con_in = "-", con_from, con_to;
    {
        auto* sub = app.add_subcommand("contract", "contract a (1,1) arrow of a valued quiver");
        sub->add_option("--in", con_in, "quiver JSON file, - for stdin");
        sub->add_option("--from", con_from, "arrow source")->required();
        sub->add_option("--to", con_to, "arrow target")->required();
        sub->callback([&] {
            auto q = cli::parse_quiver_json(cli::read_json_input(con_in));
            cli::emit(cli::quiver_json(contract_quiver(q, con_from, con_to)));
        });
    }

    // homogeneous
    FieldOpt hg_field;
    std::string hg_w, hg_pts;
    {
        auto* sub = app.add_subcommand("homogeneous",
                                       "check whether a weighted projective line is the projective line");
        sub->add_option("--weights", hg_w, "weight csv");
        sub->add_option("--points", hg_pts, "point csv");
        attach_field(sub, hg_field);
        sub->callback([&] {
            with_field(resolve_field(hg_field), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                WPL<K> x(parse_wpl_spec<K>(hg_w, hg_pts, tag));
                json o = json::object();
                o["homogeneous"] = x.is_homogeneous();
                cli::emit(o);
            });
        });
    }

    // expansion-chain
    FieldOpt ec_field;
    std::string ec_w, ec_pts;
    {
        auto* sub = app.add_subcommand("expansion-chain",
                                       "weight reduction chain down to the projective line");
        sub->add_option("--weights", ec_w, "weight csv");
        sub->add_option("--points", ec_pts, "point csv");
        attach_field(sub, ec_field);
        sub->callback([&] {
            with_field(resolve_field(ec_field), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                auto chain = expansion_chain(parse_wpl_spec<K>(ec_w, ec_pts, tag));
                json arr = json::array();
                for (const auto& s : chain) {
                    json e = json::object();
                    e["weights"] = s.weights;
                    json pts = json::array();
                    for (const auto& pt : s.points) pts.push_back(rational_point_str(pt));
                    e["points"] = std::move(pts);
                    arr.push_back(std::move(e));
                }
                json o = json::object();
                o["chain"] = std::move(arr);
                cli::emit(o);
            });
        });
    }

    // weights-equiv
    FieldOpt we_field;
    std::string we_a, we_b;
    {
        auto* sub = app.add_subcommand("weights-equiv",
                                       "decide PGL2-equivalence of two weight functions");
        sub->add_option("--a", we_a, "first weight function, point:weight csv")->required();
        sub->add_option("--b", we_b, "second weight function, point:weight csv")->required();
        attach_field(sub, we_field);
        sub->callback([&] {
            with_field(resolve_field(we_field), [&](auto zero, FieldTag tag) {
                using K = decltype(zero);
                auto wa = parse_weight_function<K>(we_a, tag);
                auto wb = parse_weight_function<K>(we_b, tag);
                auto sigma = weights_equivalent(wa, wb, zero);
                json o = json::object();
                o["equivalent"] = sigma.has_value();
                if (sigma) {
                    json m = json::array();
                    m.push_back(json::array({cli::scalar_json(bind_value(sigma->a, tag)),
                                             cli::scalar_json(bind_value(sigma->b, tag))}));
                    m.push_back(json::array({cli::scalar_json(bind_value(sigma->c, tag)),
                                             cli::scalar_json(bind_value(sigma->d, tag))}));
                    o["sigma"] = std::move(m);
                }
                cli::emit(o);
            });
        });
    }

    // selftest
    {
        auto* sub = app.add_subcommand("selftest", "run the embedded acceptance suite");
        sub->callback([&] {
            bool all = true;
            for (const auto& r : selftest::run_all()) {
                std::cout << "criterion " << r.id << " " << r.name << ": "
                          << (r.pass ? "pass" : "FAIL") << " (" << r.detail << ")\n";
                all = all && r.pass;
            }
            g_exit = all ? 0 : 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.which() == error::kind::unsupported_factorization ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return g_exit;
}
