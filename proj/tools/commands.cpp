#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qring/errors.hpp"
#include "qring/expr.hpp"
#include "qring/grading.hpp"
#include "qring/patterns.hpp"
#include "qring/qmatrix.hpp"
#include "qring/serialize.hpp"
#include "qring/strata.hpp"
#include "qring/twist.hpp"

namespace qring::cli {

namespace {

using Json = nlohmann::json;

struct AlgebraOpts {
    std::string preset = "affine";    // plane | affine | affine-multi | matrices
    int n = 2;
    std::string qmode = "generic";    // generic | multi | commutative
    std::string file;                 // presentation JSON path
    std::vector<std::string> params;  // extra formal parameters
};

void add_algebra_opts(CLI::App* cmd, AlgebraOpts& o, const std::string& default_preset) {
    o.preset = default_preset;
    cmd->add_option("--preset", o.preset,
                    "algebra preset: plane, affine, affine-multi, matrices")
        ->capture_default_str();
    cmd->add_option("-n,--size", o.n, "generator count / matrix size")
        ->capture_default_str();
    cmd->add_option("-q,--qmode", o.qmode,
                    "parameter mode: generic, multi, commutative")
        ->capture_default_str();
    cmd->add_option("--algebra-file", o.file,
                    "load the algebra from a presentation JSON file");
    cmd->add_option("--params", o.params,
                    "extra formal parameter names (comma-separated)")
        ->delimiter(',')
        ->allow_extra_args(false);
}

void append_env_params(std::vector<std::string>& params) {
    const char* env = std::getenv("QRING_PARAMS");
    if (!env) return;
    std::string item;
    std::istringstream is(env);
    while (std::getline(is, item, ',')) {
        if (!item.empty() &&
            std::find(params.begin(), params.end(), item) == params.end()) {
            params.push_back(item);
        }
    }
}

CommutationSpec build_commutation(const AlgebraOpts& o) {
    std::vector<std::string> extras = o.params;
    append_env_params(extras);
    if (o.qmode == "generic" || o.qmode == "single") {
        std::vector<std::string> names = {"q"};
        for (const auto& p : extras) names.push_back(p);
        return CommutationSpec::single_parameter(o.n, make_param_space(names), "q");
    }
    if (o.qmode == "multi") {
        if (!extras.empty()) {
            throw Error("extra parameters are not supported with -q multi");
        }
        return CommutationSpec::multiparameter(o.n);
    }
    if (o.qmode == "commutative") {
        return CommutationSpec::commutative(o.n, make_param_space(extras));
    }
    throw Error("unknown parameter mode '" + o.qmode +
                "' (use generic, multi, or commutative)");
}

PresentationPtr build_algebra(const AlgebraOpts& o) {
    if (!o.file.empty()) {
        std::ifstream in(o.file);
        if (!in) throw Error("cannot open algebra file '" + o.file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return presentation_from_json(buf.str());
    }
    if (o.preset == "plane") {
        return preset_quantum_plane();
    }
    if (o.preset == "affine") {
        return preset_quantum_affine(build_commutation(o));
    }
    if (o.preset == "affine-multi") {
        AlgebraOpts multi = o;
        multi.qmode = "multi";
        return preset_quantum_affine(build_commutation(multi));
    }
    if (o.preset == "matrices") {
        if (!o.params.empty()) {
            throw Error("extra parameters are not supported with --preset matrices");
        }
        return preset_quantum_matrices(o.n);
    }
    throw Error("unknown preset '" + o.preset +
                "' (use plane, affine, affine-multi, or matrices)");
}

PresentationPtr require_matrices(const PresentationPtr& p) {
    if (p->kind() != AlgebraKind::QuantumMatrices) {
        throw Error("this command needs a quantum matrix algebra (--preset matrices)");
    }
    return p;
}

GradingSpec build_grading(const std::string& name, const PresentationPtr& p) {
    if (name == "presentation") return GradingSpec::from_presentation(p);
    if (name == "affine") return GradingSpec::affine(static_cast<int>(p->num_gens()));
    if (name == "matrix") {
        require_matrices(p);
        return GradingSpec::matrix(p->n());
    }
    if (name == "sl2-style") {
        require_matrices(p);
        return GradingSpec::sl2_style(p->n());
    }
    throw Error("unknown grading preset '" + name +
                "' (use presentation, affine, matrix, or sl2-style)");
}

struct Emitter {
    std::ostream& out;
    const bool& json;

    void result(const std::string& command, const std::string& text) const {
        if (json) {
            Json j;
            j["command"] = command;
            j["result"] = text;
            out << j.dump(2) << "\n";
        } else {
            out << text << "\n";
        }
    }

    void boolean(const std::string& command, bool value) const {
        if (json) {
            Json j;
            j["command"] = command;
            j["result"] = value;
            out << j.dump(2) << "\n";
        } else {
            out << (value ? "true" : "false") << "\n";
        }
    }

    void report(const Json& j) const { out << j.dump(2) << "\n"; }
};

NcPoly eval_text(const std::string& text, const PresentationPtr& pres) {
    return eval_in(parse_expression(text), pres);
}

std::string cells_str(const GridPattern& p) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [i, j] : p.cells()) {
        if (!first) os << ",";
        first = false;
        os << "(" << i << "," << j << ")";
    }
    os << "}";
    return os.str();
}

Json pattern_json(const GridPattern& p) {
    Json cells = Json::array();
    for (const auto& [i, j] : p.cells()) cells.push_back({i, j});
    return Json{{"cells", cells}};
}

Json basis_json(const std::vector<LatticeRow>& basis) {
    Json rows = Json::array();
    for (const auto& r : basis) rows.push_back(r);
    return rows;
}

std::string shape_name(IdealShape s) {
    switch (s) {
        case IdealShape::Augmentation: return "augmentation";
        case IdealShape::AxisPoint: return "axis-point";
        case IdealShape::CoordinatePrime: return "coordinate-prime";
        case IdealShape::BinomialPrime: return "binomial-prime";
    }
    return "unknown";
}

// The quotient-map / fibre parameter space: p with q = p^2, the three point
// coordinates, and any extra formal names.
QuotientMap3 build_quotient_map(const std::vector<std::string>& extra) {
    std::vector<std::string> names = {"p", "l1", "l2", "l3"};
    std::vector<std::string> extras = extra;
    append_env_params(extras);
    for (const auto& e : extras) {
        if (std::find(names.begin(), names.end(), e) == names.end()) {
            names.push_back(e);
        }
    }
    return QuotientMap3(make_param_space_with_root(names, "q", "p"));
}

QuotientPoint parse_point(const std::vector<std::string>& coords,
                          const ParamSpacePtr& space) {
    QuotientPoint pt;
    for (int i = 0; i < 3; ++i) {
        pt[i] = eval_scalar(parse_expression(coords[i]), space);
    }
    return pt;
}

std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse";
    if (dynamic_cast<const ClosureError*>(&e)) return "closure";
    if (dynamic_cast<const PresentationError*>(&e)) return "presentation";
    if (dynamic_cast<const NonUnitError*>(&e)) return "non-unit";
    if (dynamic_cast<const MismatchError*>(&e)) return "mismatch";
    if (dynamic_cast<const Error*>(&e)) return "error";
    return "internal";
}

// Known (sub)command names, used to splice config-file defaults into the
// argument list right after the command they apply to.
bool is_command_name(const std::string& s) {
    static const std::vector<std::string> names = {
        "nf", "mul", "qdet", "qminor", "central", "delta", "mu-star",
        "weight", "homog", "stable", "center", "strata", "patterns",
        "twist", "quotient-map", "fibre", "export",
        "enumerate", "verify", "counts"};
    return std::find(names.begin(), names.end(), s) != names.end();
}

bool has_flag(const std::vector<std::string>& args, const std::string& name) {
    for (const auto& a : args) {
        if (a == name || a.rfind(name + "=", 0) == 0) return true;
    }
    return false;
}

// Loads --config <file> (JSON) and splices its settings, lowest precedence,
// after the last subcommand token. Explicit flags win.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) throw Error("--config needs a file path");
            path = args[i + 1];
            args.erase(args.begin() + i, args.begin() + i + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + i);
            break;
        }
    }
    if (path.empty()) return args;

    std::ifstream in(path);
    if (!in) throw Error("cannot open config file '" + path + "'");
    Json cfg;
    try {
        cfg = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(std::string("config file is not valid JSON: ") + e.what());
    }

    std::size_t insert_at = 0;
    while (insert_at < args.size() && is_command_name(args[insert_at])) ++insert_at;

    std::vector<std::string> extra;
    auto add = [&](const std::vector<std::string>& spellings, const std::string& value) {
        for (const auto& s : spellings) {
            if (has_flag(args, s)) return;
        }
        extra.push_back(spellings.front());
        extra.push_back(value);
    };
    if (cfg.contains("preset")) add({"--preset"}, cfg["preset"].get<std::string>());
    if (cfg.contains("n")) add({"-n", "--size"}, std::to_string(cfg["n"].get<int>()));
    if (cfg.contains("qmode")) add({"--qmode", "-q"}, cfg["qmode"].get<std::string>());
    if (cfg.contains("algebra_file")) {
        add({"--algebra-file"}, cfg["algebra_file"].get<std::string>());
    }
    if (cfg.contains("grading")) add({"--grading"}, cfg["grading"].get<std::string>());
    if (cfg.contains("params")) {
        std::string csv;
        for (const auto& p : cfg["params"]) {
            if (!csv.empty()) csv += ",";
            csv += p.get<std::string>();
        }
        add({"--params"}, csv);
    }
    if (cfg.value("json", false) && !has_flag(args, "--json")) {
        extra.push_back("--json");
    }
    args.insert(args.begin() + insert_at, extra.begin(), extra.end());
    return args;
}

}  // namespace

int run_command(const std::vector<std::string>& argv_in, std::ostream& out,
                std::ostream& err) {
    bool json = false;
    Emitter em{out, json};

    CLI::App app{"qring: an exact workbench for quantized coordinate rings", "qring"};
    app.require_subcommand(1);
    app.add_flag("--json", json, "machine-readable JSON output");

    // nf / mul -------------------------------------------------------------
    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->fallthrough();
    AlgebraOpts nf_alg;
    std::string nf_expr;
    add_algebra_opts(nf, nf_alg, "affine");
    nf->add_option("expr", nf_expr, "expression to straighten")->required();
    nf->callback([&] { em.result("nf", eval_text(nf_expr, build_algebra(nf_alg)).str()); });

    auto* mul = app.add_subcommand("mul", "product of two expressions, straightened");
    mul->fallthrough();
    AlgebraOpts mul_alg;
    std::vector<std::string> mul_exprs;
    add_algebra_opts(mul, mul_alg, "affine");
    // allow_extra_args(false) stops CLI11 from exploding "[1,2|1,2]" minor
    // brackets as bracketed-list syntax; fixed-count positionals do not need it.
    mul->add_option("exprs", mul_exprs, "two expressions")
        ->required()
        ->expected(2)
        ->allow_extra_args(false);
    mul->callback([&] {
        auto a = build_algebra(mul_alg);
        em.result("mul", (eval_text(mul_exprs[0], a) * eval_text(mul_exprs[1], a)).str());
    });

    // quantum matrix operations ---------------------------------------------
    auto* det = app.add_subcommand("qdet", "quantum determinant");
    det->fallthrough();
    AlgebraOpts det_alg;
    add_algebra_opts(det, det_alg, "matrices");
    det->callback([&] {
        em.result("qdet", qdet(require_matrices(build_algebra(det_alg))).str());
    });

    auto* minor = app.add_subcommand("qminor", "quantum minor [i1,..|j1,..]");
    minor->fallthrough();
    AlgebraOpts minor_alg;
    std::string minor_expr;
    add_algebra_opts(minor, minor_alg, "matrices");
    minor->add_option("minor", minor_expr, "minor bracket, e.g. \"[1,2|1,3]\"")
        ->required();
    minor->callback([&] {
        em.result("qminor",
                  eval_text(minor_expr, require_matrices(build_algebra(minor_alg))).str());
    });

    auto* central = app.add_subcommand("central", "does the element commute with "
                                                  "every generator?");
    central->fallthrough();
    AlgebraOpts central_alg;
    std::string central_expr;
    add_algebra_opts(central, central_alg, "matrices");
    central->add_option("expr", central_expr)->required();
    central->callback([&] {
        em.boolean("central",
                   is_central(eval_text(central_expr, build_algebra(central_alg))));
    });

    auto* del = app.add_subcommand("delta", "comultiplication into the tensor square");
    del->fallthrough();
    AlgebraOpts del_alg;
    std::string del_expr;
    add_algebra_opts(del, del_alg, "matrices");
    del->add_option("expr", del_expr)->required();
    del->callback([&] {
        em.result("delta",
                  delta(eval_text(del_expr, require_matrices(build_algebra(del_alg)))).str());
    });

    auto* mu = app.add_subcommand("mu-star", "tensor-square quotient map at level t");
    mu->fallthrough();
    AlgebraOpts mu_alg;
    std::string mu_expr;
    int mu_t = 1;
    add_algebra_opts(mu, mu_alg, "matrices");
    mu->add_option("-t,--level", mu_t, "level t in 1..n")->required();
    mu->add_option("expr", mu_expr)->required();
    mu->callback([&] {
        em.result("mu-star",
                  mu_q_star(eval_text(mu_expr, require_matrices(build_algebra(mu_alg))),
                            mu_t)
                      .str());
    });

    // gradings ---------------------------------------------------------------
    auto* wt = app.add_subcommand("weight", "torus weight of a homogeneous element");
    wt->fallthrough();
    AlgebraOpts wt_alg;
    std::string wt_expr, wt_grading = "presentation";
    add_algebra_opts(wt, wt_alg, "affine");
    wt->add_option("--grading", wt_grading, "grading preset")->capture_default_str();
    wt->add_option("expr", wt_expr)->required();
    wt->callback([&] {
        auto a = build_algebra(wt_alg);
        auto g = build_grading(wt_grading, a);
        auto w = is_homogeneous(eval_text(wt_expr, a), g);
        if (!w) throw Error("element is not homogeneous");
        em.result("weight", Json(*w).dump());
    });

    auto* hm = app.add_subcommand("homog", "is the element homogeneous?");
    hm->fallthrough();
    AlgebraOpts hm_alg;
    std::string hm_expr, hm_grading = "presentation";
    add_algebra_opts(hm, hm_alg, "affine");
    hm->add_option("--grading", hm_grading, "grading preset")->capture_default_str();
    hm->add_option("expr", hm_expr)->required();
    hm->callback([&] {
        auto a = build_algebra(hm_alg);
        auto g = build_grading(hm_grading, a);
        auto w = is_homogeneous(eval_text(hm_expr, a), g);
        if (json) {
            Json j{{"command", "homog"}, {"homogeneous", w.has_value()}};
            if (w) j["weight"] = *w;
            em.report(j);
        } else if (w) {
            out << "homogeneous " << Json(*w).dump() << "\n";
        } else {
            out << "not homogeneous\n";
        }
    });

    auto* st = app.add_subcommand("stable", "are all listed ideal generators "
                                            "homogeneous?");
    st->fallthrough();
    AlgebraOpts st_alg;
    std::string st_list;
    std::string st_grading = "presentation";
    add_algebra_opts(st, st_alg, "affine");
    st->add_option("--grading", st_grading, "grading preset")->capture_default_str();
    st->add_option("exprs", st_list, "ideal generators separated by ';'")->required();
    st->callback([&] {
        auto a = build_algebra(st_alg);
        auto g = build_grading(st_grading, a);
        std::vector<NcPoly> gens;
        std::istringstream is(st_list);
        std::string piece;
        while (std::getline(is, piece, ';')) {
            if (piece.find_first_not_of(" \t") == std::string::npos) continue;
            gens.push_back(eval_text(piece, a));
        }
        if (gens.empty()) throw Error("no ideal generators given");
        em.boolean("stable", h_stable_by_generators(gens, g));
    });

    // quantum torus centers ----------------------------------------------------
    auto* ce = app.add_subcommand("center", "center lattice of the quantum torus");
    ce->fallthrough();
    AlgebraOpts ce_alg;
    add_algebra_opts(ce, ce_alg, "affine");
    ce->callback([&] {
        auto basis = center_lattice(build_commutation(ce_alg));
        em.report(Json{{"command", "center"},
                       {"n", ce_alg.n},
                       {"rank", basis.size()},
                       {"basis", basis_json(basis)}});
    });

    auto* sa = app.add_subcommand("strata", "stratum report over all generator "
                                            "subsets");
    sa->fallthrough();
    AlgebraOpts sa_alg;
    add_algebra_opts(sa, sa_alg, "affine");
    sa->callback([&] {
        Json rows = Json::array();
        for (const auto& r : strata_report(build_commutation(sa_alg))) {
            rows.push_back({{"w", r.w},
                            {"torus_rank", r.torus_rank},
                            {"center_rank", r.center_rank},
                            {"basis", basis_json(r.center_basis)}});
        }
        em.report(Json{{"command", "strata"}, {"n", sa_alg.n}, {"strata", rows}});
    });

    // pattern combinatorics -----------------------------------------------------
    auto* pat = app.add_subcommand("patterns", "torus-stable generator patterns");
    pat->fallthrough();
    pat->require_subcommand(1);
    int pat_n = 2;
    bool pat_ascii = false;

    auto* pen = pat->add_subcommand("enumerate", "all closure-condition patterns");
    pen->fallthrough();
    pen->add_option("-n,--size", pat_n)->capture_default_str();
    pen->add_flag("--ascii", pat_ascii, "render bullet grids");
    pen->callback([&] {
        auto pats = enumerate_star(pat_n);
        if (json) {
            Json arr = Json::array();
            for (const auto& p : pats) arr.push_back(pattern_json(p));
            em.report(Json{{"command", "patterns.enumerate"},
                           {"n", pat_n},
                           {"count", pats.size()},
                           {"patterns", arr}});
            return;
        }
        out << pats.size() << " patterns\n";
        for (const auto& p : pats) {
            out << cells_str(p) << "\n";
            if (pat_ascii) out << p.ascii();
        }
    });

    auto* pve = pat->add_subcommand("verify", "compare enumeration with the "
                                              "(I,J,f,g) parametrization");
    pve->fallthrough();
    pve->add_option("-n,--size", pat_n)->capture_default_str();
    pve->callback([&] {
        auto rep = verify_parametrization(pat_n);
        if (json) {
            em.report(Json{{"command", "patterns.verify"},
                           {"n", rep.n},
                           {"star_count", rep.star_count},
                           {"image_count", rep.image_count},
                           {"equal", rep.equal}});
            return;
        }
        out << (rep.equal ? "equal" : "DIFFERENT") << ": closure patterns "
            << rep.star_count << ", parametrized images " << rep.image_count << "\n";
    });

    auto* pco = pat->add_subcommand("counts", "computed and recorded pattern counts");
    pco->fallthrough();
    pco->add_option("-n,--size", pat_n)->capture_default_str();
    pco->callback([&] {
        auto rk = rank_le1_count(pat_n);
        Json j{{"command", "patterns.counts"},
               {"n", pat_n},
               {"rank_le1",
                {{"count", rk.count},
                 {"formula", rk.formula},
                 {"matches_formula", rk.matches_formula},
                 {"note", rk.note}}}};
        if (pat_n <= 5) {
            j["star_count_computed"] = enumerate_star(pat_n).size();
        }
        Json rec = Json::array();
        for (const auto& c : catalog_data()) {
            rec.push_back({{"n", c.n},
                           {"description", c.description},
                           {"values", c.values},
                           {"source", c.source}});
        }
        j["recorded"] = rec;
        if (json) {
            em.report(j);
            return;
        }
        if (j.contains("star_count_computed")) {
            out << "closure patterns (computed): "
                << j["star_count_computed"].get<std::size_t>() << "\n";
        }
        out << "rank<=1 ideals (computed): " << rk.count
            << (rk.matches_formula ? " = " : " != ") << "(2^" << pat_n << "-1)^2+1\n";
        for (const auto& c : catalog_data()) {
            out << "recorded n=" << c.n << " (" << c.description << "):";
            for (long long v : c.values) out << " " << v;
            out << "\n";
        }
    });

    // cocycle twists ------------------------------------------------------------
    auto* tw = app.add_subcommand("twist", "twisted product of two elements of the "
                                           "commutative basis");
    tw->fallthrough();
    AlgebraOpts tw_alg;
    std::vector<std::string> tw_exprs;
    add_algebra_opts(tw, tw_alg, "affine");
    tw->add_option("exprs", tw_exprs, "two expressions")
        ->required()
        ->expected(2)
        ->allow_extra_args(false);
    tw->callback([&] {
        if (tw_alg.preset != "affine" && tw_alg.preset != "affine-multi") {
            throw Error("twist needs a quantum affine preset");
        }
        auto comm = build_commutation(tw_alg);
        auto algebra = preset_quantum_affine(comm);
        auto twisted = TwistedAlgebra::polynomial_ring(standard_cocycle(comm));
        CommElem a = phi_c(eval_text(tw_exprs[0], algebra), twisted);
        CommElem b = phi_c(eval_text(tw_exprs[1], algebra), twisted);
        em.result("twist", twist_product(a, b, twisted).str());
    });

    auto* qm = app.add_subcommand("quotient-map", "image ideal of a point of "
                                                  "3-space");
    qm->fallthrough();
    std::vector<std::string> qm_coords;
    std::vector<std::string> qm_params;
    qm->add_option("--params", qm_params, "extra formal parameter names")
        ->delimiter(',')
        ->allow_extra_args(false);
    qm->add_option("coords", qm_coords, "three coordinate scalars")
        ->required()
        ->expected(3)
        ->allow_extra_args(false);
    qm->callback([&] {
        auto map = build_quotient_map(qm_params);
        auto d = map.map_point(parse_point(qm_coords, map.space()));
        Json gens = Json::array();
        for (const auto& g : d.generators) gens.push_back(g.str());
        Json j{{"command", "quotient-map"},
               {"shape", shape_name(d.shape)},
               {"generators", gens}};
        if (d.index != 0) j["index"] = d.index;
        em.report(j);
    });

    auto* fb = app.add_subcommand("fibre", "do two points map to the same ideal?");
    fb->fallthrough();
    std::vector<std::string> fb_coords;
    std::vector<std::string> fb_params;
    fb->add_option("--params", fb_params, "extra formal parameter names")
        ->delimiter(',')
        ->allow_extra_args(false);
    fb->add_option("coords", fb_coords, "a1 a2 a3 b1 b2 b3")
        ->required()
        ->expected(6)
        ->allow_extra_args(false);
    fb->callback([&] {
        auto map = build_quotient_map(fb_params);
        QuotientPoint a = parse_point({fb_coords[0], fb_coords[1], fb_coords[2]},
                                      map.space());
        QuotientPoint b = parse_point({fb_coords[3], fb_coords[4], fb_coords[5]},
                                      map.space());
        em.boolean("fibre", map.fibre_equal(a, b));
    });

    // serialization ---------------------------------------------------------------
    auto* ex = app.add_subcommand("export", "print the algebra presentation as JSON");
    ex->fallthrough();
    AlgebraOpts ex_alg;
    add_algebra_opts(ex, ex_alg, "affine");
    ex->callback([&] { out << presentation_to_json(build_algebra(ex_alg), 2) << "\n"; });

    // parse and dispatch ------------------------------------------------------------
    try {
        std::vector<std::string> args = apply_config(argv_in);
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const std::exception& e) {
        if (json) {
            em.report(Json{{"error", {{"type", error_kind(e)}, {"message", e.what()}}}});
        } else {
            err << "error: " << e.what() << "\n";
        }
        return 1;
    }
}

}  // namespace qring::cli
