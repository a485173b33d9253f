#include "lgcat/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgcat/problem.hpp"
#include "lgcat/sing.hpp"

namespace lgcat {

namespace {

using nlohmann::json;

json dim_json(const DimOrInfinite& d) {
    if (!d.finite) return json("INFINITE");
    return json(d.dim);
}

json dims_json(const StableDims& d) {
    return json{{"even", dim_json(d.even)}, {"odd", dim_json(d.odd)}};
}

json degree_map_json(const std::map<int, std::uint64_t>& m) {
    json out = json::object();
    for (auto [deg, dim] : m) out[std::to_string(deg)] = dim;
    return out;
}

struct Opts {
    std::string file, file2;
    std::string source, target, object;
    std::string field = "Q";
    std::vector<std::string> vars, vars2;
    std::string order = "degrevlex";
    std::string f_expr, g_expr;
    int window = 5;
    int cap = -1;
    std::uint64_t seed = 0;
    std::uint32_t modulus = 0;
};

ProblemFile load_problem(const std::string& path, std::uint32_t modulus) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    std::stringstream buf;
    buf << in.rdbuf();
    ProblemFile p = parse_problem(buf.str());
    if (modulus) p.field = Field::prime(modulus);
    return p;
}

MatrixFactorization as_mf(const ProblemFile& p, const std::string& name) {
    const ProblemObject& o = find_object(p, name);
    if (o.kind == "mf") return build_mf(p, o);
    if (o.kind == "koszul") return fold(build_koszul(p, o)).mf;
    throw ParseError("object '" + name + "' has no factorization", 0);
}

RingCtxPtr flag_ring(const Opts& o, const std::vector<std::string>& vars) {
    Field f = o.modulus ? Field::prime(o.modulus) : field_from_string(o.field);
    return make_ring(f, vars, mono_order_from_string(o.order));
}

void dispatch(const std::string& cmd, const Opts& o, json& rep, int& code) {
    GBOptions gb;
    if (cmd == "validate") {
        ProblemFile p = load_problem(o.file, o.modulus);
        for (auto& obj : p.objects) {
            if (obj.kind == "mf") build_mf(p, obj);
            else if (obj.kind == "koszul") build_koszul(p, obj);
            else if (obj.kind == "presentation") build_presentation(p, obj);
            else throw ParseError("object '" + obj.name + "' has unknown kind", 0);
            rep["notes"].push_back(obj.name + ": valid");
        }
    } else if (cmd == "hom" || cmd == "stable-hom") {
        ProblemFile p = load_problem(o.file, o.modulus);
        MatrixFactorization e = as_mf(p, o.source);
        MatrixFactorization f = as_mf(p, o.target);
        rep["dims"] = dims_json(hom_cohomology_dims(e, f, gb));
    } else if (cmd == "null-homotopy") {
        ProblemFile p = load_problem(o.file, o.modulus);
        MatrixFactorization e = as_mf(p, o.object);
        GradedHom id = identity_hom(e);
        rep["witness_present"] = null_homotopy_witness(id, gb).has_value();
    } else if (cmd == "box") {
        ProblemFile p1 = load_problem(o.file, o.modulus);
        ProblemFile p2 = load_problem(o.file2, o.modulus);
        MatrixFactorization b =
            box_product(as_mf(p1, o.source), as_mf(p2, o.target));
        rep["ranks"] = json{{"even", b.rank0}, {"odd", b.rank1}};
    } else if (cmd == "fold") {
        ProblemFile p = load_problem(o.file, o.modulus);
        Fold f = fold(build_koszul(p, find_object(p, o.object)));
        rep["ranks"] = json{{"even", f.mf.rank0}, {"odd", f.mf.rank1}};
    } else if (cmd == "monoidality") {
        ProblemFile p1 = load_problem(o.file, o.modulus);
        ProblemFile p2 = load_problem(o.file2, o.modulus);
        KoszulModule m = build_koszul(p1, find_object(p1, o.source));
        KoszulModule n = build_koszul(p2, find_object(p2, o.target));
        bool equal = fold_monoidality_check(m, n);
        rep["equal"] = equal;
        if (!equal) {
            rep["status"] = "invalid";
            code = 1;
        }
    } else if (cmd == "contraction") {
        ProblemFile p = load_problem(o.file, o.modulus);
        const ProblemObject& obj = find_object(p, o.object);
        KoszulModule m = build_koszul(p, obj);
        Fold fm = fold(m);
        ContractionWitness w = contraction_witness(fm, m, build_contraction(p, obj, m));
        rep["order"] = w.nilpotence;
        rep["witness_present"] = true;
    } else if (cmd == "stabilize") {
        ProblemFile p = load_problem(o.file, o.modulus);
        RingCtxPtr ctx = problem_ring(p);
        LGPair lg(ctx, parse_poly(p.potential, ctx));
        PolyMatrix pres = build_presentation(p, find_object(p, o.object));
        MatrixFactorization e = stabilize(lg, pres, o.cap, gb);
        rep["ranks"] = json{{"even", e.rank0}, {"odd", e.rank1}};
        rep["d0"] = e.d0.str();
        rep["d1"] = e.d1.str();
    } else if (cmd == "perfect") {
        ProblemFile p = load_problem(o.file, o.modulus);
        MatrixFactorization e = as_mf(p, o.object);
        GradedHom id = identity_hom(e);
        bool perfect = null_homotopy_witness(id, gb).has_value();
        rep["perfect"] = perfect;
        rep["witness_present"] = perfect;
    } else if (cmd == "u-torsion") {
        ProblemFile p = load_problem(o.file, o.modulus);
        KoszulModule m = build_koszul(p, find_object(p, o.object));
        UTorsionResult res = u_torsion_order_point(m, o.window);
        if (res.found) rep["order"] = res.order;
        else rep["order"] = "INDETERMINATE";
        rep["notes"].push_back("tested orders up to " + std::to_string(res.max_tested));
    } else if (cmd == "rhom-point") {
        ProblemFile p = load_problem(o.file, o.modulus);
        KoszulModule m = build_koszul(p, find_object(p, o.object));
        rep["dims"] = degree_map_json(rhom_trivial_dims(m, o.window));
    } else if (cmd == "u-cone") {
        ProblemFile p = load_problem(o.file, o.modulus);
        KoszulModule m = build_koszul(p, find_object(p, o.object));
        UConeReport r = u_cone_check(m, o.window);
        rep["equal"] = r.ok;
        rep["dims"] = json{{"cone", degree_map_json(r.cone_dims)},
                           {"pull_push_shifted", degree_map_json(r.pullpush_dims)}};
        if (!r.ok) {
            rep["status"] = "invalid";
            code = 1;
        }
    } else if (cmd == "milnor") {
        RingCtxPtr ctx = flag_ring(o, o.vars);
        rep["milnor"] = dim_json(milnor_number(parse_poly(o.f_expr, ctx), gb));
    } else if (cmd == "ts-check") {
        RingCtxPtr cf = flag_ring(o, o.vars);
        RingCtxPtr cg = flag_ring(o, o.vars2);
        TSReport r =
            thom_sebastiani_check(parse_poly(o.f_expr, cf), parse_poly(o.g_expr, cg),
                                  nullptr, nullptr, gb);
        rep["mu_f"] = dim_json(r.mu_f);
        rep["mu_g"] = dim_json(r.mu_g);
        rep["mu_sum"] = dim_json(r.mu_sum);
        rep["multiplicative"] = r.multiplicative;
        if (!r.multiplicative) {
            rep["status"] = "invalid";
            code = 1;
        }
    } else if (cmd == "point-report") {
        Field f = o.modulus ? Field::prime(o.modulus) : field_from_string(o.field);
        SingReport r = point_case_report(f, o.window);
        rep["dims"] = dims_json(r.stable_end);
        rep["perfect"] = r.perfect;
        rep["au_pattern_ok"] = r.au_pattern_ok;
        rep["torsion_free_ok"] = r.torsion_free_ok;
        for (auto& n : r.notes) rep["notes"].push_back(n);
    } else {
        throw ParseError("unknown command '" + cmd + "'", 0);
    }
}

} // namespace

CliResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"exact matrix-factorization and singularity-category toolkit"};
    app.require_subcommand(1);
    Opts o;

    const std::vector<std::string> one_file = {
        "validate", "hom",       "stable-hom", "null-homotopy", "fold",
        "contraction", "stabilize", "perfect",  "u-torsion",    "rhom-point",
        "u-cone"};
    const std::vector<std::string> two_file = {"box", "monoidality"};
    const std::vector<std::string> flag_only = {"milnor", "ts-check", "point-report"};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", o.field, "coefficient field: Q or F<p>");
        sub->add_option("--order", o.order, "monomial order: degrevlex, deglex, lex");
        sub->add_option("--window", o.window, "degree window for point-case commands");
        sub->add_option("--cap", o.cap, "iteration/resource cap (-1 = default)");
        sub->add_option("--seed", o.seed, "seed for randomized corpus generation");
        sub->add_option("--modulus", o.modulus, "override the field with F<modulus>");
    };
    for (auto& name : one_file) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("file", o.file, "problem file")->required();
        sub->add_option("--source", o.source);
        sub->add_option("--target", o.target);
        sub->add_option("--object", o.object);
        add_common(sub);
    }
    for (auto& name : two_file) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("file", o.file, "first problem file")->required();
        sub->add_option("file2", o.file2, "second problem file")->required();
        sub->add_option("--source", o.source);
        sub->add_option("--target", o.target);
        add_common(sub);
    }
    for (auto& name : flag_only) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--vars", o.vars)->delimiter(',');
        sub->add_option("--vars2", o.vars2)->delimiter(',');
        sub->add_option("--f", o.f_expr);
        sub->add_option("--g", o.g_expr);
        add_common(sub);
    }

    json rep;
    rep["schema"] = "lgcat-report/1";
    rep["status"] = "ok";
    rep["notes"] = json::array();
    int code = 0;
    std::string cmd;
    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
        cmd = app.get_subcommands().at(0)->get_name();
        rep["command"] = cmd;
        dispatch(cmd, o, rep, code);
    } catch (const CLI::ParseError& e) {
        rep["status"] = "error";
        rep["notes"].push_back(std::string("argument error: ") + e.what());
        code = 2;
    } catch (const ParseError& e) {
        rep["status"] = "error";
        rep["notes"].push_back(std::string("parse error: ") + e.what());
        code = 2;
    } catch (const ResourceCapExceeded& e) {
        rep["status"] = "error";
        rep["notes"].push_back(std::string("resource cap: ") + e.what());
        code = 3;
    } catch (const PeriodicityNotReached& e) {
        rep["status"] = "error";
        rep["notes"].push_back(std::string("resource cap: ") + e.what());
        code = 3;
    } catch (const MathError& e) {
        rep["status"] = "invalid";
        rep["notes"].push_back(std::string("invariant violation: ") + e.what());
        code = 1;
    }
    return CliResult{code, rep.dump(2) + "\n"};
}

} // namespace lgcat
