#pragma once

#include "lie/io.hpp"
#include "lie/weights.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace lie::cli {

enum ExitStatus : int { kOk = 0, kInputError = 1, kCheckFailed = 2 };

/// Dimension cap: LIE_DIM_CAP when set to a positive integer, else 64.
inline std::size_t dim_cap_from_env() {
    const char* v = std::getenv("LIE_DIM_CAP");
    if (v == nullptr || *v == '\0') return kDefaultDimCap;
    try {
        std::size_t pos = 0;
        const unsigned long cap = std::stoul(v, &pos);
        if (pos == std::string(v).size() && cap > 0) return cap;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("LIE_DIM_CAP must be a positive integer, got '") + v + "'");
}

namespace detail {

inline Json certificate_json(const CompletenessCertificate& c, bool full) {
    Json j{{"complete", c.complete}, {"center_dim", c.center_dim}, {"der_dim", c.der_dim}, {"inner_dim", c.inner_dim}};
    if (c.central_witness) j["central_witness"] = format_vector(*c.central_witness);
    if (c.outer_witness) j["outer_witness"] = full ? to_json(*c.outer_witness) : Json(format_vector(c.outer_witness->vec()));
    return j;
}

inline Json subspace_json(const Subspace& s) {
    Json basis = Json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(format_vector(s.basis_vector(i)));
    return Json{{"dim", s.dim()}, {"basis", std::move(basis)}};
}

inline std::vector<std::size_t> dims_of(const std::vector<Subspace>& chain) {
    std::vector<std::size_t> out;
    for (const auto& s : chain) out.push_back(s.dim());
    return out;
}

inline int emit(std::ostream& out, Json report, bool checks_pass) {
    out << report.dump(2) << "\n";
    return checks_pass ? kOk : kCheckFailed;
}

inline Json lemma3_instance(const std::string& name, LieAlgebra& s, LieAlgebra& g, std::vector<Matrix>& images) {
    if (name == "gap") {
        s = abelian(1);
        g = heisenberg(1);
        images = {Matrix(3, 3)};
        return "abelian:1 acting by zero on heisenberg:1";
    }
    if (name == "faithful") {
        StructureTable t({"b"});
        s = LieAlgebra(std::move(t));
        g = heisenberg(1);
        images = {Matrix::diagonal({Scalar(1), Scalar(1), Scalar(2)})};
        return "span{diag(1,1,2)} acting on heisenberg:1";
    }
    if (name == "direct") {
        s = nonabelian2();
        g = abelian(2);
        images = {Matrix(2, 2), Matrix(2, 2)};
        return "nonabelian2 acting by zero on abelian:2";
    }
    throw UnknownName("lemma3: unknown instance '" + name + "' (expected gap, faithful or direct)");
}

}  // namespace detail

/// Runs one CLI invocation (argv excludes the program name). Reports go to `out`,
/// diagnostics to `err`. Returns the process exit status.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with finite-dimensional Lie algebras over Q", "lie"};
    app.require_subcommand(1);

    auto* cat = app.add_subcommand("catalog", "List the named algebras");
    std::string cat_action = "list";
    cat->add_option("action", cat_action, "Only 'list' is supported")->check(CLI::IsMember({"list"}));

    auto* analyze = app.add_subcommand("analyze", "Center, series, Der(g) and a completeness certificate");
    std::string analyze_src;
    bool full = false;
    analyze->add_option("source", analyze_src, "catalog:<name>, graded-power:<src>:<n>, full-graph:<src> or a file")
        ->required();
    analyze->add_flag("--full", full, "Emit the derivation basis matrices");

    auto* construct = app.add_subcommand("construct", "Build an algebra and write it as an algebra file");
    std::string construct_spec, out_path;
    construct
        ->add_option("spec", construct_spec,
                     "heisenberg:<N> | graded-power:<src>:<n> | full-graph:<src> | semidirect:<homomorphism-file>")
        ->required();
    construct->add_option("--out", out_path, "Output file (stdout when omitted)");

    auto* verify = app.add_subcommand("verify", "Run a theorem pipeline");
    std::string what, g_src, torus_spec = "grading", phi_path, instance;
    std::size_t N = 1, n_levels = 1, gp_slots = 0;
    verify->add_option("what", what, "theorem1 | lemma3 | theorem2 | theorem3 | prop2 | prop3 | prop4")
        ->required()
        ->check(CLI::IsMember({"theorem1", "lemma3", "theorem2", "theorem3", "prop2", "prop3", "prop4"}));
    verify->add_option("--g", g_src, "Source algebra (theorem1, theorem2)");
    verify->add_option("--graded-power", gp_slots, "Replace g by its graded power with this many slots (theorem1)");
    verify->add_option("--torus", torus_spec, "grading | diagonal | <torus-file> (theorem1)");
    verify->add_option("--phi", phi_path, "Homomorphism file (lemma3)");
    verify->add_option("--instance", instance, "Built-in lemma3 instance: gap | faithful | direct");
    verify->add_option("--N", N, "Heisenberg parameter, dim = 2N+1 (theorem3, prop2-4)")->check(CLI::PositiveNumber);
    verify->add_option("--n", n_levels, "Number of full-graph levels (theorem3)")->check(CLI::PositiveNumber);

    auto* tower = app.add_subcommand("tower", "Follow the derivation tower until it stabilizes");
    std::string tower_src;
    std::size_t max_steps = kDefaultTowerSteps;
    tower->add_option("source", tower_src, "Source algebra")->required();
    tower->add_option("--max-steps", max_steps, "Step budget");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "lie: " << e.what() << "\n" << "run with --help for usage\n";
        return kInputError;
    }

    Json command = args;
    try {
        const std::size_t cap = dim_cap_from_env();

        if (cat->parsed()) {
            Json names = Json::array();
            for (const auto& [name, desc] : catalog_names()) names.push_back(Json{{"name", name}, {"description", desc}});
            return detail::emit(out, Json{{"command", command}, {"catalog", std::move(names)}}, true);
        }

        if (analyze->parsed()) {
            const auto entry = resolve_source(analyze_src, cap);
            const LieAlgebra& g = entry.algebra;
            const auto ser = series(g);
            const DerivationSpace ds = derivations(g);
            Json rep{{"command", command}, {"inputs", Json{{"source", analyze_src}, {"dim", g.dim()}}}};
            rep["labels"] = g.labels();
            rep["center"] = detail::subspace_json(center(g));
            rep["series"] = Json{{"derived_dims", detail::dims_of(ser.derived)},
                                 {"lower_central_dims", detail::dims_of(ser.lower_central)},
                                 {"is_nilpotent", ser.is_nilpotent},
                                 {"is_solvable", ser.is_solvable}};
            rep["der_dim"] = ds.dim();
            rep["inner_dim"] = ds.inner.dim();
            rep["completeness"] = detail::certificate_json(is_complete(ds), full);
            if (full) {
                Json mats = Json::array();
                for (const auto& m : ds.basis_mats) mats.push_back(to_json(m));
                rep["der_basis"] = std::move(mats);
            }
            return detail::emit(out, std::move(rep), true);
        }

        if (construct->parsed()) {
            LieAlgebra result = abelian(0);
            const std::string_view spec = construct_spec;
            if (spec.substr(0, 11) == "semidirect:") {
                const auto phi = parse_homomorphism(read_file(std::string(spec.substr(11))), cap);
                if (phi.source().dim() + phi.target().dim() > cap) throw CapExceeded("semidirect product exceeds the cap");
                result = semidirect(phi.source(), phi.target(), phi).whole;
            } else if (spec.substr(0, 11) == "heisenberg:" || spec.substr(0, 8) == "abelian:" || spec == "nonabelian2") {
                result = catalog(spec, cap);
            } else {
                result = resolve_source(spec, cap).algebra;
            }
            const std::string text = serialize_algebra(result);
            if (out_path.empty()) {
                out << text;
                return kOk;
            }
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw ParseError("cannot write '" + out_path + "'");
            f << text;
            return detail::emit(out, Json{{"command", command}, {"dim", result.dim()}, {"out", out_path}}, true);
        }

        if (tower->parsed()) {
            const auto entry = resolve_source(tower_src, cap);
            const auto t = derivation_tower(entry.algebra, max_steps, cap);
            Report rep;
            rep.title = "tower";
            for (std::size_t k = 0; k < t.dims.size(); ++k) rep.dim("Der^" + std::to_string(k), static_cast<long long>(t.dims[k]));
            rep.add("stabilized", t.stabilized_at.has_value(),
                    t.stabilized_at ? "complete at step " + std::to_string(*t.stabilized_at)
                                    : "step budget of " + std::to_string(max_steps) + " exceeded");
            Json j{{"command", command}, {"inputs", Json{{"source", tower_src}, {"max_steps", max_steps}}}};
            j["report"] = to_json(rep);
            j["stabilized_at"] = t.stabilized_at ? Json(*t.stabilized_at) : Json(nullptr);
            j["budget_exceeded"] = t.budget_exceeded;
            return detail::emit(out, std::move(j), rep.all_pass());
        }

        // verify
        Report rep;
        Json inputs = Json::object();
        if (what == "theorem1") {
            if (g_src.empty()) throw PreconditionError("verify theorem1 needs --g");
            auto entry = resolve_source(g_src, cap);
            if (gp_slots > 0) {
                if (entry.algebra.dim() * gp_slots > cap) throw CapExceeded("graded power exceeds the dimension cap");
                auto gp = graded_power(entry.algebra, gp_slots);
                entry = {gp.algebra, gp};
            }
            const LieAlgebra& g = entry.algebra;
            std::vector<Matrix> torus;
            if (torus_spec == "grading") {
                if (!entry.graded) throw PreconditionError("--torus grading needs a graded-power algebra (unknown slot structure)");
                torus = {grading_derivation(*entry.graded)};
            } else if (torus_spec == "diagonal") {
                torus = diagonal_torus(derivations(g));
            } else {
                torus = parse_torus(read_file(torus_spec), g.dim());
            }
            inputs = Json{{"g", g_src}, {"graded_power", gp_slots}, {"torus", torus_spec}, {"dim", g.dim()}};
            rep = theorem1_pipeline(g, torus, cap);
        } else if (what == "lemma3") {
            LieAlgebra s = abelian(0), g = abelian(0);
            std::vector<Matrix> images;
            if (!phi_path.empty()) {
                const auto phi = parse_homomorphism(read_file(phi_path), cap);
                inputs = Json{{"phi", phi_path}};
                rep = lemma3_check(phi.source(), phi.target(), phi);
            } else if (!instance.empty()) {
                inputs = Json{{"instance", instance}, {"description", detail::lemma3_instance(instance, s, g, images)}};
                rep = lemma3_check(s, g, DerHomomorphism(s, g, images));
            } else {
                throw PreconditionError("verify lemma3 needs --phi or --instance");
            }
        } else if (what == "theorem2") {
            if (g_src.empty()) throw PreconditionError("verify theorem2 needs --g");
            const auto entry = resolve_source(g_src, cap);
            inputs = Json{{"g", g_src}, {"dim", entry.algebra.dim()}};
            rep = theorem2_check(entry.algebra, cap);
        } else if (what == "theorem3") {
            inputs = Json{{"N", N}, {"n", n_levels}};
            rep = theorem3_check(N, n_levels, cap);
        } else {
            if (2 * N + 1 > cap) throw CapExceeded("heisenberg dimension exceeds the cap");
            inputs = Json{{"N", N}};
            rep = what == "prop2" ? prop2_check(N) : what == "prop3" ? prop3_check(N) : prop4_check(N);
        }
        Json j{{"command", command}, {"inputs", std::move(inputs)}};
        j["report"] = to_json(rep);
        return detail::emit(out, std::move(j), rep.all_pass());
    } catch (const Error& e) {
        err << "lie: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace lie::cli
