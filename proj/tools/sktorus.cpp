#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include <algorithm>

#include "sktorus/curves.hpp"
#include "sktorus/json_io.hpp"
#include "sktorus/verify.hpp"

using namespace sktorus;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void print_report(const VerificationReport& r, bool as_json) {
    if (as_json) {
        json j{{"name", r.name},
               {"status", r.status},
               {"computed_equal", r.computed_equal},
               {"expected_equal", r.expected_equal},
               {"witness", r.witness},
               {"ms", r.ms}};
        if (!r.detail.empty()) j["detail"] = r.detail;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (r.status == "pass" ? "PASS" : r.status == "skip" ? "SKIP" : "FAIL") << " "
                  << r.name << " (computed=" << (r.computed_equal ? "equal" : "unequal")
                  << ", expected=" << (r.expected_equal ? "equal" : "unequal") << ")";
        if (!r.witness.empty()) std::cout << " witness: " << r.witness;
        std::cout << "\n";
    }
}

int reports_exit(const std::vector<VerificationReport>& rs) {
    for (auto& r : rs)
        if (r.status == "fail") return exit_fail;
    return exit_pass;
}

std::vector<long long> parse_vector(const std::string& csv) {
    std::vector<long long> v;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        auto comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        v.push_back(std::stoll(csv.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact quantum-torus toolkit for Kauffman bracket skein algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");
    std::string config_path;
    app.add_option("--config", config_path, "key=value config file");
    long long budget_override = -1;
    app.add_option("--budget", budget_override, "state enumeration budget");

    // cheby expand
    auto* cheby_cmd = app.add_subcommand("cheby", "Chebyshev operations");
    auto* expand = cheby_cmd->add_subcommand("expand", "closed form of T_n(K + K^-1 + E)");
    int cheby_n = 1;
    expand->add_option("--n", cheby_n, "index n")->required();

    // surface
    auto* surface_cmd = app.add_subcommand("surface", "quasitriangulation operations");
    std::string surf_file, flip_edge, plug_component;
    auto* vm = surface_cmd->add_subcommand("vertex-matrix", "print the vertex matrix");
    vm->add_option("file", surf_file, "quasitriangulation JSON")->required();
    auto* fl = surface_cmd->add_subcommand("flip", "flip at an edge");
    fl->add_option("file", surf_file, "quasitriangulation JSON")->required();
    fl->add_option("--edge", flip_edge, "edge to flip")->required();
    auto* pl = surface_cmd->add_subcommand("plug", "plug an unmarked component");
    pl->add_option("file", surf_file, "quasitriangulation JSON")->required();
    pl->add_option("--component", plug_component, "unmarked component")->required();

    // curves
    auto* curves_cmd = app.add_subcommand("curves", "edge-coordinate operations");
    auto* adm = curves_cmd->add_subcommand("admissible", "admissibility of an edge vector");
    std::string shape_file, vector_csv;
    adm->add_option("--shape", shape_file, "shape JSON")->required();
    adm->add_option("--vector", vector_csv, "comma-separated coordinates")->required();

    // qtrace
    auto* qtrace_cmd = app.add_subcommand("qtrace", "quantum trace of a Delta-simple knot");
    std::string knot_file;
    qtrace_cmd->add_option("--shape", shape_file, "shape JSON")->required();
    qtrace_cmd->add_option("--knot", knot_file, "knot JSON")->required();

    // statesum
    auto* ss_cmd = app.add_subcommand("statesum", "planar state sums in the 4-marked disk");
    auto* grid = ss_cmd->add_subcommand("grid", "total of the N x M crossing grid");
    int grid_n = 1, grid_m = 1;
    int root_m = 0;
    grid->add_option("--n", grid_n)->required();
    grid->add_option("--m", grid_m)->required();
    grid->add_option("--root", root_m, "order m of t (omit for symbolic)");
    auto* transp = ss_cmd->add_subcommand("transparency", "over/under comparison");
    int transp_n = -1;
    transp->add_option("--n", transp_n, "strand count (default ord(xi^4))");
    transp->add_option("--root", root_m, "order m of t")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "verification commands");
    int verify_root = 0, verify_n = 2;
    bool symbolic = false;
    verify_cmd->add_option("--root", verify_root, "order m of t");
    verify_cmd->add_flag("--symbolic", symbolic, "generic q");
    verify_cmd->add_option("--n", verify_n, "N parameter");
    auto* v_frob = verify_cmd->add_subcommand("frobenius-annulus");
    auto* v_gauss = verify_cmd->add_subcommand("gauss");
    auto* v_flip = verify_cmd->add_subcommand("flip");
    auto* v_center = verify_cmd->add_subcommand("center");
    std::string center_fixture = "annulus";
    v_center->add_option("--fixture", center_fixture, "annulus | disk4 | eye | eye+p");
    int center_gamma_n = 0;
    v_center->add_option("--gamma", center_gamma_n, "also print the Gamma_N basis");
    auto* v_all = verify_cmd->add_subcommand("run-all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? exit_input : exit_pass;
    }

    try {
        VerifyConfig cfg = load_config(config_path.empty()
                                           ? std::nullopt
                                           : std::optional<std::string>(config_path));
        if (budget_override >= 0) cfg.budget = budget_override;

        if (expand->parsed()) {
            std::cout << torus_element_to_json(generalized_demoivre(cheby_n)).dump(2) << "\n";
            return exit_pass;
        }
        if (vm->parsed()) {
            auto t = quasitriangulation_from_json(load_json(surf_file));
            std::cout << matrix_to_json(t.edge_names(), vertex_matrix(t)).dump(2) << "\n";
            return exit_pass;
        }
        if (fl->parsed()) {
            auto t = quasitriangulation_from_json(load_json(surf_file));
            std::cout << quasitriangulation_to_json(flip(t, flip_edge)).dump(2) << "\n";
            return exit_pass;
        }
        if (pl->parsed()) {
            auto t = quasitriangulation_from_json(load_json(surf_file));
            std::string monogon;
            for (auto& h : t.holes)
                if (h.name == plug_component) monogon = h.monogon_edge;
            if (monogon.empty()) throw std::invalid_argument("no such unmarked component");
            auto nb = monogon_neighborhood(t, monogon);
            Quasitriangulation after = t;
            // Delta' = Delta minus {a, b}; the hole disappears.
            after.edges.erase(std::remove_if(after.edges.begin(), after.edges.end(),
                                             [&](auto& e) {
                                                 return e.name == monogon || e.name == nb.tri_b;
                                             }),
                              after.edges.end());
            after.holes.clear();
            after.star_partner.clear();
            after.triangles.clear();
            after.points.clear();
            auto plugged = surgery_plug_hole<Laurent>(t, after, plug_component, Laurent(1));
            json out;
            for (auto& [g, img] : plugged.images) out["images"][g] = torus_element_to_json(img);
            out["kernel"] = json::array();
            out["kernel"].push_back(monogon);
            if (t.star_partner.count(monogon)) out["kernel"].push_back(t.star_partner.at(monogon));
            out["kernel"].push_back(nb.tri_b + " - " + nb.tri_c);
            out["kernel"].push_back(plug_component + " + q^2 + q^-2");
            std::cout << out.dump(2) << "\n";
            return exit_pass;
        }
        if (adm->parsed()) {
            auto shape = shape_from_json(load_json(shape_file));
            auto v = parse_vector(vector_csv);
            bool ok = is_admissible(v, shape);
            json out{{"vector", v}, {"admissible", ok}};
            std::cout << (as_json ? out.dump() : std::string(ok ? "admissible" : "inadmissible"))
                      << "\n";
            return exit_pass;
        }
        if (qtrace_cmd->parsed()) {
            auto shape = shape_from_json(load_json(shape_file));
            auto knot = knot_from_json(load_json(knot_file), shape);
            auto cf = chekhov_fock(shape_face_matrix(shape), shape.arc_names);
            auto tr = quantum_trace(knot, shape, cf, Laurent(1));
            std::cout << torus_element_to_json(tr).dump(2) << "\n";
            return exit_pass;
        }
        if (grid->parsed()) {
            if (root_m > 0) {
                DiskStateSum<Cyc> ss(Cyc(root_data(root_m), 1));
                std::cout << torus_element_to_json(ss.grid_total(grid_n, grid_m, true, cfg.budget))
                                 .dump(2)
                          << "\n";
            } else {
                DiskStateSum<Laurent> ss(Laurent(1));
                std::cout << torus_element_to_json(ss.grid_total(grid_n, grid_m, true, cfg.budget))
                                 .dump(2)
                          << "\n";
            }
            return exit_pass;
        }
        if (transp->parsed()) {
            auto ctx = root_data(root_m);
            int n = transp_n > 0 ? transp_n : ctx->ord_xi4;
            auto rep = transparency_check(n, ctx, cfg.budget);
            std::string verdict = rep.verdict == Transparency::transparent ? "transparent"
                                  : rep.verdict == Transparency::skew      ? "skew"
                                                                           : "neither";
            json out{{"n", rep.n}, {"verdict", verdict}, {"factor_matches", rep.factor_matches}};
            std::cout << (as_json ? out.dump() : verdict) << "\n";
            return rep.verdict == Transparency::neither ? exit_fail : exit_pass;
        }

        std::optional<int> root = std::nullopt;
        if (verify_root > 0 && !symbolic) root = verify_root;
        if (v_frob->parsed()) {
            auto r = check_frobenius_annulus(root, verify_n);
            print_report(r, as_json);
            return reports_exit({r});
        }
        if (v_gauss->parsed()) {
            auto r = check_gauss(root, verify_n);
            print_report(r, as_json);
            return reports_exit({r});
        }
        if (v_flip->parsed()) {
            auto r = check_flip_coherence(root, verify_n);
            print_report(r, as_json);
            return reports_exit({r});
        }
        if (v_center->parsed()) {
            auto fx = fixture_by_name(center_fixture);
            auto r = check_center_generic(fx);
            print_report(r, as_json);
            auto p = vertex_matrix(fx.tri);
            auto kernel = integer_kernel(p, static_cast<int>(p.size()));
            json out{{"kernel", kernel}};
            if (center_gamma_n > 0) out["gamma"] = center_gamma_basis(fx, center_gamma_n);
            std::cout << out.dump(2) << "\n";
            return reports_exit({r});
        }
        if (v_all->parsed()) {
            auto reports = run_all(cfg);
            int pass = 0, fail = 0, skip = 0;
            for (auto& r : reports) {
                print_report(r, as_json);
                (r.status == "pass" ? pass : r.status == "skip" ? skip : fail)++;
            }
            if (!as_json)
                std::cout << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
            return fail == 0 ? exit_pass : exit_fail;
        }
        std::cerr << "no subcommand action\n";
        return exit_input;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
}
