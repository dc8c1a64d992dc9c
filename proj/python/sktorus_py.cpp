#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sktorus/curves.hpp"
#include "sktorus/json_io.hpp"
#include "sktorus/verify.hpp"

namespace py = pybind11;
using namespace sktorus;

namespace {

py::dict report_to_dict(const VerificationReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["status"] = r.status;
    d["computed_equal"] = r.computed_equal;
    d["expected_equal"] = r.expected_equal;
    d["witness"] = r.witness;
    d["ms"] = r.ms;
    return d;
}

std::optional<int> root_arg(int m) { return m > 0 ? std::optional<int>(m) : std::nullopt; }

}  // namespace

PYBIND11_MODULE(sktorus, m) {
    m.doc() = "Exact quantum-torus computations for Kauffman bracket skein algebras";

    m.def("quantum_integer", [](int n) { return quantum_integer(n).str(); });
    m.def(
        "quantum_binomial",
        [](int n, int k, const std::string& base) {
            return quantum_binomial(n, k, base == "q4" ? QBase::q4 : QBase::q).str();
        },
        py::arg("n"), py::arg("k"), py::arg("base") = "q");
    m.def("chebyshev_t", [](int n) {
        auto poly = chebyshev_t(n);
        return std::map<int, long long>(poly.coeffs().begin(), poly.coeffs().end());
    });
    m.def("cnrj", [](int n, int r, int j) { return cnrj(n, r, j).str(); });

    m.def("root_data", [](int m_order) {
        auto ctx = root_data(m_order);
        py::dict d;
        d["m"] = ctx->m;
        d["ord_xi"] = ctx->ord_xi;
        d["ord_xi4"] = ctx->ord_xi4;
        d["epsilon_exp"] = ctx->epsilon_exp;
        d["phi"] = ctx->phi;
        return d;
    });

    m.def("generalized_demoivre",
          [](int n) { return torus_element_to_json(generalized_demoivre(n)).dump(); });

    m.def(
        "vertex_matrix",
        [](const std::string& fixture) {
            auto fx = fixture_by_name(fixture);
            return vertex_matrix(fx.tri);
        },
        py::arg("fixture"));
    m.def("fixture_names", [] { return fixture_names(); });

    m.def(
        "grid_total",
        [](int n, int mm, int root, long long budget) {
            if (root > 0) {
                DiskStateSum<Cyc> ss(Cyc(root_data(root), 1));
                return torus_element_to_json(ss.grid_total(n, mm, true, budget)).dump();
            }
            DiskStateSum<Laurent> ss(Laurent(1));
            return torus_element_to_json(ss.grid_total(n, mm, true, budget)).dump();
        },
        py::arg("n"), py::arg("m"), py::arg("root") = 0,
        py::arg("budget") = DiskStateSum<Cyc>::default_budget);

    m.def(
        "transparency",
        [](int root, int n, long long budget) {
            auto ctx = root_data(root);
            auto rep = transparency_check(n > 0 ? n : ctx->ord_xi4, ctx, budget);
            py::dict d;
            d["n"] = rep.n;
            d["verdict"] = rep.verdict == Transparency::transparent ? "transparent"
                           : rep.verdict == Transparency::skew      ? "skew"
                                                                    : "neither";
            d["factor_matches"] = rep.factor_matches;
            return d;
        },
        py::arg("root"), py::arg("n") = 0,
        py::arg("budget") = DiskStateSum<Cyc>::default_budget);

    m.def(
        "check_gauss", [](int root, int n) { return report_to_dict(check_gauss(root_arg(root), n)); },
        py::arg("root"), py::arg("n"));
    m.def(
        "check_frobenius_annulus",
        [](int root, int n) { return report_to_dict(check_frobenius_annulus(root_arg(root), n)); },
        py::arg("root") = 0, py::arg("n") = 2);
    m.def(
        "check_flip_coherence",
        [](int root, int n) { return report_to_dict(check_flip_coherence(root_arg(root), n)); },
        py::arg("root"), py::arg("n"));

    m.def(
        "is_admissible",
        [](const std::vector<long long>& k, int arcs,
           const std::vector<std::array<int, 3>>& triangles) {
            IdealTriangulationShape s;
            s.arc_count = arcs;
            s.triangles = triangles;
            return is_admissible(k, s);
        },
        py::arg("k"), py::arg("arcs"), py::arg("triangles"));

    m.def("run_all", [](long long budget) {
        VerifyConfig cfg;
        if (budget > 0) cfg.budget = budget;
        py::list out;
        for (auto& r : run_all(cfg)) out.append(report_to_dict(r));
        return out;
    }, py::arg("budget") = 0);
}
