#pragma once

#include <json.hpp>

#include "sktorus/qtrace.hpp"
#include "sktorus/surface.hpp"

namespace sktorus {

using json = nlohmann::json;

/// {index: [names], rows: [[ints]]}
json matrix_to_json(const std::vector<std::string>& names, const IntMat& m);

/// {terms: [{exp: [ints], h: [nats], coeff: "canonical string"}]},
/// terms in lexicographic exponent order.
template <class S>
json torus_element_to_json(const TorusElement<S>& x) {
    json terms = json::array();
    const int rank = x.torus()->torus_rank();
    for (auto& [k, c] : x.terms()) {
        json t;
        t["exp"] = std::vector<int>(k.begin(), k.begin() + rank);
        t["h"] = std::vector<int>(k.begin() + rank, k.end());
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    json out;
    out["index"] = x.torus()->names();
    out["terms"] = std::move(terms);
    return out;
}

json quasitriangulation_to_json(const Quasitriangulation& t);
Quasitriangulation quasitriangulation_from_json(const json& j);

json shape_to_json(const IdealTriangulationShape& s);
IdealTriangulationShape shape_from_json(const json& j);

DeltaSimpleKnot knot_from_json(const json& j, const IdealTriangulationShape& shape);

}  // namespace sktorus
