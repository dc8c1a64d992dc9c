#include "sktorus/json_io.hpp"

namespace sktorus {

json matrix_to_json(const std::vector<std::string>& names, const IntMat& m) {
    json out;
    out["index"] = names;
    out["rows"] = m;
    return out;
}

json quasitriangulation_to_json(const Quasitriangulation& t) {
    json out;
    out["edges"] = json::array();
    for (auto& e : t.edges)
        out["edges"].push_back({{"name", e.name}, {"boundary", e.boundary}, {"monogon", e.monogon}});
    out["points"] = json::array();
    for (auto& p : t.points) {
        json fan = json::array();
        for (auto& h : p.fan) fan.push_back({h.edge, h.end});
        out["points"].push_back({{"name", p.name}, {"fan", std::move(fan)}});
    }
    out["triangles"] = json::array();
    for (auto& tri : t.triangles) out["triangles"].push_back({tri[0], tri[1], tri[2]});
    out["holes"] = json::array();
    for (auto& h : t.holes)
        out["holes"].push_back({{"name", h.name}, {"monogonEdge", h.monogon_edge}});
    out["starPartners"] = json::object();
    for (auto& [k, v] : t.star_partner) out["starPartners"][k] = v;
    return out;
}

Quasitriangulation quasitriangulation_from_json(const json& j) {
    Quasitriangulation t;
    for (auto& e : j.at("edges"))
        t.edges.push_back({e.at("name").get<std::string>(), e.value("boundary", false),
                           e.value("monogon", false)});
    for (auto& p : j.at("points")) {
        Quasitriangulation::MarkedPoint mp;
        mp.name = p.at("name").get<std::string>();
        for (auto& h : p.at("fan"))
            mp.fan.push_back({h.at(0).get<std::string>(), h.at(1).get<int>()});
        t.points.push_back(std::move(mp));
    }
    for (auto& tri : j.at("triangles"))
        t.triangles.push_back({tri.at(0).get<std::string>(), tri.at(1).get<std::string>(),
                               tri.at(2).get<std::string>()});
    if (j.contains("holes"))
        for (auto& h : j.at("holes"))
            t.holes.push_back(
                {h.at("name").get<std::string>(), h.at("monogonEdge").get<std::string>()});
    if (j.contains("starPartners"))
        for (auto& [k, v] : j.at("starPartners").items())
            t.star_partner[k] = v.get<std::string>();
    t.validate();
    return t;
}

json shape_to_json(const IdealTriangulationShape& s) {
    json out;
    out["arcs"] = s.arc_names.empty() ? [&] {
        std::vector<std::string> names;
        for (int i = 0; i < s.arc_count; ++i) names.push_back("e" + std::to_string(i));
        return names;
    }() : s.arc_names;
    out["triangles"] = json::array();
    for (auto& t : s.triangles) out["triangles"].push_back({t[0], t[1], t[2]});
    return out;
}

IdealTriangulationShape shape_from_json(const json& j) {
    IdealTriangulationShape s;
    s.arc_names = j.at("arcs").get<std::vector<std::string>>();
    s.arc_count = static_cast<int>(s.arc_names.size());
    for (auto& t : j.at("triangles"))
        s.triangles.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    s.validate();
    return s;
}

namespace {
int arc_index(const json& v, const IdealTriangulationShape& shape) {
    if (v.is_number_integer()) return v.get<int>();
    auto name = v.get<std::string>();
    for (int i = 0; i < static_cast<int>(shape.arc_names.size()); ++i)
        if (shape.arc_names[i] == name) return i;
    throw std::invalid_argument("knot: unknown arc " + name);
}
}  // namespace

DeltaSimpleKnot knot_from_json(const json& j, const IdealTriangulationShape& shape) {
    DeltaSimpleKnot k;
    for (auto& s : j.at("steps"))
        k.steps.push_back({s.at("triangle").get<int>(), arc_index(s.at("entry"), shape),
                           arc_index(s.at("exit"), shape)});
    k.validate(shape);
    return k;
}

}  // namespace sktorus
