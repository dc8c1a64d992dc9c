#include "sktorus/fixtures.hpp"

namespace sktorus {

namespace {
using HE = Quasitriangulation::HalfEdge;
}

SurfaceFixture annulus_fixture() {
    SurfaceFixture f;
    f.name = "annulus";
    Quasitriangulation& t = f.tri;
    t.edges = {{"a", false, false}, {"b", false, false}, {"c", true, false}, {"d", true, false}};
    // p1 on the outer circle, p2 on the inner one; fans in clockwise order.
    t.points = {{"p1", {HE{"c", 0}, HE{"b", 0}, HE{"a", 0}, HE{"c", 1}}},
                {"p2", {HE{"d", 0}, HE{"b", 1}, HE{"a", 1}, HE{"d", 1}}}};
    t.triangles = {{"a", "b", "c"}, {"a", "b", "d"}};
    f.marked_component_edges = {{"c"}, {"d"}};
    t.validate();
    return f;
}

SurfaceFixture disk4_fixture() {
    SurfaceFixture f;
    f.name = "disk4";
    Quasitriangulation& t = f.tri;
    t.edges = {{"a", true, false},
               {"b", true, false},
               {"c", true, false},
               {"d", true, false},
               {"x", false, false}};
    // Marked points W, N, E, S; a = SW, b = WN, c = NE, d = ES, x = WE.
    // Fan direction is pinned so that x bd = q^2 bd x, the relation the
    // closed-form grid evaluation is written in.
    t.points = {{"W", {HE{"a", 1}, HE{"x", 0}, HE{"b", 0}}},
                {"N", {HE{"b", 1}, HE{"c", 0}}},
                {"E", {HE{"c", 1}, HE{"x", 1}, HE{"d", 0}}},
                {"S", {HE{"d", 1}, HE{"a", 0}}}};
    t.triangles = {{"x", "c", "b"}, {"a", "d", "x"}};
    f.marked_component_edges = {{"a", "b", "c", "d"}};
    t.validate();
    return f;
}

SurfaceFixture eye_fixture() {
    SurfaceFixture f;
    f.name = "eye";
    Quasitriangulation& t = f.tri;
    t.edges = {{"a", false, true}, {"c1", true, false}, {"c2", true, false}};
    t.points = {{"p1", {HE{"c1", 0}, HE{"a", 0}, HE{"a", 1}, HE{"c2", 0}}},
                {"p2", {HE{"c2", 1}, HE{"c1", 1}}}};
    // Cyclic order pinned by the surgery relation a a* = q^2 b^2 + q^-2 c^2 + beta b c
    // with b, c read off as the sides after a: here b = c2, c = c1.
    t.triangles = {{"a", "c2", "c1"}};
    t.holes = {{"beta", "a"}};
    t.star_partner = {{"a", "a*"}};
    f.marked_component_edges = {{"c1", "c2"}};
    t.validate();
    return f;
}

SurfaceFixture eye_with_point_fixture() {
    SurfaceFixture f;
    f.name = "eye+p";
    Quasitriangulation& t = f.tri;
    t.edges = {{"a", false, false}, {"c1", true, false}, {"c2", true, false},
               {"d", false, false}, {"e", false, false},  {"f", true, false}};
    t.points = {{"p1",
                 {HE{"c1", 0}, HE{"a", 0}, HE{"d", 0}, HE{"e", 0}, HE{"a", 1}, HE{"c2", 0}}},
                {"p2", {HE{"c2", 1}, HE{"c1", 1}}},
                {"p", {HE{"f", 0}, HE{"d", 1}, HE{"e", 1}, HE{"f", 1}}}};
    t.triangles = {{"a", "c1", "c2"}, {"a", "d", "e"}, {"d", "f", "e"}};
    f.marked_component_edges = {{"c1", "c2"}, {"f"}};
    t.validate();
    return f;
}

SurfaceFixture fixture_by_name(const std::string& name) {
    if (name == "annulus") return annulus_fixture();
    if (name == "disk4") return disk4_fixture();
    if (name == "eye") return eye_fixture();
    if (name == "eye+p") return eye_with_point_fixture();
    throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() { return {"annulus", "disk4", "eye", "eye+p"}; }

void IdealTriangulationShape::validate() const {
    std::vector<int> count(arc_count, 0);
    for (auto& tri : triangles)
        for (int e : tri) {
            if (e < 0 || e >= arc_count)
                throw std::invalid_argument("shape: arc index out of range");
            count[e]++;
        }
    for (int e = 0; e < arc_count; ++e)
        if (count[e] != 2)
            throw std::invalid_argument("shape: arc " + std::to_string(e) +
                                        " is not in exactly two triangle slots");
}

IdealTriangulationShape punctured_torus_shape() {
    IdealTriangulationShape s;
    s.arc_count = 3;
    s.triangles = {{0, 1, 2}, {0, 1, 2}};
    s.arc_names = {"a", "b", "c"};
    s.validate();
    return s;
}

}  // namespace sktorus
