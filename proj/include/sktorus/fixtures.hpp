#pragma once

#include "sktorus/surface.hpp"

namespace sktorus {

/// A bundled surface with the side data used by center checks: for each marked
/// boundary component, the names of its boundary edges (the support of k_beta).
struct SurfaceFixture {
    std::string name;
    Quasitriangulation tri;
    std::vector<std::vector<std::string>> marked_component_edges;
};

/// Annulus with one marked point on each boundary circle.
/// Edges a, b cross the annulus, c and d are the boundary arcs.
/// Muller algebra: all pairs commute except ab = q^{-2} ba.
SurfaceFixture annulus_fixture();

/// Disk with four marked points W, N, E, S; boundary arcs b = WN, c = NE,
/// d = ES, a = SW and the diagonal x = WE. Flipping x produces the other
/// diagonal y = NS.
SurfaceFixture disk4_fixture();

/// Annulus with two marked points on the outer boundary and an unmarked inner
/// component beta: a holed monogon (eye) with monogon edge a and outer
/// boundary arcs c1, c2.
SurfaceFixture eye_fixture();

/// The eye fixture after adding a marked point p on beta: edges d, e from the
/// monogon basepoint to p and the boundary arc f at p. Totally marked.
SurfaceFixture eye_with_point_fixture();

SurfaceFixture fixture_by_name(const std::string& name);
std::vector<std::string> fixture_names();

/// The annulus knot element alpha = [a^-1 b^-1 c d] + [a b^-1] + [a^-1 b]
/// in the Muller torus of the annulus fixture.
template <class S>
TorusElement<S> annulus_knot(const TorusPtr& torus, const S& unit) {
    return weyl_normalize<S>({{"a", -1}, {"b", -1}, {"c", 1}, {"d", 1}}, torus, unit) +
           weyl_normalize<S>({{"a", 1}, {"b", -1}}, torus, unit) +
           weyl_normalize<S>({{"a", -1}, {"b", 1}}, torus, unit);
}

/// Ideal triangulation data for finite type surfaces: r arcs, triangles as
/// index triples in counterclockwise order.
struct IdealTriangulationShape {
    int arc_count = 0;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::string> arc_names;  // optional; defaults e0, e1, ...

    void validate() const;  // every arc in exactly two triangle slots
};

/// Once-punctured torus: arcs a, b, c; two triangles (a,b,c).
IdealTriangulationShape punctured_torus_shape();

}  // namespace sktorus
