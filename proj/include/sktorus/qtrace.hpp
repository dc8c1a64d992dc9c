#pragma once

#include "sktorus/fixtures.hpp"
#include "sktorus/torus.hpp"

namespace sktorus {

/// Face matrix of an ideal triangulation (triangles in counterclockwise order).
IntMat shape_face_matrix(const IdealTriangulationShape& shape);

/// Chekhov-Fock algebra of a face matrix Q: the quantum torus with exponent
/// matrix -2Q (so Z_a Z_b = q^{-2 Q(a,b)} Z_b Z_a).
TorusPtr chekhov_fock(const IntMat& q, const std::vector<std::string>& names);

/// A Delta-simple knot: cyclic traversal through triangles, entering and
/// leaving through distinct edges, no edge met twice.
struct DeltaSimpleKnot {
    struct Step {
        int triangle = 0;  // index into shape.triangles
        int entry = 0;     // arc indices
        int exit = 0;
    };
    std::vector<Step> steps;

    void validate(const IdealTriangulationShape& shape) const;
    std::set<int> crossed_edges() const;
};

/// Colorings C : arcs -> {-1, 0, +1} supported on the crossed edges. In each
/// traversed triangle with crossed edges {x, y} and uncrossed edge u, written
/// (x, u, y) in counterclockwise cyclic order, the pair (C(x), C(y)) = (-1, +1)
/// is excluded. This orientation-based rule is independent of the traversal
/// direction.
std::vector<std::map<int, int>> admissible_colorings(const DeltaSimpleKnot& knot,
                                                     const IdealTriangulationShape& shape);

/// Quantum trace of a Delta-simple knot: sum over admissible colorings of the
/// normalized monomial prod_a Z_a^{C(a)} in the Chekhov-Fock torus.
template <class S>
TorusElement<S> quantum_trace(const DeltaSimpleKnot& knot, const IdealTriangulationShape& shape,
                              const TorusPtr& cf, const S& unit) {
    TorusElement<S> acc(cf, unit);
    for (auto& coloring : admissible_colorings(knot, shape)) {
        ExpVec k(cf->size(), 0);
        for (auto& [arc, sign] : coloring) k[arc] = sign;
        acc += TorusElement<S>::monomial(cf, unit, std::move(k), unit);
    }
    return acc;
}

/// Shear-to-skein monomial map psi(Z^k) = X^{kH}, H the inner-edge rows of the
/// face matrix Q of a totally marked triangulation. k must be supported on
/// inner edges.
template <class S>
TorusElement<S> shear_to_skein(const ExpVec& k, const Quasitriangulation& tri,
                               const TorusPtr& muller, const S& unit) {
    if (!tri.holes.empty())
        throw std::invalid_argument("shear_to_skein: surface is not totally marked");
    auto q = face_matrix(tri);
    const int n = static_cast<int>(tri.edges.size());
    if (static_cast<int>(k.size()) != n)
        throw std::invalid_argument("shear_to_skein: dimension mismatch");
    for (int i = 0; i < n; ++i)
        if (k[i] != 0 && tri.edges[i].boundary)
            throw std::invalid_argument("shear_to_skein: exponent on a boundary edge");
    ExpVec image(muller->size(), 0);
    for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int i = 0; i < n; ++i) s += k[i] * q[i][j];
        image[j] = static_cast<int>(s);
    }
    return TorusElement<S>::monomial(muller, unit, std::move(image), unit);
}

/// Knots on the punctured torus (arcs a=0, b=1, c=2); crossing pairs per the
/// two-triangle traversal.
DeltaSimpleKnot ptorus_knot_alpha();   // crosses a and c
DeltaSimpleKnot ptorus_knot_beta();    // crosses b and c
DeltaSimpleKnot ptorus_knot_gamma();   // crosses a and b

}  // namespace sktorus
