#pragma once

#include <set>
#include <vector>

namespace sktorus {

using LatticePoint = std::vector<int>;

/// Exact test: is v in the convex hull of pts? Carathéodory enumeration with
/// rational arithmetic; intended for small point sets (lattice polytopes of
/// torus-element supports).
bool in_convex_hull(const LatticePoint& v, const std::vector<LatticePoint>& pts);

/// Vertex set of conv(pts): points that are not convex combinations of the others.
std::set<LatticePoint> hull_vertices(const std::vector<LatticePoint>& pts);

/// All pairwise sums a+b, a in A, b in B (point set of the Minkowski sum).
std::vector<LatticePoint> minkowski_points(const std::vector<LatticePoint>& a,
                                           const std::vector<LatticePoint>& b);

}  // namespace sktorus
