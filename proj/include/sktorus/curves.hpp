#pragma once

#include "sktorus/fixtures.hpp"
#include "sktorus/lattice.hpp"
#include "sktorus/laurent.hpp"

namespace sktorus {

using EdgeVector = std::vector<long long>;

/// Admissibility of an edge-coordinate vector: for every triangle with edges
/// a, b, c: nonnegative coordinates, even sum, and each one at most the sum of
/// the other two.
bool is_admissible(const EdgeVector& k, const IdealTriangulationShape& shape);

/// Cone membership drops the parity condition. Input is an integer vector;
/// the conditions are homogeneous, so rational points are queried by scaling
/// to a common denominator.
bool cone_membership(const EdgeVector& v, const IdealTriangulationShape& shape);

/// Membership in the group completion of the admissible monoid: every triangle
/// sum even (signs unrestricted).
bool in_group_completion(const EdgeVector& k, const IdealTriangulationShape& shape);

/// Exhaustive primitivity check: for every k in the group completion with
/// coordinates in [-bound, bound] and c in {2, 3}: c*k admissible implies k
/// admissible.
bool primitivity_check(const IdealTriangulationShape& shape, int bound);

/// Exhaustive monoid closure check: sums of admissible vectors with
/// coordinates in [0, bound] are admissible.
bool monoid_closure_check(const IdealTriangulationShape& shape, int bound);

/// Leading term of the filtered product in the associated graded algebra:
/// S(k) S(k') = q^{C(k,k')} S(k+k'). C is a pluggable integer bilinear form
/// (passed as a matrix; only its antisymmetrization matters for commutation).
struct GradedTerm {
    EdgeVector exponent;
    long long q_exponent = 0;
};
GradedTerm graded_product(const EdgeVector& k, const EdgeVector& kp, const IntMat& c,
                          const IdealTriangulationShape& shape);

/// Max coordinate sum over the support of a formal combination of edge vectors.
long long filtration_degree(const std::map<EdgeVector, Laurent>& combination);

}  // namespace sktorus
