#pragma once

#include <vector>

namespace sktorus {

using IntMat = std::vector<std::vector<long long>>;
using IntVec = std::vector<long long>;

/// Z-basis of { k : M k = 0 }, computed by integer row reduction of [M^T | I].
/// Returns an empty list for a trivial kernel.
std::vector<IntVec> integer_kernel(const IntMat& m, int cols);

/// Row-style Hermite echelon basis of the lattice spanned by the given vectors.
std::vector<IntVec> hermite_basis(std::vector<IntVec> rows);

/// Whether v lies in the Z-span of basis (basis need not be echelon).
bool lattice_contains(const std::vector<IntVec>& basis, const IntVec& v);

/// Z-basis of Gamma_N = { k : <k,n>_U in N*Z for all n }, for antisymmetric U.
/// Computed as the projection of ker [U | N*I] to the first block.
std::vector<IntVec> gamma_lattice(const IntMat& u, long long n);

}  // namespace sktorus
