// Exact linear algebra over Z/Q: fraction-free row echelon (Bareiss step with
// per-row content stripping), rank, and rational nullspace.
#ifndef MODPI_LINALG_HPP
#define MODPI_LINALG_HPP

#include <vector>

#include "modpi/numeric.hpp"

namespace modpi {

using IntMatrix = std::vector<std::vector<Int>>;

// Rank of an integer matrix by fraction-free elimination.
size_t matrix_rank(IntMatrix a);

// Basis of the rational nullspace {x : A x = 0}.
std::vector<std::vector<Rat>> nullspace(IntMatrix a);

} // namespace modpi

#endif
