#pragma once

#include <vector>

namespace spherex {

using IntMatrix = std::vector<std::vector<long long>>;

// Diagonal of the Smith normal form of a (rows x cols) integer matrix:
// min(rows, cols) non-negative entries with d1 | d2 | ...
std::vector<long long> smith_diagonal(IntMatrix a, std::size_t cols);

// Invariant factors (> 1) of the finite abelian group Z^cols / rowspace(a).
// A zero on the diagonal (infinite factor) is reported as 0.
std::vector<long long> invariant_factors(const IntMatrix& relations, std::size_t cols);

}  // namespace spherex
