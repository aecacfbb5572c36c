#pragma once

#include <cstddef>
#include <vector>

#include "ostar/cyclotomic.hpp"

namespace ostar {

using CycloMatrix = std::vector<std::vector<CycloNum>>;

// Rank over Q(zeta_N) by Gaussian elimination with exact inverses.
std::size_t exact_rank(CycloMatrix M);

bool is_hermitian(const CycloMatrix& M);

}  // namespace ostar
