#include "ostar/linalg.hpp"

#include <stdexcept>

namespace ostar {

std::size_t exact_rank(CycloMatrix M) {
  if (M.empty()) return 0;
  const std::size_t rows = M.size();
  const std::size_t cols = M.front().size();
  unsigned L = 1;
  for (const auto& row : M) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    for (const auto& v : row) L = lcm_conductor(L, v.conductor());
  }
  for (auto& row : M)
    for (auto& v : row) v = v.promote(L);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && M[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(M[pivot], M[rank]);
    const CycloNum inv = M[rank][col].inverse();
    for (std::size_t c = col; c < cols; ++c) M[rank][c] *= inv;
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (M[r][col].is_zero()) continue;
      const CycloNum factor = M[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        if (!M[rank][c].is_zero()) M[r][c] -= factor * M[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

bool is_hermitian(const CycloMatrix& M) {
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (M[i].size() != M.size()) return false;
    for (std::size_t j = 0; j <= i; ++j)
      if (!(M[i][j] == M[j][i].conj())) return false;
  }
  return true;
}

}  // namespace ostar
