#include "vogankit/linalg.hpp"

#include <optional>

namespace vgk {

namespace {

// Gauss-Jordan; returns pivot column per pivot row.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    Rat inv = a[row][col];
    for (auto& x : a[row]) x /= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (std::size_t c = 0; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> kernel_basis(RatMatrix a, std::size_t ncols) {
  auto pivots = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t matrix_rank(RatMatrix a, std::size_t ncols) { return rref(a, ncols).size(); }

std::optional<std::vector<Rat>> solve(RatMatrix a, std::vector<Rat> b, std::size_t ncols) {
  for (std::size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
  auto pivots = rref(a, ncols);
  // inconsistent if some row is (0 ... 0 | nonzero)
  for (const auto& row : a) {
    bool all_zero = true;
    for (std::size_t c = 0; c < ncols; ++c)
      if (row[c] != 0) {
        all_zero = false;
        break;
      }
    if (all_zero && row[ncols] != 0) return std::nullopt;
  }
  std::vector<Rat> x(ncols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][ncols];
  return x;
}

}  // namespace vgk
