#ifndef VOGANKIT_LINALG_HPP
#define VOGANKIT_LINALG_HPP

#include <vector>

#include "vogankit/rational.hpp"

namespace vgk {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Row-reduced kernel basis of a (possibly non-square) rational matrix.
std::vector<std::vector<Rat>> kernel_basis(RatMatrix a, std::size_t ncols);

std::size_t matrix_rank(RatMatrix a, std::size_t ncols);

/// Solve a * x = b exactly; empty optional if inconsistent.  When the system
/// is underdetermined, free variables are set to zero.
std::optional<std::vector<Rat>> solve(RatMatrix a, std::vector<Rat> b, std::size_t ncols);

}  // namespace vgk

#endif
