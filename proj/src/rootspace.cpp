#include "vogankit/rootspace.hpp"

namespace vgk {

namespace {

struct Ambient {
  std::size_t M, N;
};

Ambient ambient_of(const FamilySpec& s) {
  switch (s.family) {
    case Family::sl_2m_2n_2:
    case Family::sl_2m1_2n_2:
    case Family::sl_2m1_2n1_2: return {std::size_t(s.m), std::size_t(s.n)};
    case Family::sl_2_2n_2: return {2, std::size_t(s.n)};  // auxiliary e2 for the fork
    case Family::sl_2_2n1_2: return {1, std::size_t(s.n)};
    case Family::osp_2m_2n_2: return {std::size_t(s.m), std::size_t(s.n)};
    case Family::osp_2_2n_2:
    case Family::sl_1_2n1_4: return {0, std::size_t(s.n)};
  }
  throw error("unreachable family tag");
}

}  // namespace

std::vector<WeightVector> simple_roots(const FamilySpec& spec) {
  spec.validate();
  auto [M, N] = ambient_of(spec);
  auto e = [&](std::size_t i) { return basis_e(i, M, N); };
  auto d = [&](std::size_t i) { return basis_d(i, M, N); };
  auto k = [&](Rat c) { return basis_k(M, N, c); };
  const std::size_t m = std::size_t(spec.m), n = std::size_t(spec.n);

  std::vector<WeightVector> roots;
  switch (spec.family) {
    case Family::sl_2m_2n_2:
      roots.push_back(k(1) - e(0) - e(1));
      for (std::size_t i = 0; i + 1 < m; ++i) roots.push_back(e(i) - e(i + 1));
      roots.push_back(e(m - 1) - d(0));  // grey
      for (std::size_t i = 0; i + 2 < n; ++i) roots.push_back(d(i) - d(i + 1));
      roots.push_back(d(n - 2) - d(n - 1));
      roots.push_back(d(n - 2) + d(n - 1));
      break;

    case Family::sl_2m1_2n_2:
      roots.push_back(k(1) - Rat(2) * e(0));
      for (std::size_t i = 0; i + 1 < m; ++i) roots.push_back(e(i) - e(i + 1));
      roots.push_back(e(m - 1) - d(0));  // grey
      for (std::size_t i = 0; i + 2 < n; ++i) roots.push_back(d(i) - d(i + 1));
      roots.push_back(d(n - 2) - d(n - 1));
      roots.push_back(d(n - 2) + d(n - 1));
      break;

    case Family::sl_2m1_2n1_2:
      roots.push_back(k(1) - Rat(2) * e(0));
      for (std::size_t i = 0; i + 1 < m; ++i) roots.push_back(e(i) - e(i + 1));
      roots.push_back(e(m - 1) - d(0));  // grey
      for (std::size_t i = 0; i + 1 < n; ++i) roots.push_back(d(i) - d(i + 1));
      roots.push_back(Rat(2) * d(n - 1));
      break;

    case Family::sl_2_2n_2:
      roots.push_back(k(1) - d(0) - d(1));
      roots.push_back(d(0) - d(1));
      for (std::size_t i = 1; i + 1 < n; ++i) roots.push_back(d(i) - d(i + 1));
      roots.push_back(d(n - 1) - e(0));  // grey
      roots.push_back(e(0) - e(1));
      roots.push_back(e(0) + e(1));
      break;

    case Family::sl_2_2n1_2:
      roots.push_back(k(1) - d(0) - d(1));
      roots.push_back(d(0) - d(1));
      for (std::size_t i = 1; i + 1 < n; ++i) roots.push_back(d(i) - d(i + 1));
      roots.push_back(d(n - 1) - e(0));  // grey
      roots.push_back(Rat(2) * e(0));
      break;

    case Family::osp_2m_2n_2:
      roots.push_back(k(Rat(1, 2)) - d(0));  // odd non-isotropic
      for (std::size_t i = 0; i + 1 < n; ++i) roots.push_back(d(i) - d(i + 1));
      roots.push_back(d(n - 1) - e(0));  // grey
      for (std::size_t i = 0; i + 1 < m; ++i) roots.push_back(e(i) - e(i + 1));
      roots.push_back(e(m - 1));
      break;

    case Family::osp_2_2n_2:
      roots.push_back(k(1) - Rat(2) * d(0));
      for (std::size_t i = 0; i + 1 < n; ++i) roots.push_back(d(i) - d(i + 1));
      roots.push_back(d(n - 1));  // odd non-isotropic
      break;

    case Family::sl_1_2n1_4:
      roots.push_back(k(Rat(1, 2)) - d(0));  // odd non-isotropic
      for (std::size_t i = 0; i + 1 < n; ++i) roots.push_back(d(i) - d(i + 1));
      roots.push_back(d(n - 1));  // odd non-isotropic
      break;
  }
  return roots;
}

AffinizationData affinization_data(const FamilySpec& spec) {
  auto roots = simple_roots(spec);
  AffinizationData out;
  out.finite_roots.assign(roots.begin() + 1, roots.end());
  // delta is the pure null part of alpha_0; gamma = delta - alpha_0.
  WeightVector delta(roots[0].e_dim(), roots[0].d_dim());
  delta.k_coeff = roots[0].k_coeff;
  out.delta = delta;
  out.gamma = delta - roots[0];
  return out;
}

}  // namespace vgk
