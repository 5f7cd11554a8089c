#ifndef VOGANKIT_ROOTSPACE_HPP
#define VOGANKIT_ROOTSPACE_HPP

#include <vector>

#include "vogankit/family.hpp"
#include "vogankit/weight.hpp"

namespace vgk {

/// Affine simple-root list of the family, index 0 = the added lowest root.
/// The e/delta realization per family (recorded as catalog data):
///
///   sl(2m|2n)^2      [k-e1-e2, e1-e2, ..., e_{m-1}-e_m, e_m-d1,
///                     d1-d2, ..., d_{n-2}-d_{n-1}, d_{n-1}-d_n, d_{n-1}+d_n]
///   sl(2m+1|2n)^2    [k-2e1, e-chain, e_m-d1, d-chain, d_{n-1}-d_n, d_{n-1}+d_n]
///   sl(2m+1|2n+1)^2  [k-2e1, e-chain, e_m-d1, d-chain, 2d_n]
///   sl(2|2n)^2       [k-d1-d2, d1-d2, d-chain, d_n-e1, e1-e2, e1+e2]
///   sl(2|2n+1)^2     [k-d1-d2, d1-d2, d-chain, d_n-e1, 2e1]
///   osp(2m|2n)^2     [k/2-d1, d-chain, d_n-e1, e-chain, e_m]
///   osp(2|2n)^2      [k-2d1, d-chain, d_n]
///   sl(1|2n+1)^4     [k/2-d1, d-chain, d_n]
std::vector<WeightVector> simple_roots(const FamilySpec& spec);

/// gamma (lowest-weight datum) and the finite simple system such that
/// affinize(finite, gamma, delta) reproduces simple_roots(spec).
/// delta is the pure null vector the marks sum to.
struct AffinizationData {
  std::vector<WeightVector> finite_roots;
  WeightVector gamma;
  WeightVector delta;
};
AffinizationData affinization_data(const FamilySpec& spec);

}  // namespace vgk

#endif
