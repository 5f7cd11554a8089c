#ifndef VOGANKIT_WEIGHT_HPP
#define VOGANKIT_WEIGHT_HPP

#include <vector>

#include "vogankit/rational.hpp"

namespace vgk {

enum class Parity { even, odd };

/// Vector in the e/delta weight space plus a null coordinate k.
/// Basis rules of the bilinear form: (e_i,e_j) = delta_ij,
/// (d_i,d_j) = -delta_ij, (e_i,d_j) = 0, (k, anything) = 0.
struct WeightVector {
  std::vector<Rat> e_coeffs;
  std::vector<Rat> d_coeffs;
  Rat k_coeff{0};

  WeightVector() = default;
  WeightVector(std::size_t m, std::size_t n) : e_coeffs(m), d_coeffs(n) {}

  std::size_t e_dim() const { return e_coeffs.size(); }
  std::size_t d_dim() const { return d_coeffs.size(); }

  bool is_zero() const {
    if (k_coeff != 0) return false;
    for (const auto& c : e_coeffs)
      if (c != 0) return false;
    for (const auto& c : d_coeffs)
      if (c != 0) return false;
    return true;
  }

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  WeightVector& operator*=(const Rat& s);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(const Rat& s, WeightVector v) { return v *= s; }
  WeightVector operator-() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.e_coeffs == b.e_coeffs && a.d_coeffs == b.d_coeffs && a.k_coeff == b.k_coeff;
  }
};

/// Exact evaluation of the indefinite form by the basis rules.
Rat bilinear(const WeightVector& a, const WeightVector& b);

/// Parity of a root in this formalism: odd iff the delta-coefficient sum is
/// an odd integer.  Rejects non-integral delta-coefficient sums.
Parity weight_parity(const WeightVector& v);

// convenience builders
WeightVector basis_e(std::size_t i, std::size_t m, std::size_t n);
WeightVector basis_d(std::size_t i, std::size_t m, std::size_t n);
WeightVector basis_k(std::size_t m, std::size_t n, const Rat& coeff = Rat(1));

}  // namespace vgk

#endif
