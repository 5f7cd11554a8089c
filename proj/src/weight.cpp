#include "vogankit/weight.hpp"

namespace vgk {

namespace {
void check_same_shape(const WeightVector& a, const WeightVector& b) {
  if (a.e_dim() != b.e_dim() || a.d_dim() != b.d_dim())
    throw shape_error("weight vectors live in different ambient spaces");
}
}  // namespace

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < e_coeffs.size(); ++i) e_coeffs[i] += o.e_coeffs[i];
  for (std::size_t i = 0; i < d_coeffs.size(); ++i) d_coeffs[i] += o.d_coeffs[i];
  k_coeff += o.k_coeff;
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < e_coeffs.size(); ++i) e_coeffs[i] -= o.e_coeffs[i];
  for (std::size_t i = 0; i < d_coeffs.size(); ++i) d_coeffs[i] -= o.d_coeffs[i];
  k_coeff -= o.k_coeff;
  return *this;
}

WeightVector& WeightVector::operator*=(const Rat& s) {
  for (auto& c : e_coeffs) c *= s;
  for (auto& c : d_coeffs) c *= s;
  k_coeff *= s;
  return *this;
}

WeightVector WeightVector::operator-() const {
  WeightVector r = *this;
  r *= Rat(-1);
  return r;
}

Rat bilinear(const WeightVector& a, const WeightVector& b) {
  check_same_shape(a, b);
  Rat sum = 0;
  for (std::size_t i = 0; i < a.e_coeffs.size(); ++i) sum += a.e_coeffs[i] * b.e_coeffs[i];
  for (std::size_t i = 0; i < a.d_coeffs.size(); ++i) sum -= a.d_coeffs[i] * b.d_coeffs[i];
  // k is null: no contribution
  return sum;
}

Parity weight_parity(const WeightVector& v) {
  Rat sum = 0;
  for (const auto& c : v.d_coeffs) sum += c;
  if (denominator(sum) != 1)
    throw error("non-integral delta-coefficient sum; parity undefined");
  return (numerator(sum) % 2 == 0) ? Parity::even : Parity::odd;
}

WeightVector basis_e(std::size_t i, std::size_t m, std::size_t n) {
  if (i >= m) throw shape_error("e-basis index out of range");
  WeightVector v(m, n);
  v.e_coeffs[i] = 1;
  return v;
}

WeightVector basis_d(std::size_t i, std::size_t m, std::size_t n) {
  if (i >= n) throw shape_error("delta-basis index out of range");
  WeightVector v(m, n);
  v.d_coeffs[i] = 1;
  return v;
}

WeightVector basis_k(std::size_t m, std::size_t n, const Rat& coeff) {
  WeightVector v(m, n);
  v.k_coeff = coeff;
  return v;
}

}  // namespace vgk
