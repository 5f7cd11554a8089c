#ifndef VOGANKIT_GAUSS_HPP
#define VOGANKIT_GAUSS_HPP

#include "vogankit/rational.hpp"

namespace vgk {

/// Exact scalar in Q(i).  The imaginary unit is formal: i*i = -1.
/// Needed because an order-4 automorphism has eigenvalues {1, i, -1, -i}.
struct Gauss {
  Rat re{0};
  Rat im{0};

  Gauss() = default;
  Gauss(Rat r) : re(std::move(r)) {}
  Gauss(int r) : re(r) {}
  Gauss(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static Gauss i() { return Gauss(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Gauss conj() const { return {re, -im}; }
  Rat norm2() const { return re * re + im * im; }

  Gauss operator-() const { return {-re, -im}; }
  Gauss& operator+=(const Gauss& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gauss& operator-=(const Gauss& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(const Gauss& a, const Gauss& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Gauss& operator*=(const Gauss& o) { return *this = *this * o; }
  friend Gauss operator/(const Gauss& a, const Gauss& b) {
    Rat n = b.norm2();
    if (n == 0) throw error("division by zero in Q(i)");
    Gauss p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  friend bool operator==(const Gauss& a, const Gauss& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }
};

inline std::string gauss_to_string(const Gauss& g) {
  if (g.im == 0) return rat_to_string(g.re);
  std::string s;
  if (g.re != 0) s = rat_to_string(g.re) + (g.im > 0 ? "+" : "");
  if (g.im == 1)
    s += "i";
  else if (g.im == -1)
    s += "-i";
  else
    s += rat_to_string(g.im) + "i";
  return s;
}

/// exp(2*pi*i*k/m) for m in {1,2,4}; these are the only orders we grade by.
inline Gauss root_of_unity(int k, int m) {
  if (m != 1 && m != 2 && m != 4)
    throw order_error("only automorphism orders 1, 2, 4 are representable in Q(i)");
  k = ((k % m) + m) % m;
  int quarter = k * (4 / m);  // position on {1, i, -1, -i}
  switch (quarter) {
    case 0: return Gauss(1);
    case 1: return Gauss::i();
    case 2: return Gauss(-1);
    default: return -Gauss::i();
  }
}

}  // namespace vgk

#endif
