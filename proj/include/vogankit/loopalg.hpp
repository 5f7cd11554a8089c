#ifndef VOGANKIT_LOOPALG_HPP
#define VOGANKIT_LOOPALG_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vogankit/gauss.hpp"

namespace vgk {

enum class MatParity { even, odd, mixed };

/// Square matrix over Q(i) in gl(p|q) block form: a is p x p, d is q x q,
/// b and c the off-diagonal blocks.
struct SuperMatrix {
  int p = 0, q = 0;
  std::vector<Gauss> entries;  // row-major, (p+q)^2

  SuperMatrix() = default;
  SuperMatrix(int p_, int q_) : p(p_), q(q_), entries(std::size_t(p_ + q_) * (p_ + q_)) {}
  static SuperMatrix unit(int p, int q, int i, int j);

  int dim() const { return p + q; }
  Gauss& at(int i, int j) { return entries[std::size_t(i) * dim() + j]; }
  const Gauss& at(int i, int j) const { return entries[std::size_t(i) * dim() + j]; }

  bool is_zero() const;
  MatParity parity() const;
  SuperMatrix even_part() const;
  SuperMatrix odd_part() const;

  /// str = tr(a) - tr(d)
  Gauss supertrace() const;
  SuperMatrix supertranspose() const;

  SuperMatrix& operator+=(const SuperMatrix& o);
  SuperMatrix& operator-=(const SuperMatrix& o);
  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator*(const Gauss& s, SuperMatrix a);
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    return a.p == b.p && a.q == b.q && a.entries == b.entries;
  }
};

/// Supercommutator, extended bilinearly over the even/odd decomposition.
SuperMatrix sbracket(const SuperMatrix& x, const SuperMatrix& y);

/// Invariant form (x,y) = str(xy).
Gauss strform(const SuperMatrix& x, const SuperMatrix& y);

using LinearMap = std::function<SuperMatrix(const SuperMatrix&)>;

/// Z_m eigenspace decomposition of span(basis) under sigma.
struct GradedDecomposition {
  int order = 1;
  int p = 0, q = 0;
  std::vector<std::vector<SuperMatrix>> components;  // parity-homogeneous bases

  std::size_t total_dim() const;
  std::vector<SuperMatrix> component_basis(int k, MatParity par) const;
  /// Exact membership test: x in span(components[k mod m]).
  bool contains(int k, const SuperMatrix& x) const;
};

/// Checks sigma^m = id and bracket preservation on basis pairs, then splits
/// into eigenspaces via the projections (1/m) sum_j zeta^{-kj} sigma^j.
GradedDecomposition grade(const std::vector<SuperMatrix>& basis, const LinearMap& sigma, int m);

struct LoopContext {
  GradedDecomposition dec;
  int window = 3;  // Laurent degrees live in [-window, window]

  friend bool operator==(const LoopContext& a, const LoopContext& b) {
    return a.window == b.window && a.dec.order == b.dec.order && a.dec.p == b.dec.p &&
           a.dec.q == b.dec.q;
  }
};

/// Finite sum of t^k (x) matrix terms plus central and derivation coordinates.
struct LoopElement {
  const LoopContext* ctx = nullptr;
  std::map<int, SuperMatrix> terms;
  Gauss central;  // coefficient of c
  Gauss deriv;    // coefficient of d

  /// Degree-k term must lie in G_{k mod m}; throws otherwise.
  void validate() const;
  bool is_zero() const;
  MatParity parity() const;

  LoopElement& operator+=(const LoopElement& o);
  LoopElement& operator-=(const LoopElement& o);
  friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
  friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
  friend LoopElement operator*(const Gauss& s, LoopElement a);
  friend bool operator==(const LoopElement& a, const LoopElement& b);
};

LoopElement loop_zero(const LoopContext& ctx);
LoopElement loop_term(const LoopContext& ctx, int degree, SuperMatrix x);
LoopElement loop_central(const LoopContext& ctx, Gauss coeff = Gauss(1));
LoopElement loop_deriv(const LoopContext& ctx, Gauss coeff = Gauss(1));

/// Affine bracket: supercommutator on matrix parts, derivation action, and
/// central term sum_a a * delta_{a,-b} * str(x_a y_b).  c is central.
LoopElement loop_bracket(const LoopElement& x, const LoopElement& y);

/// B(x,y) = lambda * sum_a str(x_a y_{-a}) + x_c y_d + x_d y_c.
/// c and d pair only with each other, value 1.
Gauss affine_form(const LoopElement& x, const LoopElement& y, const Rat& lambda = Rat(1));

struct CartanReport {
  bool order_ok = false;
  bool symmetric = false;
  bool positive_definite = false;
  std::vector<Rat> leading_minors;
  bool preserves_form = false;
  bool sign_table_ok = false;
  bool odd_isotropy_ok = false;
  bool ok() const {
    return order_ok && symmetric && positive_definite && preserves_form && sign_table_ok &&
           odd_isotropy_ok;
  }
};

using BilinearForm = std::function<Gauss(const SuperMatrix&, const SuperMatrix&)>;

/// Checks on B_theta(X,Y) = -B(X, theta Y): symmetry, definiteness by leading
/// minors of the basis Gram matrix, theta-invariance of B, the k0/p0 bracket
/// sign table, and isotropy of odd basis vectors.
CartanReport cartan_involution_check(const std::vector<SuperMatrix>& basis, const LinearMap& theta,
                                     const BilinearForm& B, int declared_order = 2);

// ---- desk-scale models ----

struct LoopModel {
  std::string name;
  int p = 0, q = 0;
  int twist = 2;
  std::vector<SuperMatrix> basis;  // of sl(p|q)
  LinearMap sigma;
};

std::vector<SuperMatrix> sl_basis(int p, int q);

/// Known models: "sl(2|2)^2" (conjugation by diag(1,-1,1,-1)) and
/// "sl(1|3)^4" (negative supertranspose).
LoopModel loop_model(const std::string& name);
std::vector<std::string> loop_model_names();

}  // namespace vgk

#endif
