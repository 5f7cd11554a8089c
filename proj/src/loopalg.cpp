#include "vogankit/loopalg.hpp"

#include <algorithm>

#include "vogankit/linalg.hpp"

namespace vgk {

SuperMatrix SuperMatrix::unit(int p, int q, int i, int j) {
  SuperMatrix m(p, q);
  m.at(i, j) = Gauss(1);
  return m;
}

bool SuperMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Gauss& g) { return g.is_zero(); });
}

MatParity SuperMatrix::parity() const {
  bool has_even = false, has_odd = false;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      if (at(i, j).is_zero()) continue;
      bool diag_block = (i < p) == (j < p);
      (diag_block ? has_even : has_odd) = true;
    }
  if (has_even && has_odd) return MatParity::mixed;
  if (has_odd) return MatParity::odd;
  return MatParity::even;  // zero counts as even
}

SuperMatrix SuperMatrix::even_part() const {
  SuperMatrix m(p, q);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if ((i < p) == (j < p)) m.at(i, j) = at(i, j);
  return m;
}

SuperMatrix SuperMatrix::odd_part() const {
  SuperMatrix m(p, q);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      if ((i < p) != (j < p)) m.at(i, j) = at(i, j);
  return m;
}

Gauss SuperMatrix::supertrace() const {
  Gauss s;
  for (int i = 0; i < p; ++i) s += at(i, i);
  for (int i = p; i < dim(); ++i) s -= at(i, i);
  return s;
}

SuperMatrix SuperMatrix::supertranspose() const {
  // [[a,b],[c,d]] -> [[a^T, c^T], [-b^T, d^T]]
  SuperMatrix m(p, q);
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      Gauss v = at(j, i);
      if (j < p && i >= p) v = -v;  // the -b^T block
      m.at(i, j) = v;
    }
  return m;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
  if (p != o.p || q != o.q) throw shape_error("supermatrix block shape mismatch");
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
  return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
  if (p != o.p || q != o.q) throw shape_error("supermatrix block shape mismatch");
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] -= o.entries[i];
  return *this;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.p != b.p || a.q != b.q) throw shape_error("supermatrix block shape mismatch");
  SuperMatrix m(a.p, a.q);
  int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Gauss& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < n; ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

SuperMatrix operator*(const Gauss& s, SuperMatrix a) {
  for (auto& e : a.entries) e *= s;
  return a;
}

SuperMatrix sbracket(const SuperMatrix& x, const SuperMatrix& y) {
  // [x,y] = xy - (-1)^{|x||y|} yx on homogeneous parts, extended bilinearly.
  SuperMatrix x0 = x.even_part(), x1 = x.odd_part();
  SuperMatrix y0 = y.even_part(), y1 = y.odd_part();
  SuperMatrix r = x * y;  // sum over all parts of xy
  r -= y0 * x0;
  r -= y1 * x0;
  r -= y0 * x1;
  r += y1 * x1;  // odd-odd picks up the + sign
  return r;
}

Gauss strform(const SuperMatrix& x, const SuperMatrix& y) { return (x * y).supertrace(); }

// ---- grading ----

namespace {

// Gaussian elimination over Q(i) on coordinate rows; keeps an independent
// subset in row-echelon form.
class RowSpace {
 public:
  bool insert(std::vector<Gauss> v) {
    reduce(v);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!v[c].is_zero()) {
        Gauss inv = v[c];
        for (auto& x : v) x = x / inv;
        rows_.emplace_back(c, std::move(v));
        std::sort(rows_.begin(), rows_.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return true;
      }
    }
    return false;  // dependent
  }

  bool contains(std::vector<Gauss> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Gauss& g) { return g.is_zero(); });
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(std::vector<Gauss>& v) const {
    for (const auto& [lead, row] : rows_) {
      if (v[lead].is_zero()) continue;
      Gauss f = v[lead];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * row[c];
    }
  }
  std::vector<std::pair<std::size_t, std::vector<Gauss>>> rows_;
};

std::vector<Gauss> flatten(const SuperMatrix& m) { return m.entries; }

}  // namespace

std::size_t GradedDecomposition::total_dim() const {
  std::size_t s = 0;
  for (const auto& c : components) s += c.size();
  return s;
}

std::vector<SuperMatrix> GradedDecomposition::component_basis(int k, MatParity par) const {
  std::vector<SuperMatrix> out;
  for (const auto& v : components[((k % order) + order) % order])
    if (v.parity() == par) out.push_back(v);
  return out;
}

bool GradedDecomposition::contains(int k, const SuperMatrix& x) const {
  RowSpace rs;
  for (const auto& v : components[((k % order) + order) % order]) rs.insert(flatten(v));
  return rs.contains(flatten(x));
}

GradedDecomposition grade(const std::vector<SuperMatrix>& basis, const LinearMap& sigma, int m) {
  if (basis.empty()) throw shape_error("empty basis");
  for (const auto& b : basis) {
    SuperMatrix x = b;
    for (int j = 0; j < m; ++j) x = sigma(x);
    if (!(x == b)) throw order_error("sigma^m is not the identity");
  }
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (!(sigma(sbracket(a, b)) == sbracket(sigma(a), sigma(b))))
        throw order_error("sigma does not preserve the bracket");

  GradedDecomposition dec;
  dec.order = m;
  dec.p = basis[0].p;
  dec.q = basis[0].q;
  dec.components.resize(m);

  Gauss inv_m = Gauss(Rat(1, m));
  for (int k = 0; k < m; ++k) {
    RowSpace rs;
    // project even and odd parts separately so component bases stay
    // parity-homogeneous (sigma preserves parity)
    for (const auto& b : basis) {
      for (SuperMatrix part : {b.even_part(), b.odd_part()}) {
        if (part.is_zero()) continue;
        SuperMatrix proj(dec.p, dec.q);
        SuperMatrix pow = part;
        for (int j = 0; j < m; ++j) {
          proj += root_of_unity(-k * j, m) * pow;
          pow = sigma(pow);
        }
        proj = inv_m * proj;
        if (proj.is_zero()) continue;
        if (rs.insert(flatten(proj))) dec.components[k].push_back(proj);
      }
    }
  }

  RowSpace full;
  for (const auto& b : basis) full.insert(flatten(b));
  if (dec.total_dim() != full.rank())
    throw decomposition_error("eigenspaces do not fill the algebra");
  return dec;
}

// ---- loop elements ----

namespace {
void prune(LoopElement& x) {
  for (auto it = x.terms.begin(); it != x.terms.end();)
    it = it->second.is_zero() ? x.terms.erase(it) : std::next(it);
}
void check_ctx(const LoopElement& a, const LoopElement& b) {
  if (a.ctx == nullptr || b.ctx == nullptr) throw context_error("loop element without context");
  if (a.ctx != b.ctx && !(*a.ctx == *b.ctx))
    throw context_error("loop elements from different decompositions");
}
}  // namespace

void LoopElement::validate() const {
  if (ctx == nullptr) throw context_error("loop element without context");
  for (const auto& [deg, mat] : terms) {
    if (deg < -ctx->window || deg > ctx->window)
      throw error("loop degree outside the truncation window");
    if (!ctx->dec.contains(deg, mat))
      throw decomposition_error("degree-" + std::to_string(deg) +
                                " term is not in the matching graded component");
  }
}

bool LoopElement::is_zero() const {
  if (!central.is_zero() || !deriv.is_zero()) return false;
  return std::all_of(terms.begin(), terms.end(),
                     [](const auto& kv) { return kv.second.is_zero(); });
}

MatParity LoopElement::parity() const {
  bool has_even = !central.is_zero() || !deriv.is_zero();
  bool has_odd = false;
  for (const auto& [deg, mat] : terms) {
    switch (mat.parity()) {
      case MatParity::even: has_even = has_even || !mat.is_zero(); break;
      case MatParity::odd: has_odd = true; break;
      case MatParity::mixed: return MatParity::mixed;
    }
  }
  if (has_even && has_odd) return MatParity::mixed;
  return has_odd ? MatParity::odd : MatParity::even;
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
  check_ctx(*this, o);
  for (const auto& [deg, mat] : o.terms) {
    auto [it, fresh] = terms.try_emplace(deg, mat);
    if (!fresh) it->second += mat;
  }
  central += o.central;
  deriv += o.deriv;
  prune(*this);
  return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o) {
  check_ctx(*this, o);
  for (const auto& [deg, mat] : o.terms) {
    auto [it, fresh] = terms.try_emplace(deg, Gauss(-1) * mat);
    if (!fresh) it->second -= mat;
  }
  central -= o.central;
  deriv -= o.deriv;
  prune(*this);
  return *this;
}

LoopElement operator*(const Gauss& s, LoopElement a) {
  for (auto& [deg, mat] : a.terms) mat = s * mat;
  a.central *= s;
  a.deriv *= s;
  prune(a);
  return a;
}

bool operator==(const LoopElement& a, const LoopElement& b) {
  LoopElement d = a;
  d -= b;
  return d.is_zero();
}

LoopElement loop_zero(const LoopContext& ctx) {
  LoopElement e;
  e.ctx = &ctx;
  return e;
}

LoopElement loop_term(const LoopContext& ctx, int degree, SuperMatrix x) {
  LoopElement e = loop_zero(ctx);
  if (!x.is_zero()) e.terms.emplace(degree, std::move(x));
  e.validate();
  return e;
}

LoopElement loop_central(const LoopContext& ctx, Gauss coeff) {
  LoopElement e = loop_zero(ctx);
  e.central = std::move(coeff);
  return e;
}

LoopElement loop_deriv(const LoopContext& ctx, Gauss coeff) {
  LoopElement e = loop_zero(ctx);
  e.deriv = std::move(coeff);
  return e;
}

LoopElement loop_bracket(const LoopElement& x, const LoopElement& y) {
  check_ctx(x, y);
  const LoopContext& ctx = *x.ctx;
  LoopElement r = loop_zero(ctx);
  for (const auto& [a, xa] : x.terms) {
    for (const auto& [b, yb] : y.terms) {
      SuperMatrix br = sbracket(xa, yb);
      if (!br.is_zero()) {
        if (a + b < -ctx.window || a + b > ctx.window)
          throw error("bracket leaves the degree window");
        auto [it, fresh] = r.terms.try_emplace(a + b, br);
        if (!fresh) it->second += br;
      }
      if (a == -b) r.central += Gauss(Rat(a)) * strform(xa, yb);
    }
  }
  // derivation action: [d, y (x) t^b] = b * y (x) t^b
  if (!x.deriv.is_zero())
    for (const auto& [b, yb] : y.terms) {
      auto [it, fresh] = r.terms.try_emplace(b, (x.deriv * Gauss(Rat(b))) * yb);
      if (!fresh) it->second += (x.deriv * Gauss(Rat(b))) * yb;
    }
  if (!y.deriv.is_zero())
    for (const auto& [a, xa] : x.terms) {
      auto [it, fresh] = r.terms.try_emplace(a, (Gauss(-1) * y.deriv * Gauss(Rat(a))) * xa);
      if (!fresh) it->second += (Gauss(-1) * y.deriv * Gauss(Rat(a))) * xa;
    }
  prune(r);
  return r;
}

Gauss affine_form(const LoopElement& x, const LoopElement& y, const Rat& lambda) {
  check_ctx(x, y);
  Gauss s;
  for (const auto& [a, xa] : x.terms) {
    auto it = y.terms.find(-a);
    if (it != y.terms.end()) s += strform(xa, it->second);
  }
  s = Gauss(lambda) * s;
  s += x.central * y.deriv + x.deriv * y.central;
  return s;
}

// ---- Cartan involution report ----

CartanReport cartan_involution_check(const std::vector<SuperMatrix>& basis, const LinearMap& theta,
                                     const BilinearForm& B, int declared_order) {
  CartanReport rep;
  if (declared_order != 2 && declared_order != 4)
    throw order_error("theta must have declared order 2 or 4");
  rep.order_ok = true;
  for (const auto& b : basis) {
    SuperMatrix x = b;
    for (int j = 0; j < declared_order; ++j) x = theta(x);
    if (!(x == b)) rep.order_ok = false;
  }

  auto Btheta = [&](const SuperMatrix& x, const SuperMatrix& y) { return -B(x, theta(y)); };

  const std::size_t n = basis.size();
  std::vector<std::vector<Gauss>> gram(n, std::vector<Gauss>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = Btheta(basis[i], basis[j]);

  rep.symmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) rep.symmetric = false;

  // leading principal minors via fraction elimination; entries must be real
  rep.positive_definite = true;
  bool all_real = true;
  for (const auto& row : gram)
    for (const auto& g : row) all_real = all_real && g.is_real();
  if (!all_real) {
    rep.positive_definite = false;
  } else {
    for (std::size_t k = 1; k <= n; ++k) {
      RatMatrix sub(k, std::vector<Rat>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = gram[i][j].re;
      // determinant by Gaussian elimination
      Rat det = 1;
      for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && sub[piv][col] == 0) ++piv;
        if (piv == k) {
          det = 0;
          break;
        }
        if (piv != col) {
          std::swap(sub[piv], sub[col]);
          det = -det;
        }
        det *= sub[col][col];
        for (std::size_t r = col + 1; r < k; ++r) {
          Rat f = sub[r][col] / sub[col][col];
          for (std::size_t c = col; c < k; ++c) sub[r][c] -= f * sub[col][c];
        }
      }
      rep.leading_minors.push_back(det);
      if (det <= 0) rep.positive_definite = false;
    }
  }

  rep.preserves_form = true;
  for (const auto& x : basis)
    for (const auto& y : basis)
      if (B(theta(x), theta(y)) != B(x, y)) rep.preserves_form = false;

  // k0/p0 split of the even part via symmetrization under theta
  std::vector<SuperMatrix> k0, p0;
  for (const auto& b : basis) {
    if (b.parity() != MatParity::even) continue;
    SuperMatrix plus = b + theta(b), minus = b - theta(b);
    if (!plus.is_zero()) k0.push_back(plus);
    if (!minus.is_zero()) p0.push_back(minus);
  }
  rep.sign_table_ok = true;
  auto check_sign = [&](const SuperMatrix& z, int sign) {
    for (const auto& x : basis)
      for (const auto& y : basis) {
        Gauss lhs = Btheta(x, sbracket(z, y));
        Gauss rhs = Btheta(sbracket(z, x), y);
        if (!(lhs == (sign < 0 ? -rhs : rhs))) rep.sign_table_ok = false;
      }
  };
  for (const auto& z : k0) check_sign(z, -1);
  for (const auto& z : p0) check_sign(z, +1);

  rep.odd_isotropy_ok = true;
  for (const auto& b : basis)
    if (b.parity() == MatParity::odd && !B(b, b).is_zero()) rep.odd_isotropy_ok = false;

  return rep;
}

// ---- models ----

std::vector<SuperMatrix> sl_basis(int p, int q) {
  std::vector<SuperMatrix> out;
  int n = p + q;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) out.push_back(SuperMatrix::unit(p, q, i, j));
  for (int i = 0; i + 1 < n; ++i) {
    // supertraceless diagonal: E_ii -/+ E_{i+1,i+1} depending on the block
    SuperMatrix h(p, q);
    h.at(i, i) = Gauss(1);
    bool cross = (i < p) != (i + 1 < p);
    h.at(i + 1, i + 1) = cross ? Gauss(1) : Gauss(-1);
    out.push_back(std::move(h));
  }
  return out;
}

LoopModel loop_model(const std::string& name) {
  LoopModel m;
  m.name = name;
  if (name == "sl(2|2)^2") {
    m.p = m.q = 2;
    m.twist = 2;
    m.basis = sl_basis(2, 2);
    SuperMatrix D(2, 2);
    D.at(0, 0) = Gauss(1);
    D.at(1, 1) = Gauss(-1);
    D.at(2, 2) = Gauss(1);
    D.at(3, 3) = Gauss(-1);
    m.sigma = [D](const SuperMatrix& x) { return D * x * D; };  // D = D^{-1}
  } else if (name == "sl(1|3)^4") {
    m.p = 1;
    m.q = 3;
    m.twist = 4;
    m.basis = sl_basis(1, 3);
    m.sigma = [](const SuperMatrix& x) { return Gauss(-1) * x.supertranspose(); };
  } else {
    throw error("unknown loop model: " + name);
  }
  return m;
}

std::vector<std::string> loop_model_names() { return {"sl(2|2)^2", "sl(1|3)^4"}; }

}  // namespace vgk
