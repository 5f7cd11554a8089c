#include "vogankit/diagram.hpp"

#include <numeric>

#include "vogankit/rootspace.hpp"

namespace vgk {

std::string color_name(Color c) {
  switch (c) {
    case Color::white: return "white";
    case Color::grey: return "grey";
    case Color::black: return "black";
  }
  throw error("unreachable color tag");
}

std::string parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

DynkinDiagram::DynkinDiagram(std::vector<Vertex> vertices, RatMatrix gram,
                             std::optional<FamilySpec> family)
    : vertices_(std::move(vertices)), gram_(std::move(gram)), family_(family) {
  const std::size_t n = vertices_.size();
  if (gram_.size() != n) throw shape_error("gram size does not match vertex count");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw shape_error("gram is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw shape_error("gram is not symmetric");
    const Vertex& v = vertices_[i];
    if (v.index != int(i)) throw shape_error("vertex indices must be 0..n-1 in order");
    if (v.mark <= 0) throw shape_error("marks must be positive");
    bool diag_zero = gram_[i][i] == 0;
    switch (v.color) {
      case Color::white:
        if (v.parity != Parity::even) throw shape_error("white vertex must be even");
        if (diag_zero) throw shape_error("white vertex cannot be isotropic");
        break;
      case Color::grey:
        if (v.parity != Parity::odd || !diag_zero)
          throw shape_error("grey vertex must be odd isotropic");
        break;
      case Color::black:
        if (v.parity != Parity::odd || diag_zero)
          throw shape_error("black vertex must be odd non-isotropic");
        break;
    }
  }
}

bool DynkinDiagram::equal_vertices(const DynkinDiagram& a, const DynkinDiagram& b) {
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    const Vertex &x = a.vertices_[i], &y = b.vertices_[i];
    if (x.parity != y.parity || x.color != y.color || x.mark != y.mark) return false;
  }
  return true;
}

std::vector<long> DynkinDiagram::marks() const {
  std::vector<long> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.mark);
  return out;
}

std::vector<long> DynkinDiagram::recompute_marks() const {
  auto ker = kernel_basis(gram_, size());
  if (ker.size() != 1)
    throw not_affine_error("gram corank is " + std::to_string(ker.size()) + ", expected 1");
  const auto& v = ker[0];
  // clear denominators, normalize sign, divide by gcd
  Int lcm_den = 1;
  for (const auto& x : v) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  std::vector<Int> w;
  for (const auto& x : v) w.push_back(numerator(x) * (lcm_den / denominator(x)));
  bool has_pos = false, has_neg = false;
  for (const auto& x : w) {
    if (x > 0) has_pos = true;
    if (x < 0) has_neg = true;
    if (x == 0) throw inconsistent_system_error("null vector has a zero entry");
  }
  if (has_pos && has_neg)
    throw inconsistent_system_error("null vector is not sign-definite");
  Int g = 0;
  for (auto& x : w) {
    if (has_neg) x = -x;
    g = boost::multiprecision::gcd(g, x);
  }
  std::vector<long> out;
  for (const auto& x : w) out.push_back(long(x / g));
  return out;
}

long DynkinDiagram::odd_mark_sum() const {
  long s = 0;
  for (const auto& v : vertices_)
    if (v.color != Color::white) s += v.mark;
  return s;
}

DynkinDiagram DynkinDiagram::permuted(const std::vector<int>& perm) const {
  const std::size_t n = size();
  if (perm.size() != n) throw shape_error("permutation size mismatch");
  std::vector<Vertex> vs(n);
  RatMatrix g(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i) {
    vs[i] = vertices_[perm[i]];
    vs[i].index = int(i);
    for (std::size_t j = 0; j < n; ++j) g[i][j] = gram_[perm[i]][perm[j]];
  }
  return DynkinDiagram(std::move(vs), std::move(g), family_);
}

DynkinDiagram from_simple_roots(const std::vector<WeightVector>& roots) {
  const std::size_t n = roots.size();
  if (n == 0) throw shape_error("empty simple system");
  for (std::size_t i = 0; i < n; ++i) {
    if (roots[i].is_zero()) throw shape_error("zero vector in simple system");
    for (std::size_t j = 0; j < i; ++j)
      if (roots[i] == roots[j]) throw shape_error("repeated simple root");
  }
  RatMatrix gram(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = bilinear(roots[i], roots[j]);

  std::vector<Vertex> vs(n);
  for (std::size_t i = 0; i < n; ++i) {
    vs[i].index = int(i);
    vs[i].parity = weight_parity(roots[i]);
    if (gram[i][i] == 0) {
      if (vs[i].parity == Parity::even)
        throw shape_error("isotropic even root");
      vs[i].color = Color::grey;
    } else {
      vs[i].color = vs[i].parity == Parity::even ? Color::white : Color::black;
    }
  }
  DynkinDiagram d(std::move(vs), std::move(gram));
  auto marks = d.recompute_marks();
  std::vector<Vertex> vs2 = d.vertices();
  for (std::size_t i = 0; i < n; ++i) vs2[i].mark = marks[i];
  return DynkinDiagram(std::move(vs2), d.gram());
}

DynkinDiagram affinize(const std::vector<WeightVector>& finite_roots, const WeightVector& gamma,
                       const WeightVector& delta) {
  if (delta.is_zero()) throw shape_error("null root cannot be zero");
  // gamma must lie in the rational span of the finite simple system
  const std::size_t nf = finite_roots.size();
  if (nf == 0) throw shape_error("empty finite system");
  std::size_t dim = finite_roots[0].e_dim() + finite_roots[0].d_dim() + 1;
  RatMatrix a(dim, std::vector<Rat>(nf));
  std::vector<Rat> b(dim);
  auto flatten = [&](const WeightVector& w, std::size_t col, bool rhs) {
    std::size_t r = 0;
    for (const auto& c : w.e_coeffs) (rhs ? b[r] : a[r][col]) = c, ++r;
    for (const auto& c : w.d_coeffs) (rhs ? b[r] : a[r][col]) = c, ++r;
    (rhs ? b[r] : a[r][col]) = w.k_coeff;
  };
  for (std::size_t j = 0; j < nf; ++j) flatten(finite_roots[j], j, false);
  flatten(gamma, 0, true);
  if (!solve(a, b, nf)) throw lattice_error("gamma is not in the span of the finite system");

  std::vector<WeightVector> roots;
  roots.push_back(delta - gamma);
  roots.insert(roots.end(), finite_roots.begin(), finite_roots.end());
  return from_simple_roots(roots);
}

DynkinDiagram family_diagram(const FamilySpec& spec) {
  DynkinDiagram d = from_simple_roots(simple_roots(spec));
  d.set_family_tag(spec);
  return d;
}

}  // namespace vgk
