#include "vogankit/vogan.hpp"

#include <algorithm>

namespace vgk {

std::vector<int> Involution::fixed_points() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] == int(i)) out.push_back(int(i));
  return out;
}

std::vector<std::pair<int, int>> Involution::two_orbits() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] > int(i)) out.emplace_back(int(i), perm[i]);
  return out;
}

namespace {

bool preserves_structure(const DynkinDiagram& d, const std::vector<int>& p) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex &v = d.vertex(i), &w = d.vertex(p[i]);
    if (v.parity != w.parity || v.color != w.color || v.mark != w.mark) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d.gram()[p[i]][p[j]] != d.gram()[i][j]) return false;
  return true;
}

// Backtracking search over vertex images; diagrams here are tiny.
void search_automorphisms(const DynkinDiagram& d, std::vector<int>& p, std::vector<bool>& used,
                          std::size_t pos, std::vector<std::vector<int>>& out) {
  const std::size_t n = d.size();
  if (pos == n) {
    out.push_back(p);
    return;
  }
  const Vertex& v = d.vertex(pos);
  for (std::size_t img = 0; img < n; ++img) {
    if (used[img]) continue;
    const Vertex& w = d.vertex(img);
    if (v.parity != w.parity || v.color != w.color || v.mark != w.mark) continue;
    if (d.gram()[img][img] != d.gram()[pos][pos]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < pos && ok; ++j)
      ok = d.gram()[p[j]][img] == d.gram()[j][pos];
    if (!ok) continue;
    used[img] = true;
    p[pos] = int(img);
    search_automorphisms(d, p, used, pos + 1, out);
    used[img] = false;
  }
}

}  // namespace

void validate_involution(const DynkinDiagram& d, const Involution& inv) {
  const std::size_t n = d.size();
  if (inv.perm.size() != n) throw shape_error("involution size mismatch");
  std::vector<bool> seen(n, false);
  for (auto x : inv.perm) {
    if (x < 0 || std::size_t(x) >= n) throw shape_error("involution entry out of range");
    if (seen[x]) throw shape_error("involution is not a permutation");
    seen[x] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (inv.perm[inv.perm[i]] != int(i)) throw shape_error("permutation is not an involution");
  if (!preserves_structure(d, inv.perm))
    throw shape_error("involution does not preserve the diagram structure");
}

std::vector<std::vector<int>> automorphisms_full(const DynkinDiagram& d) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(d.size());
  std::vector<bool> used(d.size(), false);
  search_automorphisms(d, p, used, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Involution> automorphisms(const DynkinDiagram& d) {
  std::vector<Involution> out;
  for (auto& p : automorphisms_full(d)) {
    bool order2 = true;
    for (std::size_t i = 0; i < p.size() && order2; ++i) order2 = p[p[i]] == int(i);
    if (order2) out.push_back(Involution{std::move(p)});
  }
  return out;
}

std::vector<SItem> s_set(const DynkinDiagram& diagram, const std::set<int>& painted,
                         const Involution& d) {
  validate_involution(diagram, d);
  for (int v : painted) {
    if (v < 0 || std::size_t(v) >= diagram.size()) throw painting_error("painted index out of range");
    if (d.perm[v] != v) throw painting_error("painted vertex is moved by d");
  }
  std::vector<SItem> items;
  for (int v : painted)
    items.push_back({SItem::Kind::painted_vertex, v, -1, diagram.vertex(v).mark});
  for (auto [i, j] : d.two_orbits()) {
    Color ci = diagram.vertex(i).color, cj = diagram.vertex(j).color;
    if (ci != cj) throw error("mixed-color 2-orbit; involution validation should forbid this");
    bool adj = diagram.adjacent(i, j);
    bool in_s = (ci == Color::white && adj) || (ci == Color::grey && !adj);
    if (in_s)
      items.push_back({SItem::Kind::orbit, i, j,
                       diagram.vertex(i).mark + diagram.vertex(j).mark});
  }
  std::sort(items.begin(), items.end());
  return items;
}

VoganVerdict is_vogan(const DynkinDiagram& diagram, const std::set<int>& painted,
                      const Involution& d) {
  VoganVerdict v;
  v.s_items = s_set(diagram, painted, d);
  for (const auto& it : v.s_items) v.s_sum += it.label_sum;
  v.grey_fixed = true;
  for (std::size_t i = 0; i < diagram.size(); ++i)
    if (diagram.vertex(i).color == Color::grey && d.perm[i] != int(i)) v.grey_fixed = false;
  v.odd_sum = v.s_sum % 2 != 0;
  v.valid = v.grey_fixed || v.odd_sum;  // inclusive OR, as in the definition
  return v;
}

bool VoganDiagram::paints_grey() const {
  for (int v : painted)
    if (diagram.vertex(v).color == Color::grey) return true;
  return false;
}

std::vector<int> encode_cd(std::size_t nverts, const std::set<int>& painted, const Involution& d) {
  std::vector<int> code(nverts, 0);
  for (int v : painted) code[v] = 1;
  code.insert(code.end(), d.perm.begin(), d.perm.end());
  return code;
}

std::pair<std::set<int>, Involution> conjugate_cd(const std::set<int>& painted,
                                                  const Involution& d,
                                                  const std::vector<int>& sigma) {
  const std::size_t n = sigma.size();
  Involution nd;
  nd.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) nd.perm[sigma[i]] = sigma[d.perm[i]];
  std::set<int> np;
  for (int v : painted) np.insert(sigma[v]);
  return {np, nd};
}

std::vector<VoganDiagram> enumerate_vogan(const DynkinDiagram& diagram, bool up_to_equivalence) {
  auto invs = automorphisms(diagram);
  auto auts = automorphisms_full(diagram);

  std::vector<VoganDiagram> out;
  for (const auto& d : invs) {
    auto fix = d.fixed_points();
    const std::size_t nf = fix.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << nf); ++mask) {
      std::set<int> painted;
      for (std::size_t b = 0; b < nf; ++b)
        if (mask & (std::size_t(1) << b)) painted.insert(fix[b]);
      auto verdict = is_vogan(diagram, painted, d);
      if (!verdict.valid) continue;
      if (up_to_equivalence) {
        auto self = encode_cd(diagram.size(), painted, d);
        bool least = true;
        for (const auto& sigma : auts) {
          auto [np, nd] = conjugate_cd(painted, d, sigma);
          if (encode_cd(diagram.size(), np, nd) < self) {
            least = false;
            break;
          }
        }
        if (!least) continue;
      }
      out.push_back({diagram, d, std::move(painted), std::move(verdict)});
    }
  }
  std::sort(out.begin(), out.end(), [&](const VoganDiagram& a, const VoganDiagram& b) {
    return encode_cd(diagram.size(), a.painted, a.d) < encode_cd(diagram.size(), b.painted, b.d);
  });
  return out;
}

}  // namespace vgk
