#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "vogankit/vogan.hpp"

using namespace vgk;

namespace {

DynkinDiagram path3() {
  std::vector<Vertex> vs(3);
  for (int i = 0; i < 3; ++i) vs[i].index = i;
  RatMatrix g = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  return DynkinDiagram(std::move(vs), std::move(g));
}

// 4-cycle with two non-adjacent grey vertices (0 and 2) swapped by an
// involution; used to exercise the odd-sum branch.
DynkinDiagram grey_cycle() {
  std::vector<Vertex> vs(4);
  for (int i = 0; i < 4; ++i) vs[i].index = i;
  vs[0].color = vs[2].color = Color::grey;
  vs[0].parity = vs[2].parity = Parity::odd;
  RatMatrix g = {{0, 1, 0, -1}, {1, 2, 1, 0}, {0, 1, 0, -1}, {-1, 0, -1, 2}};
  return DynkinDiagram(std::move(vs), std::move(g));
}

// Oracle: all structure preserving permutations by trying every one.
std::vector<std::vector<int>> brute_automorphisms(const DynkinDiagram& d) {
  const std::size_t n = d.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const Vertex &v = d.vertex(i), &w = d.vertex(p[i]);
      ok = v.parity == w.parity && v.color == w.color && v.mark == w.mark;
      for (std::size_t j = 0; j < n && ok; ++j) ok = d.gram()[p[i]][p[j]] == d.gram()[i][j];
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<VoganDiagram> brute_enumerate(const DynkinDiagram& diagram) {
  std::vector<VoganDiagram> out;
  for (const auto& p : brute_automorphisms(diagram)) {
    bool order2 = true;
    for (std::size_t i = 0; i < p.size(); ++i) order2 = order2 && p[p[i]] == int(i);
    if (!order2) continue;
    Involution d{p};
    auto fix = d.fixed_points();
    for (std::size_t mask = 0; mask < (std::size_t(1) << fix.size()); ++mask) {
      std::set<int> painted;
      for (std::size_t b = 0; b < fix.size(); ++b)
        if (mask & (std::size_t(1) << b)) painted.insert(fix[b]);
      auto verdict = is_vogan(diagram, painted, d);
      if (verdict.valid) out.push_back({diagram, d, painted, verdict});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("automorphism search agrees with brute force") {
  for (const auto& d : {path3(), grey_cycle(), family_diagram({Family::sl_2m_2n_2, 2, 2}),
                        family_diagram({Family::osp_2m_2n_2, 2, 2}),
                        family_diagram({Family::sl_1_2n1_4, 1, 2})}) {
    auto got = automorphisms_full(d);
    auto want = brute_automorphisms(d);
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("path automorphisms are the flip and identity") {
  auto a = automorphisms_full(path3());
  REQUIRE(a.size() == 2);
  CHECK(a[0] == std::vector<int>{0, 1, 2});
  CHECK(a[1] == std::vector<int>{2, 1, 0});
}

TEST_CASE("involution validation") {
  DynkinDiagram d = path3();
  CHECK_NOTHROW(validate_involution(d, Involution{{2, 1, 0}}));
  CHECK_THROWS_AS(validate_involution(d, Involution{{1, 2, 0}}), shape_error);
  CHECK_THROWS_AS(validate_involution(d, Involution{{0, 1}}), shape_error);
}

TEST_CASE("painted vertices must be fixed by d") {
  DynkinDiagram d = path3();
  Involution flip{{2, 1, 0}};
  CHECK_THROWS_AS(s_set(d, {0}, flip), painting_error);
  CHECK_NOTHROW(s_set(d, {1}, flip));
}

TEST_CASE("s-set contents on the path") {
  DynkinDiagram d = path3();
  Involution flip{{2, 1, 0}};
  // the white 2-orbit {0,2} is non-adjacent, so it stays out of S
  auto s = s_set(d, {}, flip);
  CHECK(s.empty());
  s = s_set(d, {1}, flip);
  REQUIRE(s.size() == 1);
  CHECK(s[0].kind == SItem::Kind::painted_vertex);
  CHECK(s[0].a == 1);
  CHECK(s[0].label_sum == 1);
}

TEST_CASE("grey swap needs an odd s-sum") {
  DynkinDiagram d = grey_cycle();
  Involution swap02{{2, 1, 0, 3}};
  validate_involution(d, swap02);

  auto v = is_vogan(d, {}, swap02);
  CHECK(!v.grey_fixed);
  CHECK(v.s_sum == 2);  // the non-adjacent grey orbit {0,2}
  CHECK(!v.valid);
  CHECK(v.branch() == "none");

  v = is_vogan(d, {1}, swap02);
  CHECK(v.s_sum == 3);
  CHECK(v.valid);
  CHECK(v.branch() == "odd-sum");

  // with d = id the grey vertices are fixed and anything goes
  v = is_vogan(d, {}, Involution{{0, 1, 2, 3}});
  CHECK(v.grey_fixed);
  CHECK(v.valid);
  CHECK(v.branch() == "grey-fixed");
}

TEST_CASE("one-vertex diagram has exactly two vogan diagrams") {
  std::vector<Vertex> vs(1);
  DynkinDiagram d(std::move(vs), {{2}});
  auto all = enumerate_vogan(d, false);
  CHECK(all.size() == 2);
}

TEST_CASE("enumeration agrees with brute force") {
  for (const auto& d : {path3(), grey_cycle(), family_diagram({Family::sl_2m_2n_2, 2, 2}),
                        family_diagram({Family::sl_2m1_2n1_2, 1, 2}),
                        family_diagram({Family::osp_2_2n_2, 1, 3}),
                        family_diagram({Family::sl_1_2n1_4, 1, 3})}) {
    auto got = enumerate_vogan(d, false);
    auto want = brute_enumerate(d);
    REQUIRE(got.size() == want.size());
    auto key = [&](const VoganDiagram& v) { return encode_cd(d.size(), v.painted, v.d); };
    std::sort(want.begin(), want.end(),
              [&](const VoganDiagram& a, const VoganDiagram& b) { return key(a) < key(b); });
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(key(got[i]) == key(want[i]));
      CHECK(got[i].verdict.valid == want[i].verdict.valid);
      CHECK(got[i].verdict.s_sum == want[i].verdict.s_sum);
    }
  }
}

TEST_CASE("equivalence classes partition the full list") {
  for (const auto& d : {grey_cycle(), family_diagram({Family::sl_2m_2n_2, 2, 2}),
                        family_diagram({Family::sl_1_2n1_4, 1, 3})}) {
    auto all = enumerate_vogan(d, false);
    auto reps = enumerate_vogan(d, true);
    CHECK(reps.size() <= all.size());
    auto auts = automorphisms_full(d);
    std::set<std::vector<int>> covered;
    for (const auto& r : reps)
      for (const auto& sigma : auts) {
        auto [np, nd] = conjugate_cd(r.painted, r.d, sigma);
        covered.insert(encode_cd(d.size(), np, nd));
      }
    for (const auto& v : all) CHECK(covered.count(encode_cd(d.size(), v.painted, v.d)) == 1);
  }
}

TEST_CASE("validity is conjugation invariant") {
  std::mt19937_64 rng(3);
  for (const auto& d : {grey_cycle(), family_diagram({Family::sl_2m_2n_2, 2, 2}),
                        family_diagram({Family::sl_2_2n_2, 1, 2})}) {
    auto auts = automorphisms_full(d);
    auto invs = automorphisms(d);
    for (int t = 0; t < 200; ++t) {
      const Involution& inv = invs[rng() % invs.size()];
      auto fix = inv.fixed_points();
      std::set<int> painted;
      for (int v : fix)
        if (rng() % 2) painted.insert(v);
      auto base = is_vogan(d, painted, inv);
      const auto& sigma = auts[rng() % auts.size()];
      auto [np, nd] = conjugate_cd(painted, inv, sigma);
      auto moved = is_vogan(d, np, nd);
      CHECK(base.valid == moved.valid);
      CHECK(base.s_sum % 2 == moved.s_sum % 2);
    }
  }
}

TEST_CASE("painting more vertices only adds to the s-set") {
  DynkinDiagram d = family_diagram({Family::sl_2m_2n_2, 2, 2});
  Involution id{{0, 1, 2, 3, 4}};
  auto small = s_set(d, {1}, id);
  auto big = s_set(d, {1, 3}, id);
  CHECK(big.size() == small.size() + 1);
  for (const auto& it : small) CHECK(std::count(big.begin(), big.end(), it) == 1);
}
