#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vogankit/catalog.hpp"

using namespace vgk;

TEST_CASE("catalog loads and has the full record set") {
  const Catalog& cat = Catalog::builtin();
  CHECK(cat.total_records() == 24);
  CHECK(cat.families().size() == 9);
}

TEST_CASE("record counts per family at the pictured ranks") {
  const Catalog& cat = Catalog::builtin();
  auto count = [&](Family f, int m, int n) {
    return cat.expected_diagrams({f, m, n}).size();
  };
  CHECK(count(Family::sl_2m_2n_2, 4, 4) == 7);  // both printed groups
  CHECK(count(Family::sl_2m1_2n_2, 3, 4) == 3);
  CHECK(count(Family::sl_2m1_2n1_2, 3, 3) == 2);
  CHECK(count(Family::sl_2_2n1_2, 1, 4) == 4);
  CHECK(count(Family::sl_2_2n_2, 1, 4) == 2);
  CHECK(count(Family::osp_2m_2n_2, 3, 3) == 2);
  CHECK(count(Family::osp_2_2n_2, 1, 5) == 2);
  CHECK(count(Family::sl_1_2n1_4, 1, 5) == 2);
}

TEST_CASE("pictured marks match the constructed diagrams") {
  for (const auto& cf : Catalog::builtin().families()) {
    FamilySpec spec{cf.family, cf.pictured_m, cf.pictured_n};
    DynkinDiagram d = family_diagram(spec);
    CHECK(d.marks() == cf.pictured_marks);
    CHECK(d.size() == cf.pictured_colors.size());
  }
}

TEST_CASE("every record is a valid vogan diagram") {
  for (const auto& cf : Catalog::builtin().families()) {
    for (auto [dm, dn] : {std::pair{0, 0}, {1, 0}, {0, 1}}) {
      int m = cf.pictured_m + dm, n = cf.pictured_n + dn;
      if (m_is_fixed(cf.family) && m != cf.pictured_m) continue;
      auto recs = Catalog::builtin().expected_diagrams({cf.family, m, n});
      CHECK(!recs.empty());
      for (const auto& r : recs) {
        CHECK(r.vd.verdict.valid);
        CHECK(!r.vd.paints_grey());
      }
    }
  }
}

TEST_CASE("records occur in the plain enumeration") {
  for (const auto& cf : Catalog::builtin().families()) {
    FamilySpec spec{cf.family, cf.pictured_m, cf.pictured_n};
    DynkinDiagram diagram = family_diagram(spec);
    auto all = enumerate_vogan(diagram, false);
    for (const auto& r : Catalog::builtin().expected_diagrams(spec)) {
      auto code = encode_cd(diagram.size(), r.vd.painted, r.vd.d);
      int hits = 0;
      for (const auto& v : all)
        if (encode_cd(diagram.size(), v.painted, v.d) == code) ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("coverage limits are enforced") {
  CHECK_THROWS_AS(Catalog::builtin().expected_diagrams({Family::sl_2m_2n_2, 2, 2}),
                  coverage_error);
  CHECK_THROWS_AS(resolve_role({Family::osp_2_2n_2, 1, 3}, "left_of_grey"), coverage_error);
  CHECK_THROWS_AS(resolve_d({Family::osp_2m_2n_2, 2, 2}, "swap_left_fork"), coverage_error);
}

TEST_CASE("role resolution matches the diagram layout") {
  FamilySpec spec{Family::sl_2m_2n_2, 3, 3};
  DynkinDiagram d = family_diagram(spec);
  CHECK(resolve_role(spec, "alpha0") == 0);
  int lg = resolve_role(spec, "left_of_grey");
  int rg = resolve_role(spec, "right_of_grey");
  CHECK(d.vertex(lg + 1).color == Color::grey);
  CHECK(d.vertex(rg - 1).color == Color::grey);
  Involution left = resolve_d(spec, "swap_left_fork");
  CHECK_NOTHROW(validate_involution(d, left));
  CHECK(left.two_orbits() == std::vector<std::pair<int, int>>{{0, 1}});
}
