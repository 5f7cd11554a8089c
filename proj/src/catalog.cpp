#include "vogankit/catalog.hpp"

#include <cstdlib>
#include <fstream>

#include "vogankit/json_io.hpp"

#ifndef VOGANKIT_DEFAULT_CATALOG
#define VOGANKIT_DEFAULT_CATALOG "data/catalog.json"
#endif

namespace vgk {

namespace {

struct Layout {
  std::size_t size;
  int grey;  // -1 if the family has no grey vertex
  bool left_fork, right_fork;
};

Layout layout_of(const FamilySpec& s) {
  switch (s.family) {
    case Family::sl_2m_2n_2: return {std::size_t(s.m + s.n + 1), s.m, true, true};
    case Family::sl_2m1_2n_2: return {std::size_t(s.m + s.n + 1), s.m, false, true};
    case Family::sl_2m1_2n1_2: return {std::size_t(s.m + s.n + 1), s.m, false, false};
    case Family::sl_2_2n_2: return {std::size_t(s.n + 3), s.n, true, true};
    case Family::sl_2_2n1_2: return {std::size_t(s.n + 2), s.n, true, false};
    case Family::osp_2m_2n_2: return {std::size_t(s.m + s.n + 1), s.n, false, false};
    case Family::osp_2_2n_2: return {std::size_t(s.n + 1), -1, false, false};
    case Family::sl_1_2n1_4: return {std::size_t(s.n + 1), -1, false, false};
  }
  throw error("unreachable family tag");
}

}  // namespace

int resolve_role(const FamilySpec& spec, const std::string& role) {
  Layout L = layout_of(spec);
  int first_chain = L.left_fork ? 2 : 1;
  int last_chain = int(L.size) - (L.right_fork ? 3 : 2);
  int idx = -1;
  if (role == "alpha0")
    idx = 0;
  else if (role == "left_of_grey")
    idx = L.grey - 1;
  else if (role == "right_of_grey")
    idx = L.grey + 1;
  else if (role == "first_chain")
    idx = first_chain;
  else if (role == "second_chain")
    idx = first_chain + 1;
  else if (role == "last_chain")
    idx = last_chain;
  else if (role == "penult_chain")
    idx = last_chain - 1;
  else
    throw coverage_error("unknown painted-slot role: " + role);
  if (idx < 0 || std::size_t(idx) >= L.size)
    throw coverage_error("role " + role + " does not resolve at this rank");
  return idx;
}

Involution resolve_d(const FamilySpec& spec, const std::string& d_role) {
  Layout L = layout_of(spec);
  Involution inv;
  inv.perm.resize(L.size);
  for (std::size_t i = 0; i < L.size; ++i) inv.perm[i] = int(i);
  auto swap_pair = [&](std::size_t a, std::size_t b) { std::swap(inv.perm[a], inv.perm[b]); };
  if (d_role == "identity") {
  } else if (d_role == "swap_left_fork") {
    if (!L.left_fork) throw coverage_error("family has no left fork");
    swap_pair(0, 1);
  } else if (d_role == "swap_right_fork") {
    if (!L.right_fork) throw coverage_error("family has no right fork");
    swap_pair(L.size - 2, L.size - 1);
  } else if (d_role == "swap_both_forks") {
    if (!L.left_fork || !L.right_fork) throw coverage_error("family lacks a fork");
    swap_pair(0, 1);
    swap_pair(L.size - 2, L.size - 1);
  } else {
    throw coverage_error("unknown d role: " + d_role);
  }
  return inv;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open catalog file: " + path);
  json j;
  in >> j;
  Catalog cat;
  for (const auto& f : j.at("families")) {
    CatalogFamily cf;
    auto fam = family_from_name(f.at("family").get<std::string>());
    if (!fam) throw parse_error("unknown catalog family: " + f.at("family").get<std::string>());
    cf.family = *fam;
    cf.group_tag = f.value("group", "");
    cf.pictured_m = f.at("pictured_m").get<int>();
    cf.pictured_n = f.at("pictured_n").get<int>();
    cf.coverage_min_m = f.at("coverage_min_m").get<int>();
    cf.coverage_min_n = f.at("coverage_min_n").get<int>();
    cf.elided = f.at("elided").get<bool>();
    cf.pictured_marks = f.at("pictured_marks").get<std::vector<long>>();
    cf.pictured_colors = f.at("pictured_colors").get<std::vector<std::string>>();
    cf.interpretation = f.value("interpretation", "");
    for (const auto& r : f.at("records")) {
      CatalogRecord rec;
      rec.painted_roles = r.at("painted").get<std::vector<std::string>>();
      rec.d_role = r.at("d").get<std::string>();
      cf.records.push_back(std::move(rec));
    }
    cat.families_.push_back(std::move(cf));
  }
  return cat;
}

const Catalog& Catalog::builtin() {
  static Catalog cat = [] {
    const char* env = std::getenv("VOGANKIT_CATALOG");
    return load(env ? env : VOGANKIT_DEFAULT_CATALOG);
  }();
  return cat;
}

std::vector<InstantiatedRecord> Catalog::expected_diagrams(const FamilySpec& spec) const {
  spec.validate();
  std::vector<InstantiatedRecord> out;
  bool covered = false;
  for (const auto& cf : families_) {
    if (cf.family != spec.family) continue;
    covered = true;
    if (spec.m < cf.coverage_min_m || spec.n < cf.coverage_min_n)
      throw coverage_error("rank below catalog coverage for " + family_name(spec.family));
    DynkinDiagram diagram = family_diagram(spec);
    for (const auto& rec : cf.records) {
      InstantiatedRecord ir;
      ir.group_tag = cf.group_tag;
      ir.elided = cf.elided;
      ir.source = rec;
      ir.vd.diagram = diagram;
      ir.vd.d = resolve_d(spec, rec.d_role);
      for (const auto& role : rec.painted_roles) ir.vd.painted.insert(resolve_role(spec, role));
      ir.vd.verdict = is_vogan(diagram, ir.vd.painted, ir.vd.d);
      out.push_back(std::move(ir));
    }
  }
  if (!covered) throw coverage_error("family not cataloged: " + family_name(spec.family));
  return out;
}

std::size_t Catalog::total_records() const {
  std::size_t n = 0;
  for (const auto& f : families_) n += f.records.size();
  return n;
}

}  // namespace vgk
