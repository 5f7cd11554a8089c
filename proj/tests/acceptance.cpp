// End-to-end acceptance checks.  Each criterion prints one PASS/FAIL line;
// the exit status is the number of failed criteria.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "vogankit/catalog.hpp"
#include "vogankit/verify.hpp"

using namespace vgk;

namespace {

int failures = 0;

void report(int num, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << what;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::vector<FamilySpec> coverage_specs(int extra) {
  std::vector<FamilySpec> out;
  for (auto f : {Family::sl_2m_2n_2, Family::sl_2m1_2n_2, Family::sl_2m1_2n1_2,
                 Family::sl_2_2n_2, Family::sl_2_2n1_2, Family::osp_2m_2n_2, Family::osp_2_2n_2,
                 Family::sl_1_2n1_4}) {
    auto [m0, n0] = minimal_rank(f);
    for (int dm = 0; dm <= extra; ++dm) {
      if (m_is_fixed(f) && dm > 0) continue;
      for (int dn = 0; dn <= extra; ++dn) out.push_back({f, m0 + dm, n0 + dn});
    }
  }
  return out;
}

// Exhaustive reference enumeration over all vertex permutations.
std::vector<std::vector<int>> brute_count(const DynkinDiagram& diagram) {
  const std::size_t n = diagram.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> codes;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = p[p[i]] == int(i);
      const Vertex &v = diagram.vertex(i), &w = diagram.vertex(p[i]);
      ok = ok && v.parity == w.parity && v.color == w.color && v.mark == w.mark;
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = diagram.gram()[p[i]][p[j]] == diagram.gram()[i][j];
    }
    if (!ok) continue;
    Involution d{p};
    auto fix = d.fixed_points();
    for (std::size_t mask = 0; mask < (std::size_t(1) << fix.size()); ++mask) {
      std::set<int> painted;
      for (std::size_t b = 0; b < fix.size(); ++b)
        if (mask & (std::size_t(1) << b)) painted.insert(fix[b]);
      if (is_vogan(diagram, painted, d).valid)
        codes.push_back(encode_cd(n, painted, d));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(codes.begin(), codes.end());
  return codes;
}

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(VOGANKIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

}  // namespace

int main() {
  const Catalog& cat = Catalog::builtin();

  // 1. labels of the constructed diagrams at the cataloged ranks
  {
    bool ok = true;
    std::string detail;
    try {
      for (const auto& cf : cat.families()) {
        DynkinDiagram d = family_diagram({cf.family, cf.pictured_m, cf.pictured_n});
        if (d.marks() != cf.pictured_marks || d.marks() != d.recompute_marks()) {
          ok = false;
          detail = family_name(cf.family);
        }
      }
    } catch (const error& e) {
      ok = false;
      detail = e.what();
    }
    report(1, "numerical labels match the cataloged diagrams", ok, detail);
  }

  // 2. sum of labels over odd vertices is 2 across the rank range
  {
    bool ok = true;
    std::string detail;
    for (const auto& spec : coverage_specs(2)) {
      if (family_diagram(spec).odd_mark_sum() != 2) {
        ok = false;
        detail = family_name(spec.family);
      }
    }
    report(2, "odd labels sum to 2 for every family and rank", ok, detail);
  }

  // 3. every catalog record validates and occurs in the enumeration
  {
    bool ok = cat.total_records() == 24;
    std::string detail = ok ? "" : "record count";
    try {
      for (const auto& cf : cat.families()) {
        FamilySpec spec{cf.family, cf.pictured_m, cf.pictured_n};
        DynkinDiagram diagram = family_diagram(spec);
        auto reps = enumerate_vogan(diagram, true);
        auto auts = automorphisms_full(diagram);
        std::set<std::vector<int>> rep_codes;
        for (const auto& r : reps)
          rep_codes.insert(encode_cd(diagram.size(), r.painted, r.d));
        for (const auto& rec : cat.expected_diagrams(spec)) {
          if (!rec.vd.verdict.valid) {
            ok = false;
            detail = family_name(cf.family) + " invalid record";
          }
          bool found = false;
          for (const auto& sigma : auts) {
            auto [np, nd] = conjugate_cd(rec.vd.painted, rec.vd.d, sigma);
            if (rep_codes.count(encode_cd(diagram.size(), np, nd))) found = true;
          }
          if (!found) {
            ok = false;
            detail = family_name(cf.family) + " record missing from enumeration";
          }
        }
      }
    } catch (const error& e) {
      ok = false;
      detail = e.what();
    }
    report(3, "all 24 cataloged records are valid and enumerated", ok, detail);
  }

  // 4. enumeration matches exhaustive search on small diagrams
  {
    bool ok = true;
    std::string detail;
    std::set<std::pair<int, std::pair<int, int>>> done;
    auto specs = coverage_specs(0);
    for (const auto& cf : cat.families())
      specs.push_back({cf.family, cf.pictured_m, cf.pictured_n});
    for (const auto& spec : specs) {
      if (!done.insert({int(spec.family), {spec.m, spec.n}}).second) continue;
      DynkinDiagram d = family_diagram(spec);
      if (d.size() > 10) continue;
      auto fast = enumerate_vogan(d, false);
      std::vector<std::vector<int>> fast_codes;
      for (const auto& v : fast) fast_codes.push_back(encode_cd(d.size(), v.painted, v.d));
      std::sort(fast_codes.begin(), fast_codes.end());
      if (fast_codes != brute_count(d)) {
        ok = false;
        detail = family_name(spec.family);
      }
    }
    report(4, "enumeration agrees with exhaustive search", ok, detail);
  }

  // 5. validity is invariant under diagram symmetry
  {
    bool ok = true;
    std::string detail;
    std::mt19937_64 rng(2024);
    std::vector<DynkinDiagram> ds = {family_diagram({Family::sl_2m_2n_2, 2, 2}),
                                     family_diagram({Family::sl_2_2n_2, 1, 3}),
                                     family_diagram({Family::sl_1_2n1_4, 1, 3}),
                                     family_diagram({Family::sl_2m1_2n1_2, 2, 2})};
    for (int t = 0; t < 1000; ++t) {
      const DynkinDiagram& d = ds[rng() % ds.size()];
      auto invs = automorphisms(d);
      auto auts = automorphisms_full(d);
      const Involution& inv = invs[rng() % invs.size()];
      std::set<int> painted;
      for (int v : inv.fixed_points())
        if (rng() % 2) painted.insert(v);
      auto [np, nd] = conjugate_cd(painted, inv, auts[rng() % auts.size()]);
      if (is_vogan(d, painted, inv).valid != is_vogan(d, np, nd).valid) {
        ok = false;
        detail = "trial " + std::to_string(t);
      }
    }
    report(5, "1000 random symmetry-conjugation instances preserve validity", ok, detail);
  }

  // 6. exact identity suite on both loop realizations
  {
    bool ok = true;
    std::string detail;
    for (const auto& name : loop_model_names()) {
      VerifyReport rep = verify_loop_model(name, 500, 12345, 3);
      if (!rep.ok()) {
        ok = false;
        for (const auto& r : rep.results)
          if (!r.passed()) detail = name + " " + r.name + ": " + r.witness;
      }
    }
    report(6, "loop realization identities hold exactly on both models", ok, detail);
  }

  // 7. compact involution reference computation
  {
    SuperMatrix e = SuperMatrix::unit(2, 0, 0, 1), f = SuperMatrix::unit(2, 0, 1, 0);
    SuperMatrix h = SuperMatrix::unit(2, 0, 0, 0) - SuperMatrix::unit(2, 0, 1, 1);
    LinearMap theta = [](const SuperMatrix& x) {
      SuperMatrix t(x.p, x.q);
      for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) t.at(i, j) = -x.at(j, i);
      return t;
    };
    CartanReport rep = cartan_involution_check(
        {e - f, e + f, h}, theta,
        [](const SuperMatrix& x, const SuperMatrix& y) { return strform(x, y); });
    bool ok = rep.ok() && rep.leading_minors == std::vector<Rat>{2, 4, 8};
    report(7, "negative-transpose involution of sl(2) is compact with minors 2,4,8", ok);
  }

  // 8. CLI output is deterministic
  {
    std::string args =
        "enumerate --family \"sl(2m|2n)^2\" --m 3 --n 3 --up-to-equiv --format json";
    std::string a = run_cli(args);
    std::string b = run_cli(args);
    std::string c = run_cli("verify-loop --model \"sl(2|2)^2\" --trials 50 --seed 9");
    std::string d = run_cli("verify-loop --model \"sl(2|2)^2\" --trials 50 --seed 9");
    bool ok = !a.empty() && a == b && !c.empty() && c == d;
    report(8, "repeated CLI runs are byte-identical", ok);
  }

  return failures;
}
