#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "vogankit/catalog.hpp"
#include "vogankit/json_io.hpp"
#include "vogankit/render.hpp"
#include "vogankit/verify.hpp"

namespace {

vgk::FamilySpec parse_family(const std::string& name, int m, int n) {
  auto fam = vgk::family_from_name(name);
  if (!fam) throw vgk::parse_error("unknown family: " + name);
  vgk::FamilySpec spec{*fam, m, n};
  spec.validate();
  return spec;
}

vgk::json read_input(const std::string& path) {
  vgk::json j;
  if (path == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(path);
    if (!in) throw vgk::error("cannot open input file: " + path);
    in >> j;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted affine Dynkin diagram and Vogan diagram toolkit"};
  app.require_subcommand(1);

  std::string family, input, format = "ascii", model;
  int m = 1, n = 1, trials = 200, degree = 3;
  std::uint64_t seed = 1;
  bool up_to_equiv = false;

  auto add_family_opts = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "family name, e.g. sl(2m|2n)^2")->required();
    cmd->add_option("--m", m, "m parameter");
    cmd->add_option("--n", n, "n parameter");
  };

  CLI::App* cat = app.add_subcommand("catalog", "print the cataloged diagrams at a given rank");
  add_family_opts(cat);
  cat->add_option("--format", format, "ascii|dot|tikz|json");

  CLI::App* enu = app.add_subcommand("enumerate", "enumerate valid diagrams on the family diagram");
  add_family_opts(enu);
  enu->add_flag("--up-to-equiv", up_to_equiv, "one representative per conjugacy class");
  enu->add_option("--format", format, "ascii|dot|tikz|json");

  CLI::App* chk = app.add_subcommand("check", "validate a diagram read from JSON");
  chk->add_option("--input", input, "input file, or - for stdin")->required();

  CLI::App* ren = app.add_subcommand("render", "render a diagram read from JSON");
  ren->add_option("--input", input, "input file, or - for stdin")->required();
  ren->add_option("--format", format, "ascii|dot|tikz|json");

  CLI::App* ver = app.add_subcommand("verify-loop", "run exact identity checks on a loop model");
  ver->add_option("--model", model, "sl(2|2)^2 or sl(1|3)^4")->required();
  ver->add_option("--trials", trials, "random instances per identity");
  ver->add_option("--seed", seed, "RNG seed");
  ver->add_option("--degree", degree, "Laurent degree window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    vgk::RenderSpec rspec;

    if (cat->parsed()) {
      rspec.format = vgk::render_format_from_name(format);
      vgk::FamilySpec spec = parse_family(family, m, n);
      auto records = vgk::Catalog::builtin().expected_diagrams(spec);
      if (rspec.format == vgk::RenderFormat::json) {
        vgk::json out = vgk::json::array();
        for (const auto& r : records) {
          vgk::json e = vgk::to_json(r.vd);
          if (!r.group_tag.empty()) e["group"] = r.group_tag;
          out.push_back(e);
        }
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& r : records) {
          if (!r.group_tag.empty()) std::cout << "group " << r.group_tag << "\n";
          std::cout << vgk::render(r.vd, rspec) << "\n";
        }
      }
      return 0;
    }

    if (enu->parsed()) {
      rspec.format = vgk::render_format_from_name(format);
      vgk::FamilySpec spec = parse_family(family, m, n);
      auto found = vgk::enumerate_vogan(vgk::family_diagram(spec), up_to_equiv);
      if (rspec.format == vgk::RenderFormat::json) {
        vgk::json out = vgk::json::array();
        for (const auto& v : found) out.push_back(vgk::to_json(v));
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << found.size() << " diagrams\n\n";
        for (const auto& v : found) std::cout << vgk::render(v, rspec) << "\n";
      }
      return 0;
    }

    if (chk->parsed()) {
      vgk::VoganDiagram v = vgk::vogan_from_json(read_input(input));
      std::cout << (v.verdict.valid ? "valid" : "invalid") << " (" << v.verdict.branch()
                << ", S-sum " << v.verdict.s_sum << ")\n";
      return v.verdict.valid ? 0 : 1;
    }

    if (ren->parsed()) {
      rspec.format = vgk::render_format_from_name(format);
      vgk::json j = read_input(input);
      if (j.contains("d") || j.contains("painted"))
        std::cout << vgk::render(vgk::vogan_from_json(j), rspec);
      else
        std::cout << vgk::render(vgk::diagram_from_json(j), rspec);
      return 0;
    }

    if (ver->parsed()) {
      vgk::VerifyReport rep = vgk::verify_loop_model(model, trials, seed, degree);
      std::cout << vgk::verify_report_to_json(rep) << "\n";
      return rep.ok() ? 0 : 1;
    }
  } catch (const vgk::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const vgk::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
