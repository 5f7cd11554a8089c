#include "vogankit/render.hpp"

#include <sstream>

#include "vogankit/json_io.hpp"

namespace vgk {

RenderFormat render_format_from_name(const std::string& name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "dot") return RenderFormat::dot;
  if (name == "tikz") return RenderFormat::tikz;
  if (name == "json") return RenderFormat::json;
  throw parse_error("unknown render format: " + name);
}

namespace {

char color_glyph(Color c) {
  switch (c) {
    case Color::white: return 'o';
    case Color::grey: return 'x';
    case Color::black: return '*';
  }
  return '?';
}

std::string ascii_render(const DynkinDiagram& d, const std::set<int>& painted,
                         const Involution* inv, const RenderSpec& spec) {
  std::ostringstream os;
  if (d.family_tag()) {
    const auto& f = *d.family_tag();
    os << family_name(f.family) << " m=" << f.m << " n=" << f.n << "\n";
  }
  os << "vertices:";
  for (const auto& v : d.vertices()) {
    os << " " << v.index << ":";
    bool p = painted.count(v.index) != 0;
    if (p) os << "[";
    os << color_glyph(v.color);
    if (p) os << "]";
    if (spec.show_marks) os << "(" << v.mark << ")";
  }
  os << "\nedges:";
  bool any = false;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (d.adjacent(i, j)) {
        os << " " << i << "-" << j;
        any = true;
      }
  if (!any) os << " (none)";
  os << "\n";
  if (inv && spec.show_involution) {
    os << "d:";
    auto orbits = inv->two_orbits();
    if (orbits.empty())
      os << " identity";
    else
      for (const auto& [a, b] : orbits) os << " " << a << "<->" << b;
    os << "\n";
  }
  return os.str();
}

std::string dot_render(const DynkinDiagram& d, const std::set<int>& painted,
                       const Involution* inv, const RenderSpec& spec) {
  std::ostringstream os;
  os << "graph diagram {\n  node [shape=circle, fixedsize=true, width=0.4];\n";
  for (const auto& v : d.vertices()) {
    os << "  v" << v.index << " [label=\"";
    if (spec.show_marks) os << v.mark;
    os << "\"";
    switch (v.color) {
      case Color::white: break;
      case Color::grey: os << ", style=filled, fillcolor=gray80"; break;
      case Color::black: os << ", style=filled, fillcolor=black, fontcolor=white"; break;
    }
    if (painted.count(v.index)) os << ", peripheries=2";
    os << "];\n";
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (d.adjacent(i, j)) os << "  v" << i << " -- v" << j << ";\n";
  if (inv && spec.show_involution)
    for (const auto& [a, b] : inv->two_orbits())
      os << "  v" << a << " -- v" << b << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

std::string tikz_render(const DynkinDiagram& d, const std::set<int>& painted,
                        const Involution* inv, const RenderSpec& spec) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}[every node/.style={circle, draw, inner sep=2pt}]\n";
  for (const auto& v : d.vertices()) {
    os << "  \\node";
    std::string opts;
    if (v.color == Color::grey) opts = "fill=gray!40";
    if (v.color == Color::black) opts = "fill=black";
    if (painted.count(v.index)) opts += (opts.empty() ? "" : ", ") + std::string("double");
    if (!opts.empty()) os << "[" << opts << "]";
    os << " (v" << v.index << ") at (" << v.index << ",0) {};\n";
    if (spec.show_marks)
      os << "  \\node[draw=none] at (" << v.index << ",-0.45) {\\scriptsize " << v.mark
         << "};\n";
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (d.adjacent(i, j)) os << "  \\draw (v" << i << ") -- (v" << j << ");\n";
  if (inv && spec.show_involution)
    for (const auto& [a, b] : inv->two_orbits())
      os << "  \\draw[<->, dashed] (v" << a << ") to[bend left] (v" << b << ");\n";
  os << "\\end{tikzpicture}\n";
  return os.str();
}

}  // namespace

std::string render(const DynkinDiagram& d, const RenderSpec& spec) {
  switch (spec.format) {
    case RenderFormat::ascii: return ascii_render(d, {}, nullptr, spec);
    case RenderFormat::dot: return dot_render(d, {}, nullptr, spec);
    case RenderFormat::tikz: return tikz_render(d, {}, nullptr, spec);
    case RenderFormat::json: return to_json(d).dump(2) + "\n";
  }
  throw error("unreachable render format");
}

std::string render(const VoganDiagram& v, const RenderSpec& spec) {
  switch (spec.format) {
    case RenderFormat::ascii: {
      std::string s = ascii_render(v.diagram, v.painted, &v.d, spec);
      s += "valid: ";
      s += v.verdict.valid ? "yes" : "no";
      s += " (" + v.verdict.branch() + ", S-sum " + std::to_string(v.verdict.s_sum) + ")\n";
      return s;
    }
    case RenderFormat::dot: return dot_render(v.diagram, v.painted, &v.d, spec);
    case RenderFormat::tikz: return tikz_render(v.diagram, v.painted, &v.d, spec);
    case RenderFormat::json: return to_json(v).dump(2) + "\n";
  }
  throw error("unreachable render format");
}

}  // namespace vgk
