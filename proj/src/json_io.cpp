#include "vogankit/json_io.hpp"

namespace vgk {

json to_json(const FamilySpec& s) {
  return json{{"family", family_name(s.family)}, {"m", s.m}, {"n", s.n}, {"twist", s.twist()}};
}

FamilySpec family_spec_from_json(const json& j) {
  auto f = family_from_name(j.at("family").get<std::string>());
  if (!f) throw parse_error("unknown family: " + j.at("family").get<std::string>());
  FamilySpec s{*f, j.at("m").get<int>(), j.at("n").get<int>()};
  s.validate();
  return s;
}

json to_json(const DynkinDiagram& d) {
  json verts = json::array();
  for (const auto& v : d.vertices())
    verts.push_back({{"index", v.index},
                     {"parity", parity_name(v.parity)},
                     {"color", color_name(v.color)},
                     {"mark", v.mark}});
  json gram = json::array();
  for (const auto& row : d.gram()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rat_to_string(x));
    gram.push_back(std::move(r));
  }
  json out{{"vertices", std::move(verts)}, {"gram", std::move(gram)}};
  if (d.family_tag()) out["family"] = to_json(*d.family_tag());
  return out;
}

DynkinDiagram diagram_from_json(const json& j) {
  std::vector<Vertex> vs;
  for (const auto& v : j.at("vertices")) {
    Vertex x;
    x.index = v.at("index").get<int>();
    std::string p = v.at("parity").get<std::string>();
    if (p != "even" && p != "odd") throw parse_error("bad parity: " + p);
    x.parity = p == "even" ? Parity::even : Parity::odd;
    std::string c = v.at("color").get<std::string>();
    if (c == "white")
      x.color = Color::white;
    else if (c == "grey")
      x.color = Color::grey;
    else if (c == "black")
      x.color = Color::black;
    else
      throw parse_error("bad color: " + c);
    x.mark = v.at("mark").get<long>();
    vs.push_back(x);
  }
  RatMatrix gram;
  for (const auto& row : j.at("gram")) {
    std::vector<Rat> r;
    for (const auto& x : row) r.push_back(rat_from_string(x.get<std::string>()));
    gram.push_back(std::move(r));
  }
  std::optional<FamilySpec> fam;
  if (j.contains("family")) fam = family_spec_from_json(j.at("family"));
  return DynkinDiagram(std::move(vs), std::move(gram), fam);
}

json to_json(const VoganDiagram& v) {
  json out = to_json(v.diagram);
  out["d"] = v.d.perm;
  out["painted"] = json::array();
  for (int x : v.painted) out["painted"].push_back(x);
  out["valid"] = v.verdict.valid;
  out["branch"] = v.verdict.branch();
  out["s_sum"] = v.verdict.s_sum;
  json items = json::array();
  for (const auto& it : v.verdict.s_items) {
    if (it.kind == SItem::Kind::painted_vertex)
      items.push_back({{"type", "vertex"}, {"index", it.a}, {"label_sum", it.label_sum}});
    else
      items.push_back(
          {{"type", "orbit"}, {"members", {it.a, it.b}}, {"label_sum", it.label_sum}});
  }
  out["s_set"] = std::move(items);
  json flags = json::array();
  if (v.paints_grey()) flags.push_back("grey-painted");
  out["flags"] = std::move(flags);
  return out;
}

VoganDiagram vogan_from_json(const json& j) {
  VoganDiagram v;
  v.diagram = diagram_from_json(j);
  v.d.perm = j.at("d").get<std::vector<int>>();
  for (const auto& x : j.at("painted")) v.painted.insert(x.get<int>());
  v.verdict = is_vogan(v.diagram, v.painted, v.d);
  return v;
}

}  // namespace vgk
