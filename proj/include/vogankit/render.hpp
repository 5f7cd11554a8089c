#ifndef VOGANKIT_RENDER_HPP
#define VOGANKIT_RENDER_HPP

#include <string>

#include "vogankit/vogan.hpp"

namespace vgk {

enum class RenderFormat { ascii, dot, tikz, json };

RenderFormat render_format_from_name(const std::string& name);

struct RenderSpec {
  RenderFormat format = RenderFormat::ascii;
  bool show_marks = true;
  bool show_involution = true;
};

std::string render(const DynkinDiagram& d, const RenderSpec& spec);
std::string render(const VoganDiagram& v, const RenderSpec& spec);

}  // namespace vgk

#endif
