#ifndef VOGANKIT_JSON_IO_HPP
#define VOGANKIT_JSON_IO_HPP

#include "json.hpp"  // vendored single-header nlohmann/json

#include "vogankit/vogan.hpp"

namespace vgk {

using json = nlohmann::json;

json to_json(const FamilySpec& s);
FamilySpec family_spec_from_json(const json& j);

/// {vertices:[{index,parity,color,mark}], gram:[["p/q",...]], family:{...}}
json to_json(const DynkinDiagram& d);
DynkinDiagram diagram_from_json(const json& j);

/// diagram fields + {d:[perm], painted:[...], valid, branch, s_sum, s_set, flags}
json to_json(const VoganDiagram& v);

/// Reads diagram + d + painted and recomputes the verdict.
VoganDiagram vogan_from_json(const json& j);

}  // namespace vgk

#endif
