#pragma once

#include <json.hpp>

#include "stablerep/fi.hpp"
#include "stablerep/stablecat.hpp"
#include "stablerep/tabloid.hpp"

namespace stablerep {

using Json = nlohmann::json;

// Wire forms:
//   tabloid       {"shape":[...],"type":[...],"counts":[[...]]}
//   polynomial    {"offset":N,"diffs":[...]}
//   presentation  {"generators":[d...],"relations":[d...],"map":[[cell...]...]}
// where a map cell is a term {"tabloid":...,"poly":...} or a list of terms.

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const Tabloid& t);
Json to_json(const StableTabloid& t);
StableTabloid stable_tabloid_from_json(const Json& j);

Json to_json(const IvPoly& f);
IvPoly ivpoly_from_json(const Json& j);

Json to_json(const HomEntry& entry);

Json to_json(const Presentation& pres);
Presentation presentation_from_json(const Json& j);

}  // namespace stablerep
