#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "binact/action.hpp"
#include "binact/group.hpp"
#include "binact/morphisms.hpp"

namespace binact {

using Json = nlohmann::json;

/// {"order": n, "table": [[...]...], "names": [...]}; all group axioms are
/// re-checked on load.
Json group_to_json(const FiniteGroup& group);
FiniteGroup group_from_json(const Json& doc);

/// {"group": <group object or reference>, "carrier": m, "labels": [...],
///  "mu": [g][x][y]}. A string "group" is resolved as a group name, then as
/// a path relative to `base_dir`. The loader runs validate_action.
Json space_to_json(const BinaryGSpace& space);
BinaryGSpace space_from_json(const Json& doc, const std::filesystem::path& base_dir = {});

/// {"map": [...], "checked": bool}
Json bimap_to_json(const BiMap& map);

Json read_json_file(const std::filesystem::path& path);
FiniteGroup load_group(const std::filesystem::path& path);
BinaryGSpace load_space(const std::filesystem::path& path);

}  // namespace binact
