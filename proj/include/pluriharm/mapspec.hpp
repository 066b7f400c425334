#pragma once

// Textual map specifications: JSON documents describing h and g, and
// builtin-family URIs like "builtin:upper_extremal?alpha=2&k=0.5&t=0".

#include <string>

#include <json.hpp>

#include "pluriharm/extremal.hpp"
#include "pluriharm/mapping.hpp"

namespace pluriharm {

// Dispatches on the "builtin:" prefix, otherwise reads a JSON file.
MapModel load_map_spec(const std::string& path_or_uri);

MapModel map_from_json(const nlohmann::json& j, const std::string& id);

// uri without the "builtin:" prefix, e.g. "pommerenke?alpha=2".
MapModel builtin_map(const std::string& uri);

}  // namespace pluriharm
