// Versioned JSON serialization of fitted forests. Field names are stable;
// see README for the document layout.
#pragma once

#include <string>

#include <json.hpp>

#include "grove/forest.hpp"

namespace grove {

inline constexpr int kForestFormatVersion = 1;
inline constexpr const char* kForestFormatName = "grove.forest";

nlohmann::json forest_to_json(const Forest& forest);
Forest forest_from_json(const nlohmann::json& doc);  // throws on format/version mismatch

nlohmann::json config_to_json(const GrowerConfig& cfg);
GrowerConfig config_from_json(const nlohmann::json& doc);

void save_forest(const Forest& forest, const std::string& path);
Forest load_forest(const std::string& path);

// Serialized forest bytes (indented JSON); identical for identical forests.
std::string forest_to_string(const Forest& forest);

}  // namespace grove
