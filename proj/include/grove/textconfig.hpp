// Plain-text "key = value" configuration files, shared by experiment configs
// and CSV schema files. '#' starts a comment; keys are unique.
#pragma once

#include <map>
#include <string>

namespace grove {

using TextConfig = std::map<std::string, std::string>;

TextConfig parse_text_config(const std::string& text);
TextConfig read_text_config(const std::string& path);

// Typed lookups; errors name the key. The has_* form returns whether the key
// exists.
bool config_has(const TextConfig& cfg, const std::string& key);
std::string config_string(const TextConfig& cfg, const std::string& key);
int config_int(const TextConfig& cfg, const std::string& key);
double config_double(const TextConfig& cfg, const std::string& key);
bool config_bool(const TextConfig& cfg, const std::string& key);  // true/false

}  // namespace grove
