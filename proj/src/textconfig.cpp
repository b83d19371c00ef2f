#include "grove/textconfig.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace grove {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

TextConfig parse_text_config(const std::string& text) {
  TextConfig out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
    if (!out.emplace(key, value).second)
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": duplicate key '" +
                                  key + "'");
  }
  return out;
}

TextConfig read_text_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text_config(buf.str());
}

bool config_has(const TextConfig& cfg, const std::string& key) { return cfg.contains(key); }

std::string config_string(const TextConfig& cfg, const std::string& key) {
  const auto it = cfg.find(key);
  if (it == cfg.end()) throw std::invalid_argument(key + ": missing config key");
  return it->second;
}

int config_int(const TextConfig& cfg, const std::string& key) {
  const std::string v = config_string(cfg, key);
  char* end = nullptr;
  const long parsed = std::strtol(v.c_str(), &end, 10);
  if (end == v.c_str() || *end != '\0')
    throw std::invalid_argument(key + ": expected an integer, got '" + v + "'");
  return static_cast<int>(parsed);
}

double config_double(const TextConfig& cfg, const std::string& key) {
  const std::string v = config_string(cfg, key);
  char* end = nullptr;
  const double parsed = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0')
    throw std::invalid_argument(key + ": expected a number, got '" + v + "'");
  return parsed;
}

bool config_bool(const TextConfig& cfg, const std::string& key) {
  const std::string v = config_string(cfg, key);
  if (v == "true") return true;
  if (v == "false") return false;
  throw std::invalid_argument(key + ": expected true or false, got '" + v + "'");
}

}  // namespace grove
