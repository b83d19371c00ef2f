#include "grove/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
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

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

}  // namespace

TabularSchema schema_from_config(const TextConfig& cfg) {
  TabularSchema schema;
  schema.target = config_string(cfg, "target");
  if (config_has(cfg, "categorical")) {
    std::istringstream in(config_string(cfg, "categorical"));
    std::string name;
    while (std::getline(in, name, ',')) {
      name = trim(name);
      if (!name.empty()) schema.categorical.push_back(name);
    }
  }
  if (config_has(cfg, "response_scale")) schema.response_scale = config_double(cfg, "response_scale");
  if (config_has(cfg, "response_offset"))
    schema.response_offset = config_double(cfg, "response_offset");
  return schema;
}

TabularSchema read_schema_file(const std::string& path) {
  return schema_from_config(read_text_config(path));
}

LoadedTable load_csv(const std::string& path, const TabularSchema& schema) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);

  std::string line;
  if (!std::getline(in, line) || trim(line).empty()) throw std::invalid_argument("empty file");
  const std::vector<std::string> header = split_line(line);
  const int num_cols = static_cast<int>(header.size());

  const auto column_of = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw std::invalid_argument("missing column: " + name);
    return static_cast<int>(it - header.begin());
  };
  const int target_col = column_of(schema.target);

  std::set<std::string> categorical(schema.categorical.begin(), schema.categorical.end());
  for (const std::string& name : schema.categorical) column_of(name);
  if (categorical.contains(schema.target))
    throw std::invalid_argument("target column must be numeric: " + schema.target);

  std::vector<std::vector<std::string>> cells;
  int row_no = 0;
  while (std::getline(in, line)) {
    ++row_no;
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_line(line);
    if (static_cast<int>(fields.size()) != num_cols)
      throw std::invalid_argument("row " + std::to_string(row_no) + ": expected " +
                                  std::to_string(num_cols) + " fields, got " +
                                  std::to_string(fields.size()));
    cells.push_back(std::move(fields));
  }
  const int n = static_cast<int>(cells.size());
  if (n == 0) throw std::invalid_argument("empty file");

  // Level sets for categorical columns; levels sorted, first dropped.
  std::map<int, std::vector<std::string>> levels;
  for (const std::string& name : schema.categorical) {
    const int col = column_of(name);
    std::set<std::string> seen;
    for (const auto& row : cells) seen.insert(row[col]);
    levels[col] = std::vector<std::string>(seen.begin(), seen.end());
  }

  std::vector<std::string> feature_names;
  struct Source {
    int col;
    int level = -1;  // -1: numeric passthrough; otherwise indicator for levels[col][level]
  };
  std::vector<Source> sources;
  for (int col = 0; col < num_cols; ++col) {
    if (col == target_col) continue;
    if (const auto it = levels.find(col); it != levels.end()) {
      for (int l = 1; l < static_cast<int>(it->second.size()); ++l) {
        feature_names.push_back(header[col] + "=" + it->second[l]);
        sources.push_back(Source{col, l});
      }
    } else {
      feature_names.push_back(header[col]);
      sources.push_back(Source{col});
    }
  }
  if (feature_names.empty()) throw std::invalid_argument("no feature columns");

  const int d = static_cast<int>(sources.size());
  std::vector<double> features(static_cast<std::size_t>(n) * d);
  std::vector<double> response(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = cells[i];
    double raw;
    if (!parse_double(row[target_col], raw))
      throw std::invalid_argument("row " + std::to_string(i + 1) + ", column " + schema.target +
                                  ": cannot parse '" + row[target_col] + "'");
    response[i] = schema.response_scale * raw + schema.response_offset;
    for (int j = 0; j < d; ++j) {
      const Source& src = sources[j];
      double value;
      if (src.level >= 0) {
        value = row[src.col] == levels[src.col][src.level] ? 1.0 : 0.0;
      } else if (!parse_double(row[src.col], value)) {
        throw std::invalid_argument("row " + std::to_string(i + 1) + ", column " +
                                    header[src.col] + ": cannot parse '" + row[src.col] + "'");
      }
      features[static_cast<std::size_t>(j) * n + i] = value;
    }
  }
  return LoadedTable{Dataset(std::move(features), std::move(response), d),
                     std::move(feature_names)};
}

void write_csv(const std::string& path, const Dataset& data,
               const std::vector<std::string>& feature_names, const std::string& target_name) {
  if (static_cast<int>(feature_names.size()) != data.num_features())
    throw std::invalid_argument("feature_names: size must match num_features");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (const std::string& name : feature_names) out << name << ',';
  out << target_name << '\n';
  char buf[64];
  for (std::int32_t i = 0; i < data.n(); ++i) {
    for (int j = 0; j < data.num_features(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", data.x(i, j));
      out << buf << ',';
    }
    std::snprintf(buf, sizeof buf, "%.17g", data.y(i));
    out << buf << '\n';
  }
}

void write_predictions_csv(const std::string& path, const std::vector<double>& values,
                           const std::string& column_name) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << column_name << '\n';
  char buf[64];
  for (double v : values) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf << '\n';
  }
}

}  // namespace grove
