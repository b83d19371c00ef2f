// CSV ingestion for tabular experiments: schema-driven parsing, categorical
// expansion to indicator columns, and a lossless writer.
#pragma once

#include <string>
#include <vector>

#include "grove/dataset.hpp"
#include "grove/textconfig.hpp"

namespace grove {

struct TabularSchema {
  std::string target;
  std::vector<std::string> categorical;  // column names expanded to indicators
  double response_scale = 1.0;           // y := response_scale * raw + response_offset
  double response_offset = 0.0;
};

// Schema file keys: target (required), categorical (comma-separated names),
// response_scale, response_offset.
TabularSchema schema_from_config(const TextConfig& cfg);
TabularSchema read_schema_file(const std::string& path);

struct LoadedTable {
  Dataset data;
  std::vector<std::string> feature_names;
};

// Comma-separated, UTF-8, '.' decimal point, header row required. Categorical
// columns expand to one indicator per level (levels sorted, first dropped).
// Errors carry the offending column or 1-based data row.
LoadedTable load_csv(const std::string& path, const TabularSchema& schema);

// 17-significant-digit output: reloading reproduces the dataset bitwise.
void write_csv(const std::string& path, const Dataset& data,
               const std::vector<std::string>& feature_names, const std::string& target_name);

// Single numeric column, used for prediction output.
void write_predictions_csv(const std::string& path, const std::vector<double>& values,
                           const std::string& column_name);

}  // namespace grove
