// Per-algorithm hyperparameter records and validation.
#pragma once

#include <optional>
#include <string>
#include <variant>

namespace grove {

// Resampling shared by all algorithms: bootstrap of size n when replace,
// otherwise a subsample of floor(sample_fraction * n) distinct rows.
struct RfConfig {
  int mtry = 1;
  int min_node_size = 5;
  int num_trees = 500;
  bool replace = true;
  double sample_fraction = 1.0;  // used when replace = false
};

struct EtConfig {
  int mtry = 1;
  int num_random_splits = 1;
  int min_node_size = 5;
  int num_trees = 500;
  bool replace = false;
  double sample_fraction = 1.0;  // 1.0 with replace=false: fit on the full sample
};

struct IntfConfig {
  int npairs = 1;
  int min_node_size = 5;
  int num_trees = 500;
  bool replace = true;
  double sample_fraction = 0.632;
};

enum class MtryMode { kFixed, kNotFixed };

struct RsrfConfig {
  int width = 1;
  bool include_cartcart = false;
  MtryMode mtry_mode = MtryMode::kNotFixed;
  // fixed mode only: coordinate pool for the random split
  std::optional<int> mtry_random;
  // not-fixed mode with include_cartcart only
  std::optional<int> mtry_cart_cart;
  int mtry_random_cart = 1;
  int min_node_size = 5;
  int num_trees = 100;
  bool replace = true;
  double sample_fraction = 0.632;
  int depth = 2;  // levels of random splits = depth - 1, then one CART level
};

using GrowerConfig = std::variant<RfConfig, EtConfig, IntfConfig, RsrfConfig>;

// Throws std::invalid_argument naming the offending field.
void validate_config(const RfConfig& cfg, int num_features);
void validate_config(const EtConfig& cfg, int num_features);
void validate_config(const IntfConfig& cfg, int num_features);
void validate_config(const RsrfConfig& cfg, int num_features);
void validate_config(const GrowerConfig& cfg, int num_features);

int num_trees_of(const GrowerConfig& cfg);
bool replace_of(const GrowerConfig& cfg);
double sample_fraction_of(const GrowerConfig& cfg);
int min_node_size_of(const GrowerConfig& cfg);

// Algorithm tag as used in reports and the CLI: rf, et, intf, rsrf.
std::string algorithm_name(const GrowerConfig& cfg);

}  // namespace grove
