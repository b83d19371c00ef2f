#include "grove/config.hpp"

#include <stdexcept>

namespace grove {

namespace {

void check_common(int min_node_size, int num_trees, bool replace, double sample_fraction, int n_trees_min = 1) {
  if (min_node_size < 1) throw std::invalid_argument("min_node_size: must be >= 1");
  if (num_trees < n_trees_min) throw std::invalid_argument("num_trees: must be >= 1");
  if (!replace && !(sample_fraction > 0.0 && sample_fraction <= 1.0))
    throw std::invalid_argument("sample_fraction: must be in (0, 1]");
}

void check_mtry(const char* field, int value, int d) {
  if (value < 1 || value > d)
    throw std::invalid_argument(std::string(field) + ": must be in [1, num_features]");
}

}  // namespace

void validate_config(const RfConfig& cfg, int d) {
  check_mtry("mtry", cfg.mtry, d);
  check_common(cfg.min_node_size, cfg.num_trees, cfg.replace, cfg.sample_fraction);
}

void validate_config(const EtConfig& cfg, int d) {
  check_mtry("mtry", cfg.mtry, d);
  if (cfg.num_random_splits < 1) throw std::invalid_argument("num_random_splits: must be >= 1");
  check_common(cfg.min_node_size, cfg.num_trees, cfg.replace, cfg.sample_fraction);
}

void validate_config(const IntfConfig& cfg, int d) {
  (void)d;
  if (cfg.npairs < 1) throw std::invalid_argument("npairs: must be >= 1");
  if (d < 2) throw std::invalid_argument("npairs: bivariate splits need num_features >= 2");
  check_common(cfg.min_node_size, cfg.num_trees, cfg.replace, cfg.sample_fraction);
}

void validate_config(const RsrfConfig& cfg, int d) {
  if (cfg.width < 1) throw std::invalid_argument("width: must be >= 1");
  if (cfg.depth < 2) throw std::invalid_argument("depth: must be >= 2");
  check_mtry("mtry_random_cart", cfg.mtry_random_cart, d);
  if (cfg.mtry_mode == MtryMode::kFixed) {
    if (!cfg.mtry_random.has_value())
      throw std::invalid_argument("mtry_random: required in fixed mtry mode");
    check_mtry("mtry_random", *cfg.mtry_random, d);
    if (cfg.mtry_cart_cart.has_value())
      throw std::invalid_argument("mtry_cart_cart: not available in fixed mtry mode");
  } else {
    if (cfg.mtry_random.has_value())
      throw std::invalid_argument("mtry_random: not available in not-fixed mtry mode");
    if (cfg.include_cartcart) {
      if (!cfg.mtry_cart_cart.has_value())
        throw std::invalid_argument("mtry_cart_cart: required when include_cartcart is set");
      check_mtry("mtry_cart_cart", *cfg.mtry_cart_cart, d);
    } else if (cfg.mtry_cart_cart.has_value()) {
      throw std::invalid_argument("mtry_cart_cart: only available with include_cartcart");
    }
  }
  check_common(cfg.min_node_size, cfg.num_trees, cfg.replace, cfg.sample_fraction);
}

void validate_config(const GrowerConfig& cfg, int d) {
  std::visit([d](const auto& c) { validate_config(c, d); }, cfg);
}

int num_trees_of(const GrowerConfig& cfg) {
  return std::visit([](const auto& c) { return c.num_trees; }, cfg);
}

bool replace_of(const GrowerConfig& cfg) {
  return std::visit([](const auto& c) { return c.replace; }, cfg);
}

double sample_fraction_of(const GrowerConfig& cfg) {
  return std::visit([](const auto& c) { return c.sample_fraction; }, cfg);
}

int min_node_size_of(const GrowerConfig& cfg) {
  return std::visit([](const auto& c) { return c.min_node_size; }, cfg);
}

std::string algorithm_name(const GrowerConfig& cfg) {
  struct Visitor {
    std::string operator()(const RfConfig&) const { return "rf"; }
    std::string operator()(const EtConfig&) const { return "et"; }
    std::string operator()(const IntfConfig&) const { return "intf"; }
    std::string operator()(const RsrfConfig&) const { return "rsrf"; }
  };
  return std::visit(Visitor{}, cfg);
}

}  // namespace grove
