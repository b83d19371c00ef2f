// Forest = trees grown on independent resamples; prediction averages trees.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grove/config.hpp"
#include "grove/tree.hpp"

namespace grove {

struct Forest {
  std::vector<Tree> trees;
  GrowerConfig config;
  std::uint64_t seed = 0;
  int num_features = 0;

  double predict(std::span<const double> x) const {
    double sum = 0.0;
    for (const Tree& t : trees) sum += t.predict(x);
    return sum / static_cast<double>(trees.size());
  }
};

inline double predict_forest(const Forest& forest, std::span<const double> x) {
  return forest.predict(x);
}

}  // namespace grove
