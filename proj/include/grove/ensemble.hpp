// Resampling and forest construction shared by all growers. Tree b draws its
// resample and grows from RngStream(seed, b), so fits are reproducible and
// independent of scheduling; the OpenMP path and the serial reference produce
// identical forests.
#pragma once

#include <cstdint>

#include "grove/config.hpp"
#include "grove/dataset.hpp"
#include "grove/forest.hpp"
#include "grove/rng.hpp"

namespace grove {

struct ResamplePlan {
  bool replace = true;
  double fraction = 1.0;  // used when replace = false
};

// replace: n draws with replacement, stored sorted with multiplicity.
// Otherwise floor(fraction*n) distinct rows, sorted ascending.
IndexSet draw_resample(int n, const ResamplePlan& plan, RngStream& rng);

// threads = 0 picks the hardware default. Throws on invalid config.
Forest fit_forest(const Dataset& data, const GrowerConfig& cfg, std::uint64_t seed,
                  int threads = 0);

// Plain sequential loop, kept as the reference path for testing.
Forest fit_forest_serial(const Dataset& data, const GrowerConfig& cfg, std::uint64_t seed);

}  // namespace grove
