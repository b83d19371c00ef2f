// Synthetic regression models for the simulation benchmark: five named
// regression functions, their feature distributions, and the band-correlated
// noise-column augmentation. Draw orders are fixed; see README.
#pragma once

#include <string>
#include <vector>

#include "grove/dataset.hpp"
#include "grove/rng.hpp"

namespace grove {

// pure_2 / pure_3 draw features uniformly on [0,1]^d; the other three use
// equicorrelated (rho = 0.3) standard normals mapped through
// x = 2.5/pi * atan(z), giving correlated marginals supported on
// (-1.25, 1.25).
enum class SimModel { kPureType, kHierarchical, kAdditive, kPure2, kPure3 };

SimModel parse_sim_model(const std::string& name);  // pure_type, hierarchical, additive, pure_2, pure_3
std::string sim_model_name(SimModel model);

int default_dim(SimModel model);       // 6 for pure_3, 4 otherwise
int min_dim(SimModel model);           // smallest d the regression function needs
bool uses_uniform_features(SimModel model);

double model_value(SimModel model, std::span<const double> x);

struct SimData {
  Dataset data;                // response = m(x) + standard normal noise
  std::vector<double> truth;   // the noiseless m(x)
};

// Throws if d is invalid for the model (pure_3 requires d = 6).
SimData generate(SimModel model, int n, int d, RngStream& rng);

// Appends `extra` jointly Gaussian columns, independent of the existing
// features, with band covariance (1, sqrt(3/8), 0.375, 0, ...) by lag. Built
// as a moving average Z_j = a0 W_j + a1 W_{j+1} + a2 W_{j+2} of i.i.d.
// standard normals with (a0, a1, a2) = (sqrt(3/8), 1/2, sqrt(3/8)), which
// reproduces the band exactly and is positive semidefinite by construction.
Dataset hd_augment(const Dataset& data, int extra, RngStream& rng);

// Rows of `data` restricted to `rows`, in the given order.
Dataset subset_rows(const Dataset& data, const IndexSet& rows);

}  // namespace grove
