// Random Forest tree growth: recursive CART splits, each restricted to a
// per-node random coordinate subset of size mtry.
#pragma once

#include "grove/config.hpp"
#include "grove/dataset.hpp"
#include "grove/rng.hpp"
#include "grove/tree.hpp"

namespace grove {

// Stops on node size < min_node_size, on a pure node, on an undrawable or
// zero-gain best split. The drawn subset is not re-drawn when it admits no
// valid split.
Tree grow_rf_tree(const Dataset& data, IndexSet resample, const RfConfig& cfg, RngStream& rng);

namespace detail {
// Distinct coordinates drawn uniformly without replacement, returned ascending.
// Consumes exactly k uniform_int draws.
std::vector<int> draw_coordinate_subset(int d, int k, RngStream& rng);
}  // namespace detail

}  // namespace grove
