// Extremely Randomized Trees: per node, mtry random coordinates, each probed
// at num_random_splits points drawn uniformly inside the node's observed
// range; the best candidate by impurity decrease wins.
#pragma once

#include "grove/config.hpp"
#include "grove/dataset.hpp"
#include "grove/rng.hpp"
#include "grove/tree.hpp"

namespace grove {

// Split points are drawn on the open interval (node min, node max) of the
// column; coordinates with a degenerate range contribute no candidate and are
// not redrawn.
Tree grow_et_tree(const Dataset& data, IndexSet resample, const EtConfig& cfg, RngStream& rng);

}  // namespace grove
