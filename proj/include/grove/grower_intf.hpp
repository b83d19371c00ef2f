// Interaction Forest tree growth: per node, npairs random coordinate pairs,
// each spawning up to seven bivariate candidate partitions; best by impurity
// decrease.
#pragma once

#include <vector>

#include "grove/config.hpp"
#include "grove/dataset.hpp"
#include "grove/rng.hpp"
#include "grove/tree.hpp"

namespace grove {

struct IntfCandidate {
  SplitRule rule;
  IndexSet t1, t2;
};

// The seven candidate partitions of a cell for pair (j1, j2): four quadrant
// variants and the checkerboard built on (ca1, ca2), plus the two univariate
// cuts at cc1 on j1 and cc2 on j2. Candidates with an empty side are omitted.
std::vector<IntfCandidate> seven_partitions(const IndexSet& cell, int j1, int j2, double ca1,
                                            double ca2, double cc1, double cc2, const Dataset& data);

// Pairs are drawn independently (j1 uniform, j2 uniform among the rest); split
// values are drawn uniformly over the observed unique in-node values of their
// coordinate, excluding the in-node maximum, the univariate pair first.
Tree grow_intf_tree(const Dataset& data, IndexSet resample, const IntfConfig& cfg, RngStream& rng);

}  // namespace grove
