// Fitted tree and forest structures plus prediction.
#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "grove/dataset.hpp"
#include "grove/split.hpp"

namespace grove {

// Nodes live in a flat vector; node 0 is the root. Leaves have left < 0 and
// carry the mean response (over the resample rows routed there, with
// bootstrap multiplicity) and their count.
struct TreeNode {
  SplitRule rule{AxisSplit{}};
  std::int32_t left = -1;
  std::int32_t right = -1;
  double leaf_mean = 0.0;
  std::int32_t leaf_count = 0;

  bool is_leaf() const { return left < 0; }
};

struct Tree {
  std::vector<TreeNode> nodes;
  IndexSet resample;  // rows this tree was fit on, with multiplicity

  double predict(std::span<const double> x) const {
    std::int32_t id = 0;
    while (!nodes[id].is_leaf()) id = goes_left(nodes[id].rule, x) ? nodes[id].left : nodes[id].right;
    return nodes[id].leaf_mean;
  }

  // Leaf node index reached by a training row.
  std::int32_t route_row(const Dataset& data, std::int32_t row) const {
    std::int32_t id = 0;
    while (!nodes[id].is_leaf())
      id = row_goes_left(nodes[id].rule, data, row) ? nodes[id].left : nodes[id].right;
    return id;
  }
};

inline double predict_tree(const Tree& tree, std::span<const double> x) { return tree.predict(x); }

}  // namespace grove
