// RSRF tree growth: per node, a width-W competition among candidate
// partitions, each produced by depth-1 levels of random splits followed by a
// CART split of every end cell, scored jointly by the multi-cell impurity
// decrease. Optionally a fully greedy CART-CART candidate joins the
// competition at index 0 and wins exact ties.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "grove/config.hpp"
#include "grove/dataset.hpp"
#include "grove/rng.hpp"
#include "grove/tree.hpp"

namespace grove {

struct RandomSplitDraw {
  int feature = -1;
  double value = 0.0;
};

// One random split pair: feature uniform over `allowed` (all coordinates when
// empty), value uniform over the unique observed in-cell values of that
// column excluding the in-cell maximum. nullopt when no valid value exists
// (the feature draw is still consumed).
std::optional<RandomSplitDraw> draw_random_split(const IndexSet& cell, const Dataset& data,
                                                 RngStream& rng, std::span<const int> allowed = {});

struct CandidateStep {
  enum class Kind { kRandomCart, kCartCart };
  Kind kind = Kind::kRandomCart;
  std::vector<IndexSet> cells;  // end cells, left-to-right
  double score = 0.0;           // impurity decrease over the cells
};

// Single candidate generation on an arbitrary cell, as used inside tree
// growth; in fixed mtry mode the node-level coordinate subsets are drawn
// first. Exposed for tests.
std::optional<CandidateStep> random_cart_step(const IndexSet& cell, const Dataset& data,
                                              RngStream& rng, const RsrfConfig& cfg);
std::optional<CandidateStep> cart_cart_step(const IndexSet& cell, const Dataset& data,
                                            RngStream& rng, const RsrfConfig& cfg);

// Per-node trace of the candidate competition, retained when a recorder is
// supplied to grow_rsrf_tree.
struct RsrfDebug {
  struct Node {
    std::vector<double> scores;                  // candidate scores, generation order
    int chosen = -1;                             // index of the installed candidate
    std::vector<std::vector<IndexSet>> cells;    // end cells per candidate
    std::vector<std::vector<int>> cart_subsets;  // CART coordinate pools per candidate, flattened
  };
  std::vector<Node> nodes;
};

Tree grow_rsrf_tree(const Dataset& data, IndexSet resample, const RsrfConfig& cfg, RngStream& rng,
                    RsrfDebug* debug = nullptr);

}  // namespace grove
