// Impurity scores: the within-child variance criterion V, the impurity
// decrease score S over arbitrary L-cell partitions, and the best-CART-split
// search. All functions are pure over immutable inputs.
#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "grove/dataset.hpp"

namespace grove {

struct SplitCandidate {
  int feature = -1;
  double threshold = 0.0;
  double v_score = 0.0;  // sum of within-child squared deviations
};

// Running sums of a cell's responses.
struct CellSums {
  double sum = 0.0;
  double sumsq = 0.0;
  std::int64_t count = 0;
};

CellSums cell_sums(std::span<const std::int32_t> rows, const Dataset& data);

// Mean response over a nonempty cell. Throws std::invalid_argument("empty cell").
double cell_mean(const IndexSet& cell, const Dataset& data);

// Impurity decrease of a partition {t_1..t_L} of parent:
//   S = sum_l (#t_l / #t) * (mean(t) - mean(t_l))^2.
// Throws if any cell is empty or the cells do not partition parent.
double impurity_decrease(const IndexSet& parent, const std::vector<IndexSet>& cells,
                         const Dataset& data);

// V(j,s): within-child sum of squared deviations for the axis split x_j <= s.
// Throws std::invalid_argument("degenerate split") if a daughter is empty.
double variance_criterion(const IndexSet& parent, int feature, double threshold,
                          const Dataset& data);

// Best axis split over the allowed coordinates. Candidate thresholds are the
// unique observed values of the column within the parent, excluding the
// within-parent maximum; both children must have >= min_child rows. Ties break
// to the smallest coordinate, then the smallest threshold. nullopt when no
// valid candidate exists.
std::optional<SplitCandidate> best_cart_split(const IndexSet& parent, std::span<const int> allowed,
                                              const Dataset& data, int min_child = 1);

// Argbest of a candidate set of two-cell partitions under each of the three
// equivalent criteria (first candidate wins ties). Test oracle.
struct CriteriaArgbest {
  int by_impurity_decrease = -1;
  int by_mean_square = -1;
  int by_variance = -1;
};
CriteriaArgbest max_partition_score_oracle(const IndexSet& parent,
                                           const std::vector<std::pair<IndexSet, IndexSet>>& candidates,
                                           const Dataset& data);

namespace detail {

// Best threshold along one coordinate, given the cell's rows sorted by that
// coordinate. m_stat is sum_k S_k^2/c_k, the quantity maximized; V follows as
// sumsq - m_stat.
struct SweepBest {
  double threshold = 0.0;
  double m_stat = 0.0;
  std::int32_t left_count = 0;
};
std::optional<SweepBest> best_split_on_sorted(std::span<const std::int32_t> rows_sorted, int feature,
                                              const Dataset& data, int min_child);

// T * S(t; P) computed from per-cell (sum, count) aggregates:
//   T*S = sum_l S_l^2/c_l - S^2/T.
double scaled_score_from_cells(std::span<const CellSums> cells, double total_sum,
                               std::int64_t total_count);

}  // namespace detail

}  // namespace grove
