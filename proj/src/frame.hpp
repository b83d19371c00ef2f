// Internal tree-growing machinery: a node's rows held sorted by every
// coordinate. Built once per tree from the dataset's global sort permutations
// (bootstrap multiplicity expands rows in place) and propagated to children by
// stable partition, so criterion sweeps never re-sort.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "grove/criteria.hpp"
#include "grove/dataset.hpp"
#include "grove/split.hpp"

namespace grove::detail {

struct NodeFrame {
  std::vector<std::vector<std::int32_t>> by_coord;  // one sorted row list per coordinate

  std::int32_t size() const { return static_cast<std::int32_t>(by_coord[0].size()); }
  const std::vector<std::int32_t>& rows() const { return by_coord[0]; }
};

inline NodeFrame root_frame(const Dataset& data, const IndexSet& resample) {
  std::vector<std::int32_t> mult(data.n(), 0);
  for (std::int32_t r : resample) ++mult[r];

  NodeFrame frame;
  frame.by_coord.resize(data.num_features());
  for (int j = 0; j < data.num_features(); ++j) {
    auto& list = frame.by_coord[j];
    list.reserve(resample.size());
    for (std::int32_t r : data.sorted_rows(j))
      for (std::int32_t k = 0; k < mult[r]; ++k) list.push_back(r);
  }
  return frame;
}

inline std::pair<NodeFrame, NodeFrame> split_frame(const NodeFrame& frame, const SplitRule& rule,
                                                   const Dataset& data) {
  std::pair<NodeFrame, NodeFrame> out;
  out.first.by_coord.resize(frame.by_coord.size());
  out.second.by_coord.resize(frame.by_coord.size());
  for (std::size_t j = 0; j < frame.by_coord.size(); ++j) {
    for (std::int32_t r : frame.by_coord[j])
      (row_goes_left(rule, data, r) ? out.first : out.second).by_coord[j].push_back(r);
  }
  return out;
}

// Rows of `rows` (with multiplicity) reordered by coordinate j, derived from a
// parent frame's sorted list. counts is an n-sized scratch buffer, zeroed on
// entry and on exit.
inline std::vector<std::int32_t> filter_sorted(const std::vector<std::int32_t>& parent_sorted,
                                               const std::vector<std::int32_t>& rows,
                                               std::vector<std::int32_t>& counts) {
  for (std::int32_t r : rows) ++counts[r];
  std::vector<std::int32_t> out;
  out.reserve(rows.size());
  for (std::int32_t r : parent_sorted) {
    if (counts[r] > 0) {
      out.push_back(r);
      --counts[r];
    }
  }
  // counts is all zeros again: every row of `rows` occurs in parent_sorted.
  return out;
}

// True when every response in the cell is bitwise identical.
inline bool is_pure(const std::vector<std::int32_t>& rows, const Dataset& data) {
  const double first = data.y(rows.front());
  for (std::int32_t r : rows)
    if (data.y(r) != first) return false;
  return true;
}

// Stop threshold for the best split's scaled gain T*S; relative to the node's
// response magnitude so constant-response nodes with inexact sums still stop.
inline double zero_gain_eps(const CellSums& totals) {
  return 1e-12 * std::max(1.0, totals.sumsq);
}

}  // namespace grove::detail
