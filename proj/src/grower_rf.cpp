#include "grove/grower_rf.hpp"

#include <algorithm>
#include <numeric>

#include "frame.hpp"

namespace grove {

namespace detail {

std::vector<int> draw_coordinate_subset(int d, int k, RngStream& rng) {
  std::vector<int> pool(d);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.uniform_int(d - i)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace detail

namespace {

using detail::NodeFrame;

struct RfGrower {
  const Dataset& data;
  const RfConfig& cfg;
  RngStream& rng;
  std::vector<TreeNode> nodes;

  std::int32_t build(NodeFrame frame) {
    const std::int32_t id = static_cast<std::int32_t>(nodes.size());
    nodes.emplace_back();

    const CellSums totals = cell_sums(frame.rows(), data);
    const auto leaf = [&] {
      nodes[id].leaf_mean = totals.sum / static_cast<double>(totals.count);
      nodes[id].leaf_count = static_cast<std::int32_t>(totals.count);
      return id;
    };

    if (frame.size() < cfg.min_node_size || detail::is_pure(frame.rows(), data)) return leaf();

    const std::vector<int> subset = detail::draw_coordinate_subset(data.num_features(), cfg.mtry, rng);
    int best_j = -1;
    double best_m = 0.0, best_s = 0.0;
    for (int j : subset) {
      auto sweep = detail::best_split_on_sorted(frame.by_coord[j], j, data, 1);
      if (!sweep) continue;
      if (best_j < 0 || sweep->m_stat > best_m) {
        best_j = j;
        best_m = sweep->m_stat;
        best_s = sweep->threshold;
      }
    }
    const double gain = best_m - totals.sum * totals.sum / static_cast<double>(totals.count);
    if (best_j < 0 || gain <= detail::zero_gain_eps(totals)) return leaf();

    const SplitRule rule = AxisSplit{best_j, best_s};
    auto [left, right] = detail::split_frame(frame, rule, data);
    frame.by_coord.clear();
    nodes[id].rule = rule;
    const std::int32_t l = build(std::move(left));
    const std::int32_t r = build(std::move(right));
    nodes[id].left = l;
    nodes[id].right = r;
    return id;
  }
};

}  // namespace

Tree grow_rf_tree(const Dataset& data, IndexSet resample, const RfConfig& cfg, RngStream& rng) {
  RfGrower grower{data, cfg, rng, {}};
  grower.build(detail::root_frame(data, resample));
  return Tree{std::move(grower.nodes), std::move(resample)};
}

}  // namespace grove
