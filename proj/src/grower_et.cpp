#include "grove/grower_et.hpp"

#include <algorithm>

#include "frame.hpp"
#include "grove/grower_rf.hpp"

namespace grove {

namespace {

using detail::NodeFrame;

struct EtGrower {
  const Dataset& data;
  const EtConfig& cfg;
  RngStream& rng;
  std::vector<TreeNode> nodes;
  std::vector<double> prefix;  // scratch: cumulative response sums along one coordinate

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
    const std::size_t n = frame.rows().size();
    int best_j = -1;
    double best_m = 0.0, best_s = 0.0;
    for (int j : subset) {
      const auto& sorted = frame.by_coord[j];
      const double lo = data.x(sorted.front(), j);
      const double hi = data.x(sorted.back(), j);
      if (lo == hi) continue;

      prefix.resize(n);
      double acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) prefix[i] = acc += data.y(sorted[i]);

      for (int k = 0; k < cfg.num_random_splits; ++k) {
        const double s = lo + rng.uniform_open01() * (hi - lo);
        if (s <= lo || s >= hi) continue;  // rounding at the interval edge
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), s,
                                         [&](double v, std::int32_t r) { return v < data.x(r, j); });
        const std::int64_t c_l = it - sorted.begin();
        const std::int64_t c_r = static_cast<std::int64_t>(n) - c_l;
        const double sum_l = prefix[c_l - 1];
        const double sum_r = totals.sum - sum_l;
        const double m = sum_l * sum_l / static_cast<double>(c_l) +
                         sum_r * sum_r / static_cast<double>(c_r);
        if (best_j < 0 || m > best_m) {
          best_j = j;
          best_m = m;
          best_s = s;
        }
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

Tree grow_et_tree(const Dataset& data, IndexSet resample, const EtConfig& cfg, RngStream& rng) {
  EtGrower grower{data, cfg, rng, {}, {}};
  grower.build(detail::root_frame(data, resample));
  return Tree{std::move(grower.nodes), std::move(resample)};
}

}  // namespace grove
