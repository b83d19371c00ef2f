#include "grove/grower_intf.hpp"

#include <array>
#include <optional>

#include "frame.hpp"

namespace grove {

namespace {

constexpr std::array<BivariateKind, 5> kPairedVariants = {
    BivariateKind::LL, BivariateKind::LG, BivariateKind::GL, BivariateKind::GG,
    BivariateKind::Checker};

}  // namespace

std::vector<IntfCandidate> seven_partitions(const IndexSet& cell, int j1, int j2, double ca1,
                                            double ca2, double cc1, double cc2,
                                            const Dataset& data) {
  std::vector<IntfCandidate> out;
  auto add = [&](const BivariateSplit& rule) {
    auto [t1, t2] = partition_indices(cell, SplitRule{rule}, data);
    if (!t1.empty() && !t2.empty())
      out.push_back(IntfCandidate{SplitRule{rule}, std::move(t1), std::move(t2)});
  };
  for (BivariateKind kind : kPairedVariants) add(BivariateSplit{kind, j1, j2, ca1, ca2});
  add(BivariateSplit{BivariateKind::Single1, j1, j2, cc1, 0.0});
  add(BivariateSplit{BivariateKind::Single2, j1, j2, 0.0, cc2});
  return out;
}

namespace {

using detail::NodeFrame;

struct IntfGrower {
  const Dataset& data;
  const IntfConfig& cfg;
  RngStream& rng;
  std::vector<TreeNode> nodes;
  std::vector<std::optional<std::vector<double>>> uniques;  // per-node cache

  // Unique observed values of coordinate j in the node, excluding the max;
  // nullopt when fewer than two distinct values exist.
  std::optional<double> draw_value(const NodeFrame& frame, int j) {
    if (!uniques[j]) {
      std::vector<double> u;
      for (std::int32_t r : frame.by_coord[j]) {
        const double v = data.x(r, j);
        if (u.empty() || v != u.back()) u.push_back(v);
      }
      uniques[j] = std::move(u);
    }
    const auto& u = *uniques[j];
    if (u.size() < 2) return std::nullopt;
    return u[rng.uniform_int(static_cast<int>(u.size()) - 1)];
  }

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

    const int d = data.num_features();
    uniques.assign(d, std::nullopt);

    std::optional<BivariateSplit> best;
    double best_m = 0.0;
    const double t = static_cast<double>(totals.count);

    auto consider = [&](const BivariateSplit& rule, double sum1, std::int64_t cnt1) {
      const std::int64_t cnt2 = totals.count - cnt1;
      if (cnt1 == 0 || cnt2 == 0) return;
      const double sum2 = totals.sum - sum1;
      const double m = sum1 * sum1 / static_cast<double>(cnt1) +
                       sum2 * sum2 / static_cast<double>(cnt2);
      if (!best || m > best_m) {
        best_m = m;
        best = rule;
      }
    };

    for (int pair = 0; pair < cfg.npairs; ++pair) {
      const int j1 = rng.uniform_int(d);
      int j2 = rng.uniform_int(d - 1);
      if (j2 >= j1) ++j2;

      const auto cc1 = draw_value(frame, j1);
      const auto cc2 = draw_value(frame, j2);
      const auto ca1 = draw_value(frame, j1);
      const auto ca2 = draw_value(frame, j2);

      // One pass accumulates the four quadrants on (ca1, ca2) and the two
      // univariate sides on cc1 / cc2.
      double quad_sum[2][2] = {};
      std::int64_t quad_cnt[2][2] = {};
      double s_sum[2] = {};
      std::int64_t s_cnt[2] = {};
      const bool have_quad = ca1 && ca2;
      for (std::int32_t r : frame.rows()) {
        const double y = data.y(r);
        const double x1 = data.x(r, j1);
        const double x2 = data.x(r, j2);
        if (have_quad) {
          const int a = x1 <= *ca1 ? 1 : 0;
          const int b = x2 <= *ca2 ? 1 : 0;
          quad_sum[a][b] += y;
          ++quad_cnt[a][b];
        }
        if (cc1 && x1 <= *cc1) {
          s_sum[0] += y;
          ++s_cnt[0];
        }
        if (cc2 && x2 <= *cc2) {
          s_sum[1] += y;
          ++s_cnt[1];
        }
      }

      if (have_quad) {
        consider({BivariateKind::LL, j1, j2, *ca1, *ca2}, quad_sum[1][1], quad_cnt[1][1]);
        consider({BivariateKind::LG, j1, j2, *ca1, *ca2}, quad_sum[1][0], quad_cnt[1][0]);
        consider({BivariateKind::GL, j1, j2, *ca1, *ca2}, quad_sum[0][1], quad_cnt[0][1]);
        consider({BivariateKind::GG, j1, j2, *ca1, *ca2}, quad_sum[0][0], quad_cnt[0][0]);
        consider({BivariateKind::Checker, j1, j2, *ca1, *ca2}, quad_sum[1][1] + quad_sum[0][0],
                 quad_cnt[1][1] + quad_cnt[0][0]);
      }
      if (cc1) consider({BivariateKind::Single1, j1, j2, *cc1, 0.0}, s_sum[0], s_cnt[0]);
      if (cc2) consider({BivariateKind::Single2, j1, j2, 0.0, *cc2}, s_sum[1], s_cnt[1]);
    }

    const double gain = best_m - totals.sum * totals.sum / t;
    if (!best || gain <= detail::zero_gain_eps(totals)) return leaf();

    const SplitRule rule{*best};
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

Tree grow_intf_tree(const Dataset& data, IndexSet resample, const IntfConfig& cfg, RngStream& rng) {
  IntfGrower grower{data, cfg, rng, {}, {}};
  grower.build(detail::root_frame(data, resample));
  return Tree{std::move(grower.nodes), std::move(resample)};
}

}  // namespace grove
