#include <doctest.h>

#include <map>
#include <random>

#include "grove/criteria.hpp"
#include "grove/grower_et.hpp"
#include "oracles.hpp"

using namespace grove;

TEST_SUITE_BEGIN("grower_et");

TEST_CASE("all-constant columns yield a single leaf") {
  const Dataset data({3, 3, 3, 3, 7, 7, 7, 7}, {1, 2, 3, 4}, 2);
  EtConfig cfg;
  cfg.mtry = 2;
  cfg.num_random_splits = 5;
  cfg.min_node_size = 1;
  RngStream rng(4, 0);
  const Tree tree = grow_et_tree(data, data.all_rows(), cfg, rng);
  CHECK(tree.nodes.size() == 1);
  CHECK(tree.nodes[0].leaf_mean == 2.5);
}

TEST_CASE("mtry=1 with one random split point grows a fully random tree") {
  // the single drawn candidate is installed whenever it has any gain
  std::mt19937 gen(41);
  const Dataset data = oracles::continuous_dataset(gen, 60, 2);
  EtConfig cfg;
  cfg.mtry = 1;
  cfg.num_random_splits = 1;
  cfg.min_node_size = 5;
  RngStream r1(19, 0), r2(19, 0);
  const Tree a = grow_et_tree(data, data.all_rows(), cfg, r1);
  const Tree b = grow_et_tree(data, data.all_rows(), cfg, r2);
  CHECK(a.nodes.size() > 1);
  REQUIRE(a.nodes.size() == b.nodes.size());
  // with one candidate per node there is no criterion left to apply; the
  // split is the drawn point itself, reproducible from the stream
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    CHECK(a.nodes[i].is_leaf() == b.nodes[i].is_leaf());
    if (!a.nodes[i].is_leaf())
      CHECK(std::get<AxisSplit>(a.nodes[i].rule).threshold ==
            std::get<AxisSplit>(b.nodes[i].rule).threshold);
  }
}

TEST_CASE("split points lie strictly inside the node's observed range") {
  std::mt19937 gen(99);
  const Dataset data = oracles::continuous_dataset(gen, 100, 3);
  EtConfig cfg;
  cfg.mtry = 3;
  cfg.num_random_splits = 4;
  cfg.min_node_size = 5;
  RngStream rng(21, 0);
  const Tree tree = grow_et_tree(data, data.all_rows(), cfg, rng);

  // gather the rows reaching each node, then check range strictness
  std::map<std::int32_t, IndexSet> rows_at{{0, data.all_rows()}};
  int internals = 0;
  for (std::int32_t id = 0; id < static_cast<std::int32_t>(tree.nodes.size()); ++id) {
    const auto& node = tree.nodes[id];
    if (node.is_leaf()) continue;
    ++internals;
    const auto& rule = std::get<AxisSplit>(node.rule);
    double lo = 1e300, hi = -1e300;
    for (auto r : rows_at[id]) {
      lo = std::min(lo, data.x(r, rule.feature));
      hi = std::max(hi, data.x(r, rule.feature));
    }
    CHECK(rule.threshold > lo);
    CHECK(rule.threshold < hi);
    auto& left = rows_at[node.left];
    auto& right = rows_at[node.right];
    for (auto r : rows_at[id])
      (data.x(r, rule.feature) <= rule.threshold ? left : right).push_back(r);
  }
  CHECK(internals > 0);
}

TEST_CASE("on the four-point dataset the chosen split always falls in [2,3)") {
  // with 1000 draws on (1,4), some point lands in the zero-variance stretch
  // (2,3) essentially always, and any point there is optimal
  const Dataset data({1, 2, 3, 4}, {0, 0, 2, 2}, 1);
  EtConfig cfg;
  cfg.mtry = 1;
  cfg.num_random_splits = 1000;
  cfg.min_node_size = 4;
  for (int seed = 0; seed < 1000; ++seed) {
    RngStream rng(static_cast<std::uint64_t>(seed), 0);
    const Tree tree = grow_et_tree(data, data.all_rows(), cfg, rng);
    REQUIRE(!tree.nodes[0].is_leaf());
    const auto& rule = std::get<AxisSplit>(tree.nodes[0].rule);
    CHECK(rule.threshold >= 2.0);
    CHECK(rule.threshold < 3.0);
  }
}

TEST_CASE("with many draws and mtry=d the chosen split approaches the CART optimum") {
  std::mt19937 gen(1212);
  std::uniform_int_distribution<int> nd(5, 20), dd(1, 3);
  int hits = 0;
  const int seeds = 100;
  for (int trial = 0; trial < seeds; ++trial) {
    const int n = nd(gen), d = dd(gen);
    const Dataset data = oracles::continuous_dataset(gen, n, d);
    EtConfig cfg;
    cfg.mtry = d;
    cfg.num_random_splits = 10 * n;
    cfg.min_node_size = n;  // depth-1 tree: only the root splits
    RngStream rng(static_cast<std::uint64_t>(trial), 0);
    const Tree tree = grow_et_tree(data, data.all_rows(), cfg, rng);
    if (tree.nodes.empty() || tree.nodes[0].is_leaf()) continue;
    const auto& rule = std::get<AxisSplit>(tree.nodes[0].rule);
    const double v_et = variance_criterion(data.all_rows(), rule.feature, rule.threshold, data);

    std::vector<int> all(d);
    for (int j = 0; j < d; ++j) all[j] = j;
    const auto brute = oracles::brute_force_cart(data.all_rows(), all, data);
    REQUIRE(brute.has_value());
    if (v_et <= brute->v + 1e-9) ++hits;
  }
  CHECK(hits >= 95);
}

TEST_SUITE_END();
