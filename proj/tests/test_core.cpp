#include <doctest.h>

#include <random>

#include "grove/dataset.hpp"
#include "grove/ensemble.hpp"
#include "grove/grower_rf.hpp"
#include "grove/serialize.hpp"
#include "grove/split.hpp"
#include "grove/tree.hpp"
#include "oracles.hpp"

using namespace grove;

namespace {

// d = 1, x = [1,2,3,4], y = [0,0,2,2].
Dataset four_points() { return Dataset({1, 2, 3, 4}, {0, 0, 2, 2}, 1); }

}  // namespace

TEST_SUITE_BEGIN("core");

TEST_CASE("dataset validates input") {
  CHECK_THROWS_AS(Dataset({}, {}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Dataset({1.0, 2.0}, {0.0}, 1), std::invalid_argument);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Dataset({nan}, {0.0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(Dataset({1.0}, {nan}, 1), std::invalid_argument);
}

TEST_CASE("column sort index is a sorting permutation") {
  std::mt19937 gen(7);
  const Dataset data = oracles::lattice_dataset(gen, 40, 3);
  for (int j = 0; j < data.num_features(); ++j) {
    auto idx = data.sorted_rows(j);
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      CHECK(data.x(idx[i], j) <= data.x(idx[i + 1], j));
    std::vector<std::int32_t> rows(idx.begin(), idx.end());
    std::sort(rows.begin(), rows.end());
    for (int i = 0; i < data.n(); ++i) CHECK(rows[i] == i);
  }
}

TEST_CASE("partition_indices on the axis rule") {
  const Dataset data = four_points();
  const IndexSet cell{0, 1, 2, 3};
  auto [left, right] = partition_indices(cell, AxisSplit{0, 2.0}, data);
  CHECK(left == IndexSet{0, 1});
  CHECK(right == IndexSet{2, 3});

  // threshold at the maximum: right side empty
  auto [l2, r2] = partition_indices(cell, AxisSplit{0, 4.0}, data);
  CHECK(l2 == cell);
  CHECK(r2.empty());

  // singleton cell
  auto [l3, r3] = partition_indices(IndexSet{0}, AxisSplit{0, 0.5}, data);
  CHECK(l3.empty());
  CHECK(r3 == IndexSet{0});
}

TEST_CASE("partition_indices covers the cell for every rule kind") {
  std::mt19937 gen(11);
  const Dataset data = oracles::continuous_dataset(gen, 50, 3);
  const IndexSet cell = data.all_rows();
  const std::vector<SplitRule> rules = {
      AxisSplit{1, 0.5},
      BivariateSplit{BivariateKind::LL, 0, 2, 0.4, 0.6},
      BivariateSplit{BivariateKind::GG, 0, 1, 0.5, 0.5},
      BivariateSplit{BivariateKind::Checker, 1, 2, 0.3, 0.7},
      BivariateSplit{BivariateKind::Single2, 0, 2, 0.0, 0.5},
  };
  for (const SplitRule& rule : rules) {
    auto [left, right] = partition_indices(cell, rule, data);
    CHECK(left.size() + right.size() == cell.size());
    IndexSet merged = left;
    merged.insert(merged.end(), right.begin(), right.end());
    std::sort(merged.begin(), merged.end());
    CHECK(merged == cell);
  }
}

TEST_CASE("predict_tree routes to the right leaf") {
  Tree leaf_only;
  leaf_only.nodes.push_back(TreeNode{AxisSplit{}, -1, -1, 3.5, 4});
  CHECK(predict_tree(leaf_only, std::vector<double>{0.0, 9.0}) == 3.5);

  Tree depth1;
  depth1.nodes.resize(3);
  depth1.nodes[0].rule = AxisSplit{0, 0.5};
  depth1.nodes[0].left = 1;
  depth1.nodes[0].right = 2;
  depth1.nodes[1] = TreeNode{AxisSplit{}, -1, -1, 1.0, 1};
  depth1.nodes[2] = TreeNode{AxisSplit{}, -1, -1, 2.0, 1};
  CHECK(predict_tree(depth1, std::vector<double>{0.2}) == 1.0);
  CHECK(predict_tree(depth1, std::vector<double>{0.7}) == 2.0);
}

TEST_CASE("tree fit on the four-point dataset reproduces the CART oracle") {
  const Dataset data = four_points();
  RfConfig cfg;
  cfg.mtry = 1;
  cfg.min_node_size = 2;
  cfg.num_trees = 1;
  RngStream rng(1, 0);
  const Tree tree = grow_rf_tree(data, data.all_rows(), cfg, rng);
  CHECK(tree.predict(std::vector<double>{1.0}) == 0.0);
  CHECK(tree.predict(std::vector<double>{2.0}) == 0.0);
  CHECK(tree.predict(std::vector<double>{3.0}) == 2.0);
  CHECK(tree.predict(std::vector<double>{4.0}) == 2.0);
}

TEST_CASE("predict_forest is the mean of tree predictions") {
  Tree a;
  a.nodes.push_back(TreeNode{AxisSplit{}, -1, -1, 1.0, 1});
  Tree b;
  b.nodes.push_back(TreeNode{AxisSplit{}, -1, -1, 3.0, 1});
  Forest forest{{a, b}, RfConfig{}, 0, 1};
  CHECK(predict_forest(forest, std::vector<double>{0.0}) == 2.0);

  Forest same{{a, a, a}, RfConfig{}, 0, 1};
  CHECK(predict_forest(same, std::vector<double>{0.0}) == 1.0);
}

TEST_CASE("forest prediction equals the external mean of tree predictions") {
  std::mt19937 gen(3);
  const Dataset data = oracles::continuous_dataset(gen, 120, 4);
  RfConfig cfg;
  cfg.mtry = 2;
  cfg.min_node_size = 5;
  cfg.num_trees = 100;
  const Forest forest = fit_forest(data, cfg, 99, 1);
  const std::vector<double> x = {0.3, 0.6, 0.1, 0.9};
  double sum = 0.0;
  for (const Tree& t : forest.trees) sum += t.predict(x);
  CHECK(forest.predict(x) == doctest::Approx(sum / 100.0).epsilon(1e-12));
}

TEST_CASE("routing/fit consistency: every resample row lands in a leaf with its mean") {
  std::mt19937 gen(17);
  const Dataset data = oracles::continuous_dataset(gen, 80, 3);
  RfConfig cfg;
  cfg.mtry = 3;
  cfg.min_node_size = 4;
  cfg.num_trees = 10;
  const Forest forest = fit_forest(data, cfg, 5, 1);
  for (const Tree& tree : forest.trees) {
    std::map<std::int32_t, std::pair<double, int>> by_leaf;  // leaf id -> (sum, count)
    for (std::int32_t r : tree.resample) {
      const std::int32_t leaf = tree.route_row(data, r);
      by_leaf[leaf].first += data.y(r);
      by_leaf[leaf].second += 1;
    }
    for (const auto& [leaf, agg] : by_leaf) {
      CHECK(tree.nodes[leaf].leaf_count == agg.second);
      CHECK(tree.nodes[leaf].leaf_mean ==
            doctest::Approx(agg.first / agg.second).epsilon(1e-12));
    }
    // every leaf's count is accounted for by routed rows
    int routed = 0;
    for (const auto& [leaf, agg] : by_leaf) routed += agg.second;
    CHECK(routed == static_cast<int>(tree.resample.size()));
  }
}

TEST_CASE("serialization round-trips bitwise") {
  std::mt19937 gen(23);
  const Dataset data = oracles::continuous_dataset(gen, 60, 3);
  IntfConfig cfg;
  cfg.npairs = 5;
  cfg.min_node_size = 5;
  cfg.num_trees = 8;
  const Forest forest = fit_forest(data, cfg, 11, 1);
  const std::string text = forest_to_string(forest);
  const Forest back = forest_from_json(nlohmann::json::parse(text));
  CHECK(forest_to_string(back) == text);

  const std::vector<double> x = {0.4, 0.2, 0.8};
  CHECK(back.predict(x) == forest.predict(x));
}

TEST_CASE("serialization preserves every config field, including optional ones") {
  std::mt19937 gen(29);
  const Dataset data = oracles::continuous_dataset(gen, 80, 4);
  RsrfConfig cfg;
  cfg.width = 2;
  cfg.depth = 3;
  cfg.mtry_mode = MtryMode::kFixed;
  cfg.mtry_random = 2;
  cfg.mtry_random_cart = 3;
  cfg.min_node_size = 12;
  cfg.num_trees = 4;
  cfg.replace = false;
  const Forest forest = fit_forest(data, cfg, 271, 1);
  const std::string text = forest_to_string(forest);
  const Forest back = forest_from_json(nlohmann::json::parse(text));
  CHECK(forest_to_string(back) == text);
  const auto& round = std::get<RsrfConfig>(back.config);
  CHECK(round.depth == 3);
  CHECK(round.mtry_mode == MtryMode::kFixed);
  CHECK(round.mtry_random == 2);
  CHECK(!round.mtry_cart_cart.has_value());
  CHECK(round.sample_fraction == cfg.sample_fraction);
}

TEST_CASE("forest version mismatch is rejected") {
  nlohmann::json doc;
  doc["format"] = kForestFormatName;
  doc["version"] = 999;
  CHECK_THROWS_WITH_AS(forest_from_json(doc), doctest::Contains("version mismatch"),
                       std::invalid_argument);
  CHECK_THROWS_AS(forest_from_json(nlohmann::json::object()), std::invalid_argument);
}

TEST_SUITE_END();
