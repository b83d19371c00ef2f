#include <doctest.h>

#include <random>

#include "grove/criteria.hpp"
#include "oracles.hpp"

using namespace grove;

namespace {

Dataset four_points() { return Dataset({1, 2, 3, 4}, {0, 0, 2, 2}, 1); }

// All two-cell axis partitions of a dataset, in (j, s) order.
std::vector<std::pair<IndexSet, IndexSet>> all_axis_partitions(const Dataset& data) {
  std::vector<std::pair<IndexSet, IndexSet>> out;
  const IndexSet all = data.all_rows();
  for (int j = 0; j < data.num_features(); ++j) {
    for (double s : oracles::candidate_values(all, j, data)) {
      IndexSet t1, t2;
      for (auto r : all) (data.x(r, j) <= s ? t1 : t2).push_back(r);
      if (!t1.empty() && !t2.empty()) out.emplace_back(std::move(t1), std::move(t2));
    }
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("criteria");

TEST_CASE("cell_mean") {
  const Dataset data = four_points();
  CHECK(cell_mean({0, 1, 2, 3}, data) == 1.0);
  CHECK(cell_mean({2}, data) == 2.0);
  const Dataset three({1, 2, 3}, {1, 2, 4}, 1);
  CHECK(cell_mean({0, 2}, three) == 2.5);
  CHECK_THROWS_WITH_AS(cell_mean({}, data), "empty cell", std::invalid_argument);
}

TEST_CASE("impurity_decrease") {
  const Dataset data = four_points();
  const IndexSet all{0, 1, 2, 3};
  CHECK(impurity_decrease(all, {{0, 1}, {2, 3}}, data) == 1.0);
  CHECK(impurity_decrease(all, {all}, data) == 0.0);

  const Dataset constant({1, 2, 3, 4}, {5, 5, 5, 5}, 1);
  CHECK(impurity_decrease(all, {{0}, {1, 2}, {3}}, constant) == 0.0);

  CHECK_THROWS_AS(impurity_decrease(all, {{0, 1}, {}}, data), std::invalid_argument);
  CHECK_THROWS_AS(impurity_decrease(all, {{0, 1}, {2}}, data), std::invalid_argument);
  CHECK_THROWS_AS(impurity_decrease(all, {{0, 1}, {2, 2}}, data), std::invalid_argument);
}

TEST_CASE("variance_criterion") {
  const Dataset data = four_points();
  const IndexSet all{0, 1, 2, 3};
  CHECK(variance_criterion(all, 0, 2.0, data) == 0.0);
  CHECK(variance_criterion(all, 0, 1.0, data) == doctest::Approx(8.0 / 3.0).epsilon(1e-12));

  const Dataset constant({1, 2, 3, 4}, {5, 5, 5, 5}, 1);
  for (double s : {1.0, 2.0, 3.0}) CHECK(variance_criterion(all, 0, s, constant) == 0.0);

  CHECK_THROWS_WITH_AS(variance_criterion(all, 0, 9.0, data), "degenerate split",
                       std::invalid_argument);
}

TEST_CASE("best_cart_split on the four-point dataset") {
  const Dataset data = four_points();
  const std::vector<int> allowed{0};
  const auto best = best_cart_split({0, 1, 2, 3}, allowed, data, 1);
  REQUIRE(best.has_value());
  CHECK(best->feature == 0);
  CHECK(best->threshold == 2.0);
  CHECK(best->v_score == 0.0);
}

TEST_CASE("best_cart_split returns nullopt when all values coincide") {
  const Dataset data({7, 7, 7}, {1, 2, 3}, 1);
  CHECK(!best_cart_split({0, 1, 2}, std::vector<int>{0}, data, 1).has_value());
}

TEST_CASE("best_cart_split respects min_child") {
  // only s = 2 leaves two rows on each side
  const Dataset data = four_points();
  const auto best = best_cart_split({0, 1, 2, 3}, std::vector<int>{0}, data, 2);
  REQUIRE(best.has_value());
  CHECK(best->threshold == 2.0);
  CHECK(!best_cart_split({0, 1, 2}, std::vector<int>{0}, data, 2).has_value());
}

TEST_CASE("best_cart_split matches the brute-force oracle on lattice data") {
  std::mt19937 gen(12345);
  std::uniform_int_distribution<int> nd(2, 50), dd(1, 5);
  std::vector<int> allowed;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = nd(gen), d = dd(gen);
    const Dataset data = oracles::lattice_dataset(gen, n, d);
    allowed.resize(d);
    for (int j = 0; j < d; ++j) allowed[j] = j;
    const IndexSet all = data.all_rows();
    const auto fast = best_cart_split(all, allowed, data, 1);
    const auto brute = oracles::brute_force_cart(all, allowed, data, 1);
    REQUIRE(fast.has_value() == brute.has_value());
    if (fast) {
      CHECK(fast->feature == brute->feature);
      CHECK(fast->threshold == brute->threshold);
      CHECK(fast->v_score == doctest::Approx(brute->v).epsilon(1e-9));
    }
  }
}

TEST_CASE("criteria equivalence and identities on random small datasets") {
  std::mt19937 gen(777);
  std::uniform_int_distribution<int> nd(2, 12), dd(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const Dataset data = oracles::lattice_dataset(gen, nd(gen), dd(gen));
    const IndexSet all = data.all_rows();
    const auto candidates = all_axis_partitions(data);
    if (candidates.empty()) continue;
    const auto arg = max_partition_score_oracle(all, candidates, data);
    CHECK(arg.by_impurity_decrease == arg.by_mean_square);
    CHECK(arg.by_mean_square == arg.by_variance);

    // identities: V + M = sum y^2 and T*S = M - T*mu^2
    const CellSums totals = cell_sums(all, data);
    const double t = static_cast<double>(totals.count);
    const double mu = totals.sum / t;
    for (const auto& [t1, t2] : candidates) {
      const CellSums s1 = cell_sums(t1, data);
      const CellSums s2 = cell_sums(t2, data);
      const double m = s1.sum * s1.sum / s1.count + s2.sum * s2.sum / s2.count;
      const double v = oracles::direct_v(t1, t2, data);
      const double s_hat = impurity_decrease(all, {t1, t2}, data);
      CHECK(v + m == doctest::Approx(totals.sumsq).epsilon(1e-9));
      CHECK(t * s_hat == doctest::Approx(m - t * mu * mu).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("equivalence holds on continuous data with tolerance") {
  std::mt19937 gen(4242);
  for (int trial = 0; trial < 50; ++trial) {
    const Dataset data = oracles::continuous_dataset(gen, 10, 2);
    const IndexSet all = data.all_rows();
    const auto candidates = all_axis_partitions(data);
    const auto arg = max_partition_score_oracle(all, candidates, data);
    CHECK(arg.by_impurity_decrease == arg.by_mean_square);
    CHECK(arg.by_mean_square == arg.by_variance);
  }
}

TEST_CASE("constant response: all criteria flat, first candidate wins") {
  const Dataset data({1, 2, 3, 4, 1, 1, 2, 2}, {3, 3, 3, 3}, 2);
  const auto candidates = all_axis_partitions(data);
  REQUIRE(!candidates.empty());
  const auto arg = max_partition_score_oracle(data.all_rows(), candidates, data);
  CHECK(arg.by_impurity_decrease == 0);
  CHECK(arg.by_mean_square == 0);
  CHECK(arg.by_variance == 0);
}

TEST_CASE("four-point dataset: all three criteria select s = 2") {
  const Dataset data = four_points();
  const auto candidates = all_axis_partitions(data);  // s = 1, 2, 3
  const auto arg = max_partition_score_oracle(data.all_rows(), candidates, data);
  CHECK(arg.by_impurity_decrease == 1);
  CHECK(arg.by_mean_square == 1);
  CHECK(arg.by_variance == 1);
}

TEST_CASE("impurity decrease is monotone under refinement") {
  std::mt19937 gen(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Dataset data = oracles::continuous_dataset(gen, 24, 2);
    const IndexSet all = data.all_rows();
    // coarse partition: thirds by row index; refinement splits the middle cell
    std::vector<IndexSet> coarse = {{all.begin(), all.begin() + 8},
                                    {all.begin() + 8, all.begin() + 16},
                                    {all.begin() + 16, all.end()}};
    std::vector<IndexSet> fine = {{all.begin(), all.begin() + 8},
                                  {all.begin() + 8, all.begin() + 12},
                                  {all.begin() + 12, all.begin() + 16},
                                  {all.begin() + 16, all.end()}};
    CHECK(impurity_decrease(all, fine, data) >= impurity_decrease(all, coarse, data) - 1e-12);
  }
}

TEST_SUITE_END();
