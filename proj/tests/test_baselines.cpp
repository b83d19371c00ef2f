#include <doctest.h>

#include <random>

#include "grove/baselines.hpp"
#include "oracles.hpp"

using namespace grove;

TEST_SUITE_BEGIN("baselines");

TEST_CASE("mean_y predicts the training mean everywhere") {
  const Dataset data({0.1, 0.9}, {1, 3}, 1);
  const BaselineModel model = fit_baseline(BaselineKind::kMeanY, data);
  CHECK(predict_baseline(model, std::vector<double>{0.0}) == 2.0);
  CHECK(predict_baseline(model, std::vector<double>{123.0}) == 2.0);
}

TEST_CASE("one_nn interpolates distinct training points") {
  std::mt19937 gen(6);
  const Dataset data = oracles::continuous_dataset(gen, 30, 3);
  const BaselineModel model = fit_baseline(BaselineKind::kOneNn, data);
  std::vector<double> x(3);
  for (std::int32_t r = 0; r < data.n(); ++r) {
    for (int j = 0; j < 3; ++j) x[j] = data.x(r, j);
    CHECK(predict_baseline(model, x) == data.y(r));
  }
}

TEST_CASE("one_nn ties break to the lowest row index") {
  // rows 0 and 2 share coordinates but not responses
  const Dataset data({0.5, 0.1, 0.5, 0.9}, {7, 1, 9, 2}, 1);
  const BaselineModel model = fit_baseline(BaselineKind::kOneNn, data);
  CHECK(predict_baseline(model, std::vector<double>{0.5}) == 7.0);
}

TEST_SUITE_END();
