#include "grove/baselines.hpp"

#include <limits>

namespace grove {

BaselineModel fit_baseline(BaselineKind kind, const Dataset& data) {
  BaselineModel model;
  model.kind = kind;
  model.train = &data;
  double sum = 0.0;
  for (double y : data.response()) sum += y;
  model.mean = sum / data.n();
  return model;
}

double predict_baseline(const BaselineModel& model, std::span<const double> x) {
  if (model.kind == BaselineKind::kMeanY) return model.mean;
  const Dataset& data = *model.train;
  double best = std::numeric_limits<double>::infinity();
  std::int32_t best_row = 0;
  for (std::int32_t r = 0; r < data.n(); ++r) {
    double dist = 0.0;
    for (int j = 0; j < data.num_features(); ++j) {
      const double diff = x[j] - data.x(r, j);
      dist += diff * diff;
    }
    if (dist < best) {
      best = dist;
      best_row = r;
    }
  }
  return data.y(best_row);
}

}  // namespace grove
