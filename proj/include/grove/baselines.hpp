// Naive reference estimators: the global response mean and the 1-nearest
// neighbor interpolant (Euclidean metric, ties to the lowest row index).
#pragma once

#include <span>

#include "grove/dataset.hpp"

namespace grove {

enum class BaselineKind { kMeanY, kOneNn };

struct BaselineModel {
  BaselineKind kind = BaselineKind::kMeanY;
  double mean = 0.0;
  const Dataset* train = nullptr;  // referenced, not owned; required for one_nn
};

BaselineModel fit_baseline(BaselineKind kind, const Dataset& data);
double predict_baseline(const BaselineModel& model, std::span<const double> x);

}  // namespace grove
