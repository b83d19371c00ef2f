#include "grove/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace grove {

Dataset::Dataset(std::vector<double> features, std::vector<double> response, int num_features)
    : d_(num_features), features_(std::move(features)), response_(std::move(response)) {
  if (d_ < 1) throw std::invalid_argument("Dataset: num_features must be >= 1");
  if (response_.empty()) throw std::invalid_argument("Dataset: empty response");
  if (features_.size() != response_.size() * static_cast<std::size_t>(d_))
    throw std::invalid_argument("Dataset: features size does not match n*d");
  n_ = static_cast<int>(response_.size());

  for (double v : features_)
    if (!std::isfinite(v)) throw std::invalid_argument("Dataset: non-finite feature value");
  for (double v : response_)
    if (!std::isfinite(v)) throw std::invalid_argument("Dataset: non-finite response value");

  sort_index_.resize(static_cast<std::size_t>(d_) * n_);
  for (int j = 0; j < d_; ++j) {
    auto* idx = sort_index_.data() + static_cast<std::size_t>(j) * n_;
    std::iota(idx, idx + n_, 0);
    const double* col = features_.data() + static_cast<std::size_t>(j) * n_;
    std::stable_sort(idx, idx + n_,
                     [col](std::int32_t a, std::int32_t b) { return col[a] < col[b]; });
  }
}

IndexSet Dataset::all_rows() const {
  IndexSet rows(n_);
  std::iota(rows.begin(), rows.end(), 0);
  return rows;
}

}  // namespace grove
