// Column-major training data with precomputed per-column sort permutations.
// Immutable after construction and safe to share across threads.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace grove {

// Row indices into a Dataset. Ordered ascending; bootstrap resamples carry
// duplicate entries (multiplicity), plain cells are duplicate-free.
using IndexSet = std::vector<std::int32_t>;

class Dataset {
 public:
  // features is column-major: column j occupies [j*n, (j+1)*n).
  // Throws std::invalid_argument on empty or non-finite input.
  Dataset(std::vector<double> features, std::vector<double> response, int num_features);

  int n() const { return n_; }
  int num_features() const { return d_; }

  double x(std::int32_t row, int col) const { return features_[static_cast<std::size_t>(col) * n_ + row]; }
  double y(std::int32_t row) const { return response_[row]; }

  std::span<const double> column(int col) const {
    return {features_.data() + static_cast<std::size_t>(col) * n_, static_cast<std::size_t>(n_)};
  }
  std::span<const double> response() const { return response_; }

  // Row indices sorting column col ascending (stable in row index).
  std::span<const std::int32_t> sorted_rows(int col) const {
    return {sort_index_.data() + static_cast<std::size_t>(col) * n_, static_cast<std::size_t>(n_)};
  }

  // All rows, 0..n-1.
  IndexSet all_rows() const;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<double> features_;
  std::vector<double> response_;
  std::vector<std::int32_t> sort_index_;
};

}  // namespace grove
