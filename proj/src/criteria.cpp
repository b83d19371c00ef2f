#include "grove/criteria.hpp"

#include <algorithm>
#include <stdexcept>

namespace grove {

CellSums cell_sums(std::span<const std::int32_t> rows, const Dataset& data) {
  CellSums s;
  for (std::int32_t r : rows) {
    const double y = data.y(r);
    s.sum += y;
    s.sumsq += y * y;
  }
  s.count = static_cast<std::int64_t>(rows.size());
  return s;
}

double cell_mean(const IndexSet& cell, const Dataset& data) {
  if (cell.empty()) throw std::invalid_argument("empty cell");
  double sum = 0.0;
  for (std::int32_t r : cell) sum += data.y(r);
  return sum / static_cast<double>(cell.size());
}

double impurity_decrease(const IndexSet& parent, const std::vector<IndexSet>& cells,
                         const Dataset& data) {
  if (cells.empty()) throw std::invalid_argument("empty partition");
  std::size_t total = 0;
  for (const IndexSet& c : cells) {
    if (c.empty()) throw std::invalid_argument("empty cell");
    total += c.size();
  }
  if (total != parent.size()) throw std::invalid_argument("cells do not partition parent");
  {
    IndexSet merged;
    merged.reserve(total);
    for (const IndexSet& c : cells) merged.insert(merged.end(), c.begin(), c.end());
    std::sort(merged.begin(), merged.end());
    IndexSet sorted_parent = parent;
    std::sort(sorted_parent.begin(), sorted_parent.end());
    if (merged != sorted_parent) throw std::invalid_argument("cells do not partition parent");
  }

  const double parent_mean = cell_mean(parent, data);
  const double t = static_cast<double>(parent.size());
  double score = 0.0;
  for (const IndexSet& c : cells) {
    const double diff = parent_mean - cell_mean(c, data);
    score += (static_cast<double>(c.size()) / t) * diff * diff;
  }
  return score;
}

double variance_criterion(const IndexSet& parent, int feature, double threshold,
                          const Dataset& data) {
  double sum_l = 0.0, sum_r = 0.0;
  std::int64_t n_l = 0, n_r = 0;
  for (std::int32_t r : parent) {
    if (data.x(r, feature) <= threshold) {
      sum_l += data.y(r);
      ++n_l;
    } else {
      sum_r += data.y(r);
      ++n_r;
    }
  }
  if (n_l == 0 || n_r == 0) throw std::invalid_argument("degenerate split");
  const double mu_l = sum_l / static_cast<double>(n_l);
  const double mu_r = sum_r / static_cast<double>(n_r);
  double v = 0.0;
  for (std::int32_t r : parent) {
    const double mu = data.x(r, feature) <= threshold ? mu_l : mu_r;
    const double dev = data.y(r) - mu;
    v += dev * dev;
  }
  return v;
}

namespace detail {

std::optional<SweepBest> best_split_on_sorted(std::span<const std::int32_t> rows_sorted, int feature,
                                              const Dataset& data, int min_child) {
  const std::int64_t n = static_cast<std::int64_t>(rows_sorted.size());
  if (n < 2 * static_cast<std::int64_t>(min_child)) return std::nullopt;

  double total_sum = 0.0;
  for (std::int32_t r : rows_sorted) total_sum += data.y(r);

  std::optional<SweepBest> best;
  double left_sum = 0.0;
  for (std::int64_t i = 0; i + 1 < n; ++i) {
    left_sum += data.y(rows_sorted[i]);
    const double v = data.x(rows_sorted[i], feature);
    const double v_next = data.x(rows_sorted[i + 1], feature);
    if (v == v_next) continue;  // threshold set = unique values, excluding the max
    const std::int64_t c_l = i + 1;
    const std::int64_t c_r = n - c_l;
    if (c_l < min_child || c_r < min_child) continue;
    const double right_sum = total_sum - left_sum;
    const double m = left_sum * left_sum / static_cast<double>(c_l) +
                     right_sum * right_sum / static_cast<double>(c_r);
    if (!best || m > best->m_stat)
      best = SweepBest{v, m, static_cast<std::int32_t>(c_l)};
  }
  return best;
}

double scaled_score_from_cells(std::span<const CellSums> cells, double total_sum,
                               std::int64_t total_count) {
  double m = 0.0;
  for (const CellSums& c : cells) m += c.sum * c.sum / static_cast<double>(c.count);
  return m - total_sum * total_sum / static_cast<double>(total_count);
}

}  // namespace detail

std::optional<SplitCandidate> best_cart_split(const IndexSet& parent, std::span<const int> allowed,
                                              const Dataset& data, int min_child) {
  if (parent.empty()) throw std::invalid_argument("empty cell");

  std::vector<int> coords(allowed.begin(), allowed.end());
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());

  CellSums totals = cell_sums(parent, data);

  std::optional<SplitCandidate> best;
  double best_m = 0.0;
  IndexSet sorted = parent;
  for (int j : coords) {
    std::sort(sorted.begin(), sorted.end(), [&](std::int32_t a, std::int32_t b) {
      const double xa = data.x(a, j), xb = data.x(b, j);
      return xa < xb || (xa == xb && a < b);
    });
    auto sweep = detail::best_split_on_sorted(sorted, j, data, min_child);
    if (!sweep) continue;
    if (!best || sweep->m_stat > best_m) {
      best_m = sweep->m_stat;
      best = SplitCandidate{j, sweep->threshold, std::max(0.0, totals.sumsq - sweep->m_stat)};
    }
  }
  return best;
}

CriteriaArgbest max_partition_score_oracle(const IndexSet& parent,
                                           const std::vector<std::pair<IndexSet, IndexSet>>& candidates,
                                           const Dataset& data) {
  CriteriaArgbest out;
  double best_s = 0.0, best_m = 0.0, best_v = 0.0;
  for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
    const auto& [t1, t2] = candidates[i];
    const double s = impurity_decrease(parent, {t1, t2}, data);

    const CellSums s1 = cell_sums(t1, data);
    const CellSums s2 = cell_sums(t2, data);
    const double m = s1.sum * s1.sum / static_cast<double>(s1.count) +
                     s2.sum * s2.sum / static_cast<double>(s2.count);

    const double mu1 = s1.sum / static_cast<double>(s1.count);
    const double mu2 = s2.sum / static_cast<double>(s2.count);
    double v = 0.0;
    for (std::int32_t r : t1) v += (data.y(r) - mu1) * (data.y(r) - mu1);
    for (std::int32_t r : t2) v += (data.y(r) - mu2) * (data.y(r) - mu2);

    if (out.by_impurity_decrease < 0 || s > best_s) {
      best_s = s;
      out.by_impurity_decrease = i;
    }
    if (out.by_mean_square < 0 || m > best_m) {
      best_m = m;
      out.by_mean_square = i;
    }
    if (out.by_variance < 0 || v < best_v) {
      best_v = v;
      out.by_variance = i;
    }
  }
  return out;
}

}  // namespace grove
