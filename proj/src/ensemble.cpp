#include "grove/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "grove/grower_et.hpp"
#include "grove/grower_intf.hpp"
#include "grove/grower_rf.hpp"
#include "grove/grower_rsrf.hpp"

namespace grove {

IndexSet draw_resample(int n, const ResamplePlan& plan, RngStream& rng) {
  IndexSet rows;
  if (plan.replace) {
    rows.reserve(n);
    for (int i = 0; i < n; ++i) rows.push_back(rng.uniform_int(n));
  } else {
    const int k = static_cast<int>(std::floor(plan.fraction * n));
    if (k < 1) throw std::invalid_argument("sample_fraction: subsample would be empty");
    std::vector<std::int32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.uniform_int(n - i)]);
    rows.assign(pool.begin(), pool.begin() + k);
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

namespace {

Tree fit_one(const Dataset& data, const GrowerConfig& cfg, std::uint64_t seed, int tree_index) {
  RngStream rng(seed, static_cast<std::uint64_t>(tree_index));
  const ResamplePlan plan{replace_of(cfg), sample_fraction_of(cfg)};
  IndexSet resample = draw_resample(data.n(), plan, rng);
  struct Visitor {
    const Dataset& data;
    IndexSet& resample;
    RngStream& rng;
    Tree operator()(const RfConfig& c) { return grow_rf_tree(data, std::move(resample), c, rng); }
    Tree operator()(const EtConfig& c) { return grow_et_tree(data, std::move(resample), c, rng); }
    Tree operator()(const IntfConfig& c) { return grow_intf_tree(data, std::move(resample), c, rng); }
    Tree operator()(const RsrfConfig& c) { return grow_rsrf_tree(data, std::move(resample), c, rng); }
  };
  return std::visit(Visitor{data, resample, rng}, cfg);
}

}  // namespace

Forest fit_forest(const Dataset& data, const GrowerConfig& cfg, std::uint64_t seed, int threads) {
  validate_config(cfg, data.num_features());
  const int b = num_trees_of(cfg);
  Forest forest{std::vector<Tree>(b), cfg, seed, data.num_features()};
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < b; ++i) forest.trees[i] = fit_one(data, cfg, seed, i);
#else
  (void)threads;
  for (int i = 0; i < b; ++i) forest.trees[i] = fit_one(data, cfg, seed, i);
#endif
  return forest;
}

Forest fit_forest_serial(const Dataset& data, const GrowerConfig& cfg, std::uint64_t seed) {
  validate_config(cfg, data.num_features());
  const int b = num_trees_of(cfg);
  Forest forest{std::vector<Tree>(b), cfg, seed, data.num_features()};
  for (int i = 0; i < b; ++i) forest.trees[i] = fit_one(data, cfg, seed, i);
  return forest;
}

}  // namespace grove
