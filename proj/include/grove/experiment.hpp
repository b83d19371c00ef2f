// Simulation benchmark protocols: Monte Carlo error estimation, random-search
// tuning by cross-validation or on fresh data, nested cross-validation, and
// the report formats written by the CLI.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grove/baselines.hpp"
#include "grove/config.hpp"
#include "grove/dataset.hpp"
#include "grove/simmodels.hpp"

namespace grove {

// A fitted predictor under evaluation.
using Predictor = std::function<double(std::span<const double>)>;

struct EvalResult {
  double mse = 0.0;    // against the noiseless regression function
  double mse_y = 0.0;  // against the noisy responses
};

EvalResult mse_on_test(const Predictor& predict, const SimData& test);

// Mean/sd across replications; reps = 1 reports sd 0 by convention.
struct McResult {
  std::string algorithm;
  int reps = 0;
  double mean_mse = 0.0;
  double sd_mse = 0.0;
  double mean_mse_y = 0.0;
  double sd_mse_y = 0.0;
  std::vector<double> rep_mse;
  double wall_seconds = 0.0;
};

// Fresh train/test pair per replication; replication r derives its data and
// fit seeds from derive_seed(seed, r).
McResult run_monte_carlo(SimModel model, int d, const GrowerConfig& cfg, int n_train, int n_test,
                         int reps, std::uint64_t seed, int threads = 0);
McResult run_monte_carlo_baseline(SimModel model, int d, BaselineKind kind, int n_train, int n_test,
                                  int reps, std::uint64_t seed, int threads = 0);

// Random-search space mirroring the benchmark parameter grid; bounds are
// inclusive. Drawn configs always pass validation.
enum class Algo { kRf, kEt, kIntf, kRsrf };
Algo parse_algo(const std::string& name);
std::string algo_name(Algo algo);

struct TuningSpace {
  Algo algo = Algo::kRf;
  std::pair<int, int> mtry{1, 1};
  std::pair<int, int> num_random_splits{1, 10};
  std::pair<int, int> npairs{1, 100};
  std::pair<int, int> width{1, 15};
  std::pair<int, int> min_node_size{5, 30};
  std::vector<bool> replace_choices{true, false};
  std::vector<bool> include_cartcart_choices{true, false};
  MtryMode mtry_mode = MtryMode::kNotFixed;
  std::pair<int, int> mtry_random{1, 1};
  std::pair<int, int> mtry_random_cart{1, 1};
  std::pair<int, int> mtry_cart_cart{1, 1};
  int num_trees = 500;
  double sample_fraction = 0.632;  // when replace = false
};

TuningSpace default_space(Algo algo, int d);
GrowerConfig draw_config(const TuningSpace& space, RngStream& rng);

// Benchmark preset: the tuned configuration used for (algo, model, d)
// comparisons. Throws for combinations without a preset.
GrowerConfig preset_config(Algo algo, SimModel model, int d);

struct TuneResult {
  GrowerConfig best;
  int best_index = -1;
  double best_score = 0.0;  // cv: held-out mse_y; opt: true-m mse
  std::vector<GrowerConfig> configs;
  std::vector<double> scores;
};

// 10-fold CV random search on one dataset; selects on held-out error against
// the noisy responses. Ties go to the first drawn config.
TuneResult cv_tune(const Dataset& data, const TuningSpace& space, int combos, int folds,
                   std::uint64_t seed, int threads = 0);

// Random search scored on `sims` fresh datasets with the true regression
// function available; the datasets are shared across configs.
TuneResult opt_tune(SimModel model, int d, const TuningSpace& space, int combos, int sims,
                    int n_train, int n_test, std::uint64_t seed, int threads = 0);

struct NestedCvResult {
  std::string algorithm;
  std::vector<double> fold_mse_y;       // repeats * outer entries
  std::vector<GrowerConfig> chosen;     // winning inner config per outer fold
};

// Inner CV tuning inside each outer training fold, repeated; returns
// repeats*outer held-out estimates per algorithm.
std::vector<NestedCvResult> nested_cv(const Dataset& data, const std::vector<TuningSpace>& spaces,
                                      int inner, int outer, int repeats, int combos,
                                      std::uint64_t seed, int threads = 0);

// Report written by the CLI. The CSV is fully deterministic for a fixed seed;
// wall-clock and timestamps live only in the JSON "meta" object.
struct ReportRow {
  std::string algorithm;
  std::string params;  // "key=value;..." echo of the effective configuration
  int num_trees = 0;
  int reps = 0;
  double mean_mse = 0.0;
  double sd_mse = 0.0;
  double mean_mse_y = 0.0;
  double sd_mse_y = 0.0;
  std::vector<double> rep_mse;
  double wall_seconds = 0.0;
};

struct ExperimentReport {
  std::string suite;
  std::string model;
  int d = 0;
  int n_train = 0;
  int n_test = 0;
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;
};

ReportRow row_from_mc(const McResult& mc, const std::string& params, int num_trees);
std::string config_params_string(const GrowerConfig& cfg);

std::string report_to_csv(const ExperimentReport& report);
void write_report(const ExperimentReport& report, const std::string& out_base);  // .csv and .json

}  // namespace grove
