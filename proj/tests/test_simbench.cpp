#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "grove/csv.hpp"
#include "grove/experiment.hpp"
#include "grove/simmodels.hpp"

using namespace grove;

namespace {

double pearson(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

}  // namespace

TEST_SUITE_BEGIN("simbench");

TEST_CASE("model functions evaluate the documented formulas") {
  const std::vector<double> x{0.5, 0.3, 0.4, 0.1, 0.2, 0.6};
  // pure_2 interaction factor vanishes at x1 = 0.5
  CHECK(model_value(SimModel::kPure2, x) == doctest::Approx(5.0 * 0.4).epsilon(1e-12));
  CHECK(model_value(SimModel::kPure3, x) ==
        doctest::Approx(10.0 * 0.0 * (0.3 - 0.5) + 0.4 + 0.1 + 0.2 + 0.6).epsilon(1e-12));
  CHECK(model_value(SimModel::kAdditive, x) ==
        doctest::Approx(-2 * std::sin(0.5 * std::numbers::pi) + 2 * std::sin(0.3 * std::numbers::pi) -
                        2 * std::sin(0.4 * std::numbers::pi))
            .epsilon(1e-12));
}

TEST_CASE("generate validates dimensions") {
  RngStream rng(1, 0);
  CHECK_THROWS_AS(generate(SimModel::kPure3, 10, 5, rng), std::invalid_argument);
  CHECK_THROWS_AS(generate(SimModel::kAdditive, 10, 2, rng), std::invalid_argument);
}

TEST_CASE("correlated feature marginals stay inside (-1.25, 1.25)") {
  RngStream rng(3, 0);
  const SimData sim = generate(SimModel::kPureType, 5000, 4, rng);
  for (int j = 0; j < 4; ++j) {
    for (double v : sim.data.column(j)) {
      CHECK(v > -1.25);
      CHECK(v < 1.25);
    }
  }
}

TEST_CASE("pure models draw uniform features on [0,1]") {
  RngStream rng(3, 0);
  const SimData sim = generate(SimModel::kPure3, 5000, 6, rng);
  for (int j = 0; j < 6; ++j) {
    double mean = 0;
    for (double v : sim.data.column(j)) {
      CHECK(v >= 0.0);
      CHECK(v < 1.0);
      mean += v;
    }
    CHECK(std::abs(mean / sim.data.n() - 0.5) < 0.02);
  }
}

TEST_CASE("feature correlation matches a transform-then-correlate oracle") {
  const int n = 100000;
  RngStream rng(12, 0);
  const SimData sim = generate(SimModel::kAdditive, n, 4, rng);

  // independent Monte Carlo of the same transform
  std::mt19937 gen(987);
  std::normal_distribution<double> nd;
  const double scale = 2.5 / std::numbers::pi;
  std::vector<double> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    const double e1 = nd(gen), e2 = nd(gen);
    const double g1 = e1;
    const double g2 = 0.3 * e1 + std::sqrt(1.0 - 0.09) * e2;
    a[i] = scale * std::atan(g1);
    b[i] = scale * std::atan(g2);
  }
  const double implied = pearson(a, b);

  for (int j1 = 0; j1 < 4; ++j1)
    for (int j2 = j1 + 1; j2 < 4; ++j2)
      CHECK(std::abs(pearson(sim.data.column(j1), sim.data.column(j2)) - implied) < 0.02);
}

TEST_CASE("noise is independent of the features") {
  const int n = 100000;
  RngStream rng(9, 0);
  const SimData sim = generate(SimModel::kPure2, n, 4, rng);
  std::vector<double> eps(n);
  for (int i = 0; i < n; ++i) eps[i] = sim.data.y(i) - sim.truth[i];
  const double bound = 3.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < 4; ++j) CHECK(std::abs(pearson(eps, sim.data.column(j))) < bound);
}

TEST_CASE("mse_on_test") {
  SimData test{Dataset({0.1, 0.2}, {0.5, 2.5}, 1), {0.0, 2.0}};
  const EvalResult perfect = mse_on_test([&](std::span<const double> x) {
    return x[0] <= 0.15 ? 0.0 : 2.0;
  }, test);
  CHECK(perfect.mse == 0.0);

  const EvalResult constant = mse_on_test([](std::span<const double>) { return 1.0; }, test);
  CHECK(constant.mse == 1.0);  // truth [0,2] vs predictions [1,1]
}

TEST_CASE("run_monte_carlo is reproducible and honors the sd convention") {
  RfConfig cfg;
  cfg.mtry = 3;
  cfg.min_node_size = 10;
  cfg.num_trees = 20;
  const McResult a = run_monte_carlo(SimModel::kPure2, 4, cfg, 80, 80, 3, 71, 2);
  const McResult b = run_monte_carlo(SimModel::kPure2, 4, cfg, 80, 80, 3, 71, 1);
  CHECK(a.rep_mse == b.rep_mse);  // identical across thread counts
  CHECK(a.mean_mse == b.mean_mse);

  const McResult single = run_monte_carlo(SimModel::kPure2, 4, cfg, 80, 80, 1, 71, 1);
  CHECK(single.sd_mse == 0.0);
  CHECK(single.reps == 1);
}

TEST_CASE("hd_augment appends the requested number of columns and keeps the originals") {
  RngStream gen(5, 0);
  const SimData sim = generate(SimModel::kPure2, 200, 4, gen);
  RngStream rng(6, 0);
  const Dataset augmented = hd_augment(sim.data, 50, rng);
  CHECK(augmented.num_features() == 54);
  CHECK(augmented.n() == 200);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 200; ++i) CHECK(augmented.x(i, j) == sim.data.x(i, j));
  for (int i = 0; i < 200; ++i) CHECK(augmented.y(i) == sim.data.y(i));
}

TEST_CASE("draw_config always yields a valid config") {
  RngStream rng(31, 0);
  for (Algo algo : {Algo::kRf, Algo::kEt, Algo::kIntf, Algo::kRsrf}) {
    const TuningSpace space = default_space(algo, 6);
    for (int i = 0; i < 200; ++i) CHECK_NOTHROW(validate_config(draw_config(space, rng), 6));
  }
}

TEST_CASE("cv_tune: a single-config space returns that config; folds = n is accepted") {
  RngStream gen(2, 0);
  const SimData sim = generate(SimModel::kPure2, 24, 4, gen);

  TuningSpace space = default_space(Algo::kRf, 4);
  space.mtry = {2, 2};
  space.min_node_size = {6, 6};
  space.replace_choices = {true};
  space.num_trees = 10;

  const TuneResult result = cv_tune(sim.data, space, 1, 4, 17, 1);
  CHECK(result.best_index == 0);
  const auto& cfg = std::get<RfConfig>(result.best);
  CHECK(cfg.mtry == 2);
  CHECK(cfg.min_node_size == 6);

  CHECK_NOTHROW(cv_tune(sim.data, space, 1, sim.data.n(), 17, 1));  // leave-one-out
  CHECK_THROWS_AS(cv_tune(sim.data, space, 1, sim.data.n() + 1, 17, 1), std::invalid_argument);
}

TEST_CASE("opt_tune: single-config identity and sims = 1 accepted") {
  TuningSpace space = default_space(Algo::kRf, 4);
  space.mtry = {4, 4};
  space.min_node_size = {5, 5};
  space.replace_choices = {true};
  space.num_trees = 10;
  const TuneResult result = opt_tune(SimModel::kPure2, 4, space, 1, 1, 60, 60, 23, 1);
  CHECK(result.best_index == 0);
  CHECK(std::get<RfConfig>(result.best).mtry == 4);
}

TEST_CASE("opt_tune prefers the plainly better config") {
  // num_trees aside, a leaf-only forest (min_node_size > n) must lose to a
  // real tree on a strong-signal model
  TuningSpace space = default_space(Algo::kRf, 4);
  space.mtry = {4, 4};
  space.min_node_size = {5, 500};  // draws span useless and useful settings
  space.replace_choices = {true};
  space.num_trees = 10;
  const TuneResult result = opt_tune(SimModel::kAdditive, 4, space, 6, 2, 100, 100, 5, 2);
  // the winner cannot be a leaf-only config unless every draw was one
  bool any_small = false;
  for (const auto& c : result.configs) any_small |= std::get<RfConfig>(c).min_node_size <= 100;
  REQUIRE(any_small);
  CHECK(std::get<RfConfig>(result.best).min_node_size <= 100);
}

TEST_CASE("nested_cv returns repeats x outer estimates per algorithm") {
  RngStream gen(4, 0);
  const SimData sim = generate(SimModel::kPure2, 40, 4, gen);
  TuningSpace space = default_space(Algo::kRf, 4);
  space.num_trees = 8;
  const auto results = nested_cv(sim.data, {space}, 2, 2, 1, 2, 9, 1);
  REQUIRE(results.size() == 1);
  CHECK(results[0].fold_mse_y.size() == 2);
  CHECK(results[0].chosen.size() == 2);
}

TEST_CASE("nested_cv on pure-noise data: every algorithm lands near the noise variance") {
  // y is standard normal noise around zero; no structure to find
  RngStream gen(10, 0);
  const int n = 120;
  std::vector<double> features(static_cast<std::size_t>(n) * 3);
  std::vector<double> response(n);
  for (auto& v : features) v = gen.uniform01();
  for (auto& v : response) v = gen.normal();
  const Dataset data(std::move(features), std::move(response), 3);

  TuningSpace rf = default_space(Algo::kRf, 3);
  rf.num_trees = 30;
  TuningSpace et = default_space(Algo::kEt, 3);
  et.num_trees = 30;
  const auto results = nested_cv(data, {rf, et}, 3, 3, 1, 3, 13, 2);
  for (const auto& algo : results) {
    double mean = 0;
    for (double v : algo.fold_mse_y) mean += v;
    mean /= algo.fold_mse_y.size();
    CHECK(mean > 0.5);
    CHECK(mean < 2.0);
  }
}

TEST_CASE("nested_cv on a tabular fixture: chosen npairs varies across folds") {
  // abalone-like: one categorical column expanded to indicators, numeric
  // rest, noisy response
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / ("grove_ncv_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  std::mt19937 gen(2025);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 1.0);
  const char* sexes[3] = {"M", "F", "I"};
  std::string csv = "sex,len,diam,weight,rings\n";
  char buf[160];
  for (int i = 0; i < 240; ++i) {
    const double len = ud(gen), diam = ud(gen), weight = ud(gen);
    const double rings = 4.0 + 6.0 * len * diam + 2.0 * weight + noise(gen);
    std::snprintf(buf, sizeof buf, "%s,%.6f,%.6f,%.6f,%.4f\n", sexes[i % 3], len, diam, weight,
                  rings);
    csv += buf;
  }
  const std::string path = (dir / "abalone_like.csv").string();
  {
    std::ofstream out(path);
    out << csv;
  }
  TabularSchema schema;
  schema.target = "rings";
  schema.categorical = {"sex"};
  const LoadedTable table = load_csv(path, schema);
  fs::remove_all(dir);
  REQUIRE(table.data.num_features() == 5);  // 2 indicators + 3 numeric

  TuningSpace space = default_space(Algo::kIntf, table.data.num_features());
  space.npairs = {1, 60};
  space.num_trees = 20;
  const auto results = nested_cv(table.data, {space}, 3, 3, 1, 4, 77, 2);
  REQUIRE(results.size() == 1);
  REQUIRE(results[0].fold_mse_y.size() == 3);
  std::set<int> distinct_npairs;
  for (const GrowerConfig& cfg : results[0].chosen) {
    const auto& intf = std::get<IntfConfig>(cfg);
    CHECK(intf.npairs >= 1);
    CHECK(intf.npairs <= 60);
    distinct_npairs.insert(intf.npairs);
  }
  CHECK(distinct_npairs.size() >= 2);  // selection shifts from fold to fold
}

TEST_CASE("report CSV is stable for identical inputs") {
  ExperimentReport report;
  report.suite = "simulate";
  report.model = "pure_2";
  report.d = 4;
  report.n_train = 10;
  report.n_test = 10;
  report.seed = 3;
  ReportRow row;
  row.algorithm = "rf";
  row.params = "mtry=2";
  row.num_trees = 10;
  row.reps = 2;
  row.mean_mse = 0.123456789;
  report.rows.push_back(row);
  const std::string a = report_to_csv(report);
  CHECK(a == report_to_csv(report));
  CHECK(a.find("rf") != std::string::npos);
  CHECK(a.find("0.123457") != std::string::npos);  // fixed formatting
}

TEST_SUITE_END();
