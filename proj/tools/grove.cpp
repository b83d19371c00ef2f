// grove: regression tree ensembles with interaction-aware splitting.
// Subcommands: simulate, fit, predict, tune, bench. Batch interface only;
// every run is reproducible from its seed.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "grove/csv.hpp"
#include "grove/ensemble.hpp"
#include "grove/experiment.hpp"
#include "grove/serialize.hpp"
#include "grove/simmodels.hpp"
#include "grove/textconfig.hpp"

namespace {

using namespace grove;

struct Overrides {
  std::optional<int> mtry, min_node_size, num_trees, num_random_splits, npairs, width;
  std::optional<int> mtry_random, mtry_random_cart, mtry_cart_cart, depth;
  std::optional<bool> replace, include_cartcart;
  std::optional<double> sample_fraction;
  std::optional<std::string> mtry_mode;

  void merge_file(const TextConfig& cfg) {
    auto opt_int = [&](std::initializer_list<const char*> keys, std::optional<int>& slot) {
      if (slot) return;  // flags beat file values
      for (const char* key : keys)
        if (config_has(cfg, key)) {
          slot = config_int(cfg, key);
          return;
        }
    };
    auto opt_bool = [&](const char* key, std::optional<bool>& slot) {
      if (!slot && config_has(cfg, key)) slot = config_bool(cfg, key);
    };
    opt_int({"mtry"}, mtry);
    opt_int({"min.node.size", "min_nodesize"}, min_node_size);
    opt_int({"num.trees", "num_trees"}, num_trees);
    opt_int({"num.random.splits"}, num_random_splits);
    opt_int({"npairs"}, npairs);
    opt_int({"width"}, width);
    opt_int({"mtry_random"}, mtry_random);
    opt_int({"mtry_random_cart"}, mtry_random_cart);
    opt_int({"mtry_cart_cart"}, mtry_cart_cart);
    opt_int({"depth"}, depth);
    opt_bool("replace", replace);
    opt_bool("include_cartcart", include_cartcart);
    if (!sample_fraction && config_has(cfg, "sample.fraction"))
      sample_fraction = config_double(cfg, "sample.fraction");
    if (!mtry_mode && config_has(cfg, "mtrymode")) mtry_mode = config_string(cfg, "mtrymode");
  }

  // strict = reject parameters that do not belong to the algorithm
  GrowerConfig apply(GrowerConfig cfg, bool strict) const {
    auto reject = [strict](const char* field) {
      if (strict)
        throw std::invalid_argument(std::string(field) + ": not a parameter of this algorithm");
    };
    std::visit(
        [&](auto& c) {
          using T = std::decay_t<decltype(c)>;
          if (min_node_size) c.min_node_size = *min_node_size;
          if (num_trees) c.num_trees = *num_trees;
          if (replace) c.replace = *replace;
          if (sample_fraction) c.sample_fraction = *sample_fraction;
          if constexpr (std::is_same_v<T, RfConfig>) {
            if (mtry) c.mtry = *mtry;
            if (num_random_splits) reject("num.random.splits");
            if (npairs) reject("npairs");
            if (width) reject("width");
          } else if constexpr (std::is_same_v<T, EtConfig>) {
            if (mtry) c.mtry = *mtry;
            if (num_random_splits) c.num_random_splits = *num_random_splits;
            if (npairs) reject("npairs");
            if (width) reject("width");
          } else if constexpr (std::is_same_v<T, IntfConfig>) {
            if (npairs) c.npairs = *npairs;
            if (mtry) reject("mtry");
            if (width) reject("width");
          } else if constexpr (std::is_same_v<T, RsrfConfig>) {
            if (width) c.width = *width;
            if (include_cartcart) c.include_cartcart = *include_cartcart;
            if (mtry_mode) {
              if (*mtry_mode != "fixed" && *mtry_mode != "not-fixed" && *mtry_mode != "not_fixed")
                throw std::invalid_argument("mtrymode: expected fixed or not-fixed");
              c.mtry_mode = *mtry_mode == "fixed" ? MtryMode::kFixed : MtryMode::kNotFixed;
            }
            if (mtry_random) c.mtry_random = *mtry_random;
            if (mtry_random_cart) c.mtry_random_cart = *mtry_random_cart;
            if (mtry_cart_cart) c.mtry_cart_cart = *mtry_cart_cart;
            if (depth) c.depth = *depth;
            if (mtry) reject("mtry");
            if (npairs) reject("npairs");
          }
        },
        cfg);
    return cfg;
  }
};

GrowerConfig blank_config(Algo algo, int d) {
  switch (algo) {
    case Algo::kRf: {
      RfConfig c;
      c.mtry = std::max(1, d / 3);
      return c;
    }
    case Algo::kEt: {
      EtConfig c;
      c.mtry = std::max(1, d / 3);
      return c;
    }
    case Algo::kIntf: return IntfConfig{};
    case Algo::kRsrf: return RsrfConfig{};
  }
  throw std::logic_error("unknown algo");
}

// Preset for (algo, model, d) when one exists, else library defaults.
GrowerConfig base_config(Algo algo, SimModel model, int d) {
  try {
    return preset_config(algo, model, d);
  } catch (const std::invalid_argument&) {
    return blank_config(algo, d);
  }
}

void add_param_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--mtry", o.mtry, "coordinate subset size (rf, et)");
  cmd->add_option("--min-node-size", o.min_node_size, "smallest splittable node");
  cmd->add_option("--trees", o.num_trees, "number of trees");
  cmd->add_option("--num-random-splits", o.num_random_splits, "random split points per coordinate (et)");
  cmd->add_option("--npairs", o.npairs, "coordinate pairs per node (intf)");
  cmd->add_option("--width", o.width, "candidate partitions per node (rsrf)");
  cmd->add_option("--mtry-random", o.mtry_random, "random-split pool, fixed mode (rsrf)");
  cmd->add_option("--mtry-random-cart", o.mtry_random_cart, "CART pool inside a random step (rsrf)");
  cmd->add_option("--mtry-cart-cart", o.mtry_cart_cart, "CART pool of the greedy step (rsrf)");
  cmd->add_option("--depth", o.depth, "random-split levels + 1 (rsrf)");
  cmd->add_option("--replace", o.replace, "bootstrap (true) or subsample (false)");
  cmd->add_option("--include-cartcart", o.include_cartcart, "add the greedy candidate (rsrf)");
  cmd->add_option("--sample-fraction", o.sample_fraction, "subsample fraction when replace=false");
  cmd->add_option("--mtry-mode", o.mtry_mode, "fixed or not-fixed (rsrf)");
}

ReportRow baseline_row(SimModel model, int d, BaselineKind kind, int n_train, int n_test, int reps,
                       std::uint64_t seed, int threads) {
  const McResult mc = run_monte_carlo_baseline(model, d, kind, n_train, n_test, reps, seed, threads);
  return row_from_mc(mc, "", 0);
}

void print_row(const ReportRow& row) {
  std::printf("%-8s mean_mse=%.4f (sd %.4f)  mse_y=%.4f  [%.1fs]\n", row.algorithm.c_str(),
              row.mean_mse, row.sd_mse, row.mean_mse_y, row.wall_seconds);
}

int cmd_simulate(const std::string& model_name, int d_opt, const std::string& algo_name_arg,
                 int reps, int n_train, int n_test, std::uint64_t seed, int threads,
                 const Overrides& overrides, const std::string& out) {
  const SimModel model = parse_sim_model(model_name);
  const int d = d_opt > 0 ? d_opt : default_dim(model);

  ExperimentReport report;
  report.suite = "simulate";
  report.model = sim_model_name(model);
  report.d = d;
  report.n_train = n_train;
  report.n_test = n_test;
  report.seed = seed;

  std::vector<std::string> algos;
  if (algo_name_arg == "all")
    algos = {"intf", "rsrf", "rf", "et", "mean_y", "one_nn"};
  else
    algos = {algo_name_arg};

  for (const std::string& name : algos) {
    ReportRow row;
    if (name == "mean_y" || name == "one_nn") {
      row = baseline_row(model, d, name == "mean_y" ? BaselineKind::kMeanY : BaselineKind::kOneNn,
                         n_train, n_test, reps, seed, threads);
    } else {
      const Algo algo = parse_algo(name);
      const GrowerConfig cfg =
          overrides.apply(base_config(algo, model, d), /*strict=*/algos.size() == 1);
      const McResult mc = run_monte_carlo(model, d, cfg, n_train, n_test, reps, seed, threads);
      row = row_from_mc(mc, config_params_string(cfg), num_trees_of(cfg));
    }
    print_row(row);
    report.rows.push_back(std::move(row));
  }
  write_report(report, out);
  std::printf("report written to %s.csv / %s.json\n", out.c_str(), out.c_str());
  return 0;
}

int cmd_bench(const std::string& suite, int reps, int n_train, int n_test, std::uint64_t seed,
              int threads, int hd_n, const std::string& out) {
  ExperimentReport report;
  report.suite = suite;
  report.seed = seed;
  report.n_train = n_train;
  report.n_test = n_test;

  if (suite == "table1" || suite == "baselines") {
    report.model = "pure_3";
    report.d = 6;
    if (suite == "table1") {
      for (Algo algo : {Algo::kIntf, Algo::kRsrf, Algo::kRf, Algo::kEt}) {
        const GrowerConfig cfg = preset_config(algo, SimModel::kPure3, 6);
        const McResult mc =
            run_monte_carlo(SimModel::kPure3, 6, cfg, n_train, n_test, reps, seed, threads);
        ReportRow row = row_from_mc(mc, config_params_string(cfg), num_trees_of(cfg));
        print_row(row);
        report.rows.push_back(std::move(row));
      }
    } else {
      for (BaselineKind kind : {BaselineKind::kMeanY, BaselineKind::kOneNn}) {
        ReportRow row = baseline_row(SimModel::kPure3, 6, kind, n_train, n_test, reps, seed, threads);
        print_row(row);
        report.rows.push_back(std::move(row));
      }
    }
  } else if (suite == "fig2a") {
    report.model = "pure_3";
    report.d = 6;
    for (int mtry = 1; mtry <= 6; ++mtry) {
      RfConfig cfg;
      cfg.mtry = mtry;
      cfg.min_node_size = 5;
      cfg.num_trees = 100;
      const McResult mc =
          run_monte_carlo(SimModel::kPure3, 6, cfg, n_train, n_test, reps, seed, threads);
      ReportRow row = row_from_mc(mc, config_params_string(GrowerConfig{cfg}), cfg.num_trees);
      print_row(row);
      report.rows.push_back(std::move(row));
    }
    IntfConfig intf = std::get<IntfConfig>(preset_config(Algo::kIntf, SimModel::kPure3, 6));
    intf.num_trees = 100;
    const McResult mc =
        run_monte_carlo(SimModel::kPure3, 6, intf, n_train, n_test, reps, seed, threads);
    ReportRow row = row_from_mc(mc, config_params_string(GrowerConfig{intf}), intf.num_trees);
    print_row(row);
    report.rows.push_back(std::move(row));
  } else if (suite == "hd") {
    // empirical lag covariances of the augmented noise columns; the
    // mean_mse column carries the estimate and params the target value
    report.model = "hd";
    report.d = 50;
    RngStream gen(seed, 0);
    const SimData base = generate(SimModel::kPure2, hd_n, 4, gen);
    RngStream rng(seed, 1);
    const Dataset augmented = hd_augment(base.data, 50, rng);
    const double targets[4] = {1.0, std::sqrt(3.0 / 8.0), 0.375, 0.0};
    for (int lag = 0; lag <= 3; ++lag) {
      double acc = 0.0;
      int pairs = 0;
      for (int j = 4; j + lag < augmented.num_features(); ++j) {
        const auto a = augmented.column(j);
        const auto b = augmented.column(j + lag);
        double ma = 0, mb = 0;
        for (int i = 0; i < augmented.n(); ++i) {
          ma += a[i];
          mb += b[i];
        }
        ma /= augmented.n();
        mb /= augmented.n();
        double cov = 0;
        for (int i = 0; i < augmented.n(); ++i) cov += (a[i] - ma) * (b[i] - mb);
        acc += cov / (augmented.n() - 1);
        ++pairs;
      }
      ReportRow row;
      row.algorithm = "lag" + std::to_string(lag);
      char params[64];
      std::snprintf(params, sizeof params, "target=%.6f;pairs=%d", targets[lag], pairs);
      row.params = params;
      row.reps = 1;
      row.mean_mse = acc / pairs;  // empirical covariance estimate
      std::printf("lag%d cov=%.4f (target %.4f)\n", lag, row.mean_mse, targets[lag]);
      report.rows.push_back(std::move(row));
    }
    report.n_train = hd_n;
    report.n_test = 0;
  } else if (suite == "table3") {
    // long-running: every model/dimension with tuned presets plus baselines
    report.model = "all";
    report.d = 0;
    const std::vector<std::pair<SimModel, int>> settings = {
        {SimModel::kPureType, 4},     {SimModel::kPureType, 10},  {SimModel::kPureType, 30},
        {SimModel::kHierarchical, 4}, {SimModel::kHierarchical, 10}, {SimModel::kHierarchical, 30},
        {SimModel::kAdditive, 4},     {SimModel::kAdditive, 10},  {SimModel::kAdditive, 30},
        {SimModel::kPure2, 4},        {SimModel::kPure2, 10},     {SimModel::kPure2, 30},
        {SimModel::kPure3, 6},
    };
    for (const auto& [model, d] : settings) {
      for (Algo algo : {Algo::kIntf, Algo::kRsrf, Algo::kRf, Algo::kEt}) {
        const GrowerConfig cfg = preset_config(algo, model, d);
        const McResult mc = run_monte_carlo(model, d, cfg, n_train, n_test, reps, seed, threads);
        ReportRow row = row_from_mc(mc, config_params_string(cfg), num_trees_of(cfg));
        row.algorithm = sim_model_name(model) + "/d" + std::to_string(d) + "/" + row.algorithm;
        print_row(row);
        report.rows.push_back(std::move(row));
      }
      for (BaselineKind kind : {BaselineKind::kMeanY, BaselineKind::kOneNn}) {
        ReportRow row = baseline_row(model, d, kind, n_train, n_test, reps, seed, threads);
        row.algorithm = sim_model_name(model) + "/d" + std::to_string(d) + "/" + row.algorithm;
        print_row(row);
        report.rows.push_back(std::move(row));
      }
    }
  } else {
    throw std::invalid_argument("suite: unknown bench suite '" + suite +
                                "' (table1, fig2a, baselines, hd, table3)");
  }
  write_report(report, out);
  std::printf("report written to %s.csv / %s.json\n", out.c_str(), out.c_str());
  return 0;
}

int cmd_fit(const std::string& data_path, const std::string& schema_path,
            const std::string& algo_name_arg, std::uint64_t seed, int threads,
            const Overrides& overrides, const std::string& out) {
  const TabularSchema schema = read_schema_file(schema_path);
  const LoadedTable table = load_csv(data_path, schema);
  const Algo algo = parse_algo(algo_name_arg);
  const GrowerConfig cfg =
      overrides.apply(blank_config(algo, table.data.num_features()), /*strict=*/true);
  const Forest forest = fit_forest(table.data, cfg, seed, threads);
  save_forest(forest, out);
  std::printf("fit %s: %d trees on n=%d, d=%d -> %s\n", algo_name_arg.c_str(),
              num_trees_of(cfg), table.data.n(), table.data.num_features(), out.c_str());
  return 0;
}

int cmd_predict(const std::string& forest_path, const std::string& data_path,
                const std::string& schema_path, const std::string& out) {
  const Forest forest = load_forest(forest_path);
  Dataset data = [&] {
    if (!schema_path.empty()) return load_csv(data_path, read_schema_file(schema_path)).data;
    // no schema: every column is a numeric feature; responses are zeros
    std::ifstream in(data_path);
    if (!in) throw std::runtime_error("cannot open: " + data_path);
    std::string header;
    std::getline(in, header);
    const int cols = static_cast<int>(std::count(header.begin(), header.end(), ',')) + 1;
    in.close();
    TabularSchema schema;
    // reuse the CSV reader by treating the last column as target, then
    // reattach it as a feature
    std::istringstream hs(header);
    std::vector<std::string> names;
    std::string field;
    while (std::getline(hs, field, ',')) {
      while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
      names.push_back(field);
    }
    schema.target = names.back();
    LoadedTable table = load_csv(data_path, schema);
    std::vector<double> features(static_cast<std::size_t>(table.data.n()) * cols);
    for (int j = 0; j < cols - 1; ++j)
      for (int i = 0; i < table.data.n(); ++i)
        features[static_cast<std::size_t>(j) * table.data.n() + i] = table.data.x(i, j);
    for (int i = 0; i < table.data.n(); ++i)
      features[static_cast<std::size_t>(cols - 1) * table.data.n() + i] = table.data.y(i);
    return Dataset(std::move(features), std::vector<double>(table.data.n(), 0.0), cols);
  }();
  if (data.num_features() != forest.num_features)
    throw std::runtime_error("feature count mismatch: forest expects " +
                             std::to_string(forest.num_features) + ", data has " +
                             std::to_string(data.num_features()));
  std::vector<double> predictions(data.n());
  std::vector<double> row(data.num_features());
  for (int i = 0; i < data.n(); ++i) {
    for (int j = 0; j < data.num_features(); ++j) row[j] = data.x(i, j);
    predictions[i] = forest.predict(row);
  }
  write_predictions_csv(out, predictions, "prediction");
  std::printf("wrote %d predictions to %s\n", data.n(), out.c_str());
  return 0;
}

int cmd_tune(const std::string& mode, const std::string& model_name, const std::string& data_path,
             const std::string& schema_path, const std::string& algo_name_arg, int d_opt,
             int combos, int folds, int sims, int n_train, std::uint64_t seed, int threads,
             const std::string& out) {
  const Algo algo = parse_algo(algo_name_arg);
  TuneResult result;
  std::string model_label = model_name;
  if (mode == "cv") {
    Dataset data = [&] {
      if (!data_path.empty()) {
        if (schema_path.empty()) throw std::invalid_argument("schema: required with --data");
        return load_csv(data_path, read_schema_file(schema_path)).data;
      }
      const SimModel model = parse_sim_model(model_name);
      const int d = d_opt > 0 ? d_opt : default_dim(model);
      RngStream gen(seed, 1000);
      return generate(model, n_train, d, gen).data;
    }();
    result = cv_tune(data, default_space(algo, data.num_features()), combos, folds, seed, threads);
    if (model_label.empty()) model_label = data_path;
  } else if (mode == "opt") {
    const SimModel model = parse_sim_model(model_name);
    const int d = d_opt > 0 ? d_opt : default_dim(model);
    result = opt_tune(model, d, default_space(algo, d), combos, sims, n_train, n_train, seed,
                      threads);
  } else {
    throw std::invalid_argument("mode: expected cv or opt");
  }

  nlohmann::json doc;
  doc["mode"] = mode;
  doc["model"] = model_label;
  doc["algorithm"] = algo_name_arg;
  doc["seed"] = seed;
  doc["combos"] = combos;
  doc["best_index"] = result.best_index;
  doc["best_score"] = result.best_score;
  doc["best"] = config_to_json(result.best);
  doc["best_params"] = config_params_string(result.best);
  doc["scores"] = result.scores;
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot open for writing: " + out);
  file << doc.dump(1) << '\n';
  std::printf("best %s config (%s): %s  score=%.6f -> %s\n", algo_name_arg.c_str(), mode.c_str(),
              config_params_string(result.best).c_str(), result.best_score, out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grove: regression tree ensembles with interaction-aware splitting"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo benchmark on a synthetic model");
  std::string sim_model, sim_algo = "all", sim_out = "report", sim_config;
  int sim_d = 0, sim_reps = 20, sim_n_train = 500, sim_n_test = 500, sim_threads = 0;
  std::uint64_t sim_seed = 0;
  Overrides sim_overrides;
  sim->add_option("--model", sim_model, "pure_type|hierarchical|additive|pure_2|pure_3")->required();
  sim->add_option("--algo", sim_algo, "rf|et|intf|rsrf|mean_y|one_nn|all");
  sim->add_option("--d", sim_d, "number of covariates (model default when omitted)");
  sim->add_option("--reps", sim_reps, "Monte Carlo replications");
  sim->add_option("--n-train", sim_n_train, "training rows per replication");
  sim->add_option("--n-test", sim_n_test, "test rows per replication");
  sim->add_option("--seed", sim_seed, "master seed")->required();
  sim->add_option("--threads", sim_threads, "worker threads (0 = all cores)");
  sim->add_option("--out", sim_out, "output base path (.csv/.json)");
  sim->add_option("--config", sim_config, "key = value parameter file");
  add_param_flags(sim, sim_overrides);

  // fit
  auto* fit = app.add_subcommand("fit", "fit a forest on a CSV dataset");
  std::string fit_data, fit_schema, fit_algo, fit_out = "forest.json", fit_config;
  std::uint64_t fit_seed = 0;
  int fit_threads = 0;
  Overrides fit_overrides;
  fit->add_option("--data", fit_data, "training CSV")->required();
  fit->add_option("--schema", fit_schema, "schema file (target, categorical, ...)")->required();
  fit->add_option("--algo", fit_algo, "rf|et|intf|rsrf")->required();
  fit->add_option("--seed", fit_seed, "fit seed (default 0)");
  fit->add_option("--threads", fit_threads, "worker threads (0 = all cores)");
  fit->add_option("--out", fit_out, "forest JSON path");
  fit->add_option("--config", fit_config, "key = value parameter file");
  add_param_flags(fit, fit_overrides);

  // predict
  auto* pred = app.add_subcommand("predict", "predict with a saved forest");
  std::string pred_forest, pred_data, pred_schema, pred_out = "predictions.csv";
  pred->add_option("--forest", pred_forest, "forest JSON from fit")->required();
  pred->add_option("--data", pred_data, "feature CSV")->required();
  pred->add_option("--schema", pred_schema, "optional schema (else all columns are features)");
  pred->add_option("--out", pred_out, "predictions CSV path");

  // tune
  auto* tune = app.add_subcommand("tune", "random-search hyperparameters");
  std::string tune_mode = "cv", tune_model, tune_data, tune_schema, tune_algo,
              tune_out = "tuned.json";
  int tune_d = 0, tune_combos = 200, tune_folds = 10, tune_sims = 30, tune_n_train = 500,
      tune_threads = 0;
  std::uint64_t tune_seed = 0;
  tune->add_option("--mode", tune_mode, "cv (on data) or opt (fresh simulations)");
  tune->add_option("--model", tune_model, "synthetic model name");
  tune->add_option("--data", tune_data, "CSV dataset (cv mode)");
  tune->add_option("--schema", tune_schema, "schema for --data");
  tune->add_option("--algo", tune_algo, "rf|et|intf|rsrf")->required();
  tune->add_option("--d", tune_d, "number of covariates for synthetic data");
  tune->add_option("--combos", tune_combos, "random configurations to try");
  tune->add_option("--folds", tune_folds, "cv folds");
  tune->add_option("--sims", tune_sims, "fresh datasets per config (opt mode)");
  tune->add_option("--n-train", tune_n_train, "rows for synthetic data");
  tune->add_option("--seed", tune_seed, "master seed")->required();
  tune->add_option("--threads", tune_threads, "worker threads (0 = all cores)");
  tune->add_option("--out", tune_out, "result JSON path");

  // bench
  auto* bench = app.add_subcommand("bench", "benchmark suites with tuned presets");
  std::string bench_suite, bench_out = "bench";
  int bench_reps = 20, bench_n_train = 500, bench_n_test = 500, bench_threads = 0,
      bench_hd_n = 100000;
  std::uint64_t bench_seed = 0;
  bench->add_option("--suite", bench_suite, "table1|fig2a|baselines|hd|table3")->required();
  bench->add_option("--reps", bench_reps, "Monte Carlo replications");
  bench->add_option("--n-train", bench_n_train, "training rows");
  bench->add_option("--n-test", bench_n_test, "test rows");
  bench->add_option("--hd-n", bench_hd_n, "rows for the hd suite");
  bench->add_option("--seed", bench_seed, "master seed")->required();
  bench->add_option("--threads", bench_threads, "worker threads (0 = all cores)");
  bench->add_option("--out", bench_out, "output base path (.csv/.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // flag/usage problems are validation failures
  }

  try {
    if (sim->parsed()) {
      if (!sim_config.empty()) sim_overrides.merge_file(read_text_config(sim_config));
      return cmd_simulate(sim_model, sim_d, sim_algo, sim_reps, sim_n_train, sim_n_test, sim_seed,
                          sim_threads, sim_overrides, sim_out);
    }
    if (fit->parsed()) {
      if (!fit_config.empty()) fit_overrides.merge_file(read_text_config(fit_config));
      return cmd_fit(fit_data, fit_schema, fit_algo, fit_seed, fit_threads, fit_overrides, fit_out);
    }
    if (pred->parsed()) return cmd_predict(pred_forest, pred_data, pred_schema, pred_out);
    if (tune->parsed()) {
      if (tune_model.empty() && tune_data.empty())
        throw std::invalid_argument("model: either --model or --data is required");
      return cmd_tune(tune_mode, tune_model, tune_data, tune_schema, tune_algo, tune_d,
                      tune_combos, tune_folds, tune_sims, tune_n_train, tune_seed, tune_threads,
                      tune_out);
    }
    if (bench->parsed())
      return cmd_bench(bench_suite, bench_reps, bench_n_train, bench_n_test, bench_seed,
                       bench_threads, bench_hd_n, bench_out);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
