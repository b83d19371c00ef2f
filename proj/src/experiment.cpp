#include "grove/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "grove/ensemble.hpp"

namespace grove {

namespace {

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sd_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

std::vector<std::int32_t> permutation(int n, RngStream& rng) {
  std::vector<std::int32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 0; i + 1 < n; ++i) std::swap(perm[i], perm[i + rng.uniform_int(n - i)]);
  return perm;
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

EvalResult mse_on_test(const Predictor& predict, const SimData& test) {
  const Dataset& data = test.data;
  const int d = data.num_features();
  std::vector<double> row(d);
  double acc_m = 0.0, acc_y = 0.0;
  for (std::int32_t i = 0; i < data.n(); ++i) {
    for (int j = 0; j < d; ++j) row[j] = data.x(i, j);
    const double pred = predict(row);
    const double dm = pred - test.truth[i];
    const double dy = pred - data.y(i);
    acc_m += dm * dm;
    acc_y += dy * dy;
  }
  return EvalResult{acc_m / data.n(), acc_y / data.n()};
}

namespace {

// Shared replication loop; fit_and_predict builds a predictor from the
// training data of one replication.
McResult mc_loop(const std::string& algorithm, SimModel model, int d, int n_train, int n_test,
                 int reps, std::uint64_t seed, int threads,
                 const std::function<Predictor(const Dataset&, std::uint64_t)>& make_predictor) {
  if (reps < 1) throw std::invalid_argument("reps: must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  std::vector<EvalResult> results(reps);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
  for (int r = 0; r < reps; ++r) {
    const std::uint64_t rep_seed = derive_seed(seed, r);
    RngStream gen(rep_seed, 0);
    const SimData train = generate(model, n_train, d, gen);
    const SimData test = generate(model, n_test, d, gen);
    const Predictor predict = make_predictor(train.data, derive_seed(rep_seed, 1));
    results[r] = mse_on_test(predict, test);
  }
  McResult out;
  out.algorithm = algorithm;
  out.reps = reps;
  out.rep_mse.reserve(reps);
  std::vector<double> rep_mse_y;
  for (const EvalResult& e : results) {
    out.rep_mse.push_back(e.mse);
    rep_mse_y.push_back(e.mse_y);
  }
  out.mean_mse = mean_of(out.rep_mse);
  out.sd_mse = sd_of(out.rep_mse);
  out.mean_mse_y = mean_of(rep_mse_y);
  out.sd_mse_y = sd_of(rep_mse_y);
  out.wall_seconds = elapsed_seconds(start);
  return out;
}

}  // namespace

McResult run_monte_carlo(SimModel model, int d, const GrowerConfig& cfg, int n_train, int n_test,
                         int reps, std::uint64_t seed, int threads) {
  validate_config(cfg, d);
  return mc_loop(algorithm_name(cfg), model, d, n_train, n_test, reps, seed, threads,
                 [&cfg](const Dataset& train, std::uint64_t fit_seed) -> Predictor {
                   auto forest = std::make_shared<Forest>(fit_forest(train, cfg, fit_seed, 1));
                   return [forest](std::span<const double> x) { return forest->predict(x); };
                 });
}

McResult run_monte_carlo_baseline(SimModel model, int d, BaselineKind kind, int n_train, int n_test,
                                  int reps, std::uint64_t seed, int threads) {
  const std::string name = kind == BaselineKind::kMeanY ? "mean_y" : "one_nn";
  return mc_loop(name, model, d, n_train, n_test, reps, seed, threads,
                 [kind](const Dataset& train, std::uint64_t) -> Predictor {
                   auto data = std::make_shared<Dataset>(train);
                   auto model_ptr = std::make_shared<BaselineModel>(fit_baseline(kind, *data));
                   model_ptr->train = data.get();
                   return [data, model_ptr](std::span<const double> x) {
                     return predict_baseline(*model_ptr, x);
                   };
                 });
}

Algo parse_algo(const std::string& name) {
  if (name == "rf") return Algo::kRf;
  if (name == "et") return Algo::kEt;
  if (name == "intf") return Algo::kIntf;
  if (name == "rsrf") return Algo::kRsrf;
  throw std::invalid_argument("algo: unknown algorithm '" + name + "'");
}

std::string algo_name(Algo algo) {
  switch (algo) {
    case Algo::kRf: return "rf";
    case Algo::kEt: return "et";
    case Algo::kIntf: return "intf";
    case Algo::kRsrf: return "rsrf";
  }
  throw std::logic_error("unknown algo");
}

TuningSpace default_space(Algo algo, int d) {
  TuningSpace s;
  s.algo = algo;
  s.mtry = {1, d};
  s.mtry_random = {1, d};
  s.mtry_random_cart = {1, d};
  s.mtry_cart_cart = {1, d};
  s.npairs = {1, 25 * d};
  s.width = {1, std::max(15, d)};
  s.num_trees = algo == Algo::kRsrf ? 100 : 500;
  if (algo == Algo::kEt) s.sample_fraction = 1.0;
  return s;
}

GrowerConfig draw_config(const TuningSpace& space, RngStream& rng) {
  auto in_range = [&rng](std::pair<int, int> r) {
    return r.first + rng.uniform_int(r.second - r.first + 1);
  };
  auto pick_bool = [&rng](const std::vector<bool>& choices) {
    return choices[rng.uniform_int(static_cast<int>(choices.size()))];
  };
  switch (space.algo) {
    case Algo::kRf: {
      RfConfig c;
      c.mtry = in_range(space.mtry);
      c.min_node_size = in_range(space.min_node_size);
      c.replace = pick_bool(space.replace_choices);
      c.num_trees = space.num_trees;
      c.sample_fraction = c.replace ? 1.0 : space.sample_fraction;
      return c;
    }
    case Algo::kEt: {
      EtConfig c;
      c.mtry = in_range(space.mtry);
      c.num_random_splits = in_range(space.num_random_splits);
      c.min_node_size = in_range(space.min_node_size);
      c.replace = pick_bool(space.replace_choices);
      c.num_trees = space.num_trees;
      c.sample_fraction = space.sample_fraction;
      return c;
    }
    case Algo::kIntf: {
      IntfConfig c;
      c.npairs = in_range(space.npairs);
      c.min_node_size = in_range(space.min_node_size);
      c.replace = pick_bool(space.replace_choices);
      c.num_trees = space.num_trees;
      c.sample_fraction = c.replace ? 1.0 : space.sample_fraction;
      return c;
    }
    case Algo::kRsrf: {
      RsrfConfig c;
      c.mtry_mode = space.mtry_mode;
      c.include_cartcart = pick_bool(space.include_cartcart_choices);
      c.replace = pick_bool(space.replace_choices);
      c.width = in_range(space.width);
      if (c.mtry_mode == MtryMode::kFixed) {
        c.mtry_random = in_range(space.mtry_random);
      } else if (c.include_cartcart) {
        c.mtry_cart_cart = in_range(space.mtry_cart_cart);
      }
      c.mtry_random_cart = in_range(space.mtry_random_cart);
      c.min_node_size = in_range(space.min_node_size);
      c.num_trees = space.num_trees;
      c.sample_fraction = c.replace ? 1.0 : space.sample_fraction;
      return c;
    }
  }
  throw std::logic_error("unknown algo");
}

namespace {

int dim_index(int d) {
  if (d == 4) return 0;
  if (d == 10) return 1;
  if (d == 30) return 2;
  return -1;
}

[[noreturn]] void no_preset(Algo algo, SimModel model, int d) {
  throw std::invalid_argument("no benchmark preset for " + algo_name(algo) + "/" +
                              sim_model_name(model) + "/d=" + std::to_string(d));
}

}  // namespace

GrowerConfig preset_config(Algo algo, SimModel model, int d) {
  const int i = dim_index(d);
  if (model == SimModel::kPure3) {
    if (d != 6) no_preset(algo, model, d);
    switch (algo) {
      case Algo::kRsrf: {
        RsrfConfig c;
        c.width = 9;
        c.include_cartcart = false;
        c.mtry_random_cart = 4;
        c.min_node_size = 5;
        c.replace = true;
        c.num_trees = 100;
        return c;
      }
      case Algo::kIntf: {
        IntfConfig c;
        c.npairs = 99;
        c.min_node_size = 22;
        c.replace = true;
        c.num_trees = 500;
        return c;
      }
      case Algo::kRf: {
        RfConfig c;
        c.mtry = 5;
        c.min_node_size = 6;
        c.replace = true;
        c.num_trees = 500;
        return c;
      }
      case Algo::kEt: {
        EtConfig c;
        c.mtry = 1;
        c.num_random_splits = 5;
        c.min_node_size = 5;
        c.replace = false;
        c.sample_fraction = 1.0;
        c.num_trees = 500;
        return c;
      }
    }
  }
  if (i < 0) no_preset(algo, model, d);

  switch (algo) {
    case Algo::kRsrf: {
      RsrfConfig c;
      c.num_trees = 100;
      struct Row {
        bool cc;
        bool repl;
        int width;
        int mcc;  // -1 when unused
        int mrc;
        int mns;
      };
      static constexpr Row kRows[4][3] = {
          // pure_type
          {{false, true, 15, -1, 3, 16}, {true, true, 15, 6, 9, 10}, {true, true, 30, 22, 30, 5}},
          // hierarchical
          {{false, false, 12, -1, 2, 5}, {true, false, 14, 7, 10, 12}, {true, true, 29, 23, 26, 15}},
          // additive
          {{false, true, 12, -1, 2, 14}, {true, true, 15, 2, 8, 11}, {true, true, 16, 24, 24, 8}},
          // pure_2
          {{false, true, 13, -1, 4, 23}, {false, true, 15, -1, 10, 13}, {false, false, 25, -1, 30, 22}},
      };
      const Row& row = kRows[static_cast<int>(model)][i];
      c.include_cartcart = row.cc;
      c.replace = row.repl;
      c.width = row.width;
      if (row.mcc >= 0) c.mtry_cart_cart = row.mcc;
      c.mtry_random_cart = row.mrc;
      c.min_node_size = row.mns;
      c.sample_fraction = c.replace ? 1.0 : 0.632;
      return c;
    }
    case Algo::kIntf: {
      IntfConfig c;
      c.num_trees = 500;
      static constexpr int kNpairs[4][3] = {{14, 153, 749}, {7, 110, 450}, {23, 33, 99}, {2, 151, 30}};
      static constexpr bool kReplace[4][3] = {{true, false, false},
                                              {false, false, false},
                                              {true, false, false},
                                              {false, false, false}};
      static constexpr int kNodeSize[4][3] = {{20, 11, 11}, {10, 8, 17}, {13, 14, 18}, {16, 26, 28}};
      c.npairs = kNpairs[static_cast<int>(model)][i];
      c.replace = kReplace[static_cast<int>(model)][i];
      c.min_node_size = kNodeSize[static_cast<int>(model)][i];
      c.sample_fraction = c.replace ? 1.0 : 0.632;
      return c;
    }
    case Algo::kRf: {
      RfConfig c;
      c.num_trees = 500;
      static constexpr int kMtry[4][3] = {{4, 10, 30}, {3, 6, 9}, {2, 7, 26}, {2, 5, 20}};
      static constexpr bool kReplace[4][3] = {{true, false, false},
                                              {true, true, true},
                                              {true, true, true},
                                              {true, true, true}};
      static constexpr int kNodeSize[4][3] = {{5, 5, 7}, {8, 6, 12}, {5, 15, 18}, {10, 8, 30}};
      c.mtry = kMtry[static_cast<int>(model)][i];
      c.replace = kReplace[static_cast<int>(model)][i];
      c.min_node_size = kNodeSize[static_cast<int>(model)][i];
      c.sample_fraction = c.replace ? 1.0 : 0.632;
      return c;
    }
    case Algo::kEt: {
      EtConfig c;
      c.num_trees = 500;
      static constexpr int kMtry[4][3] = {{4, 9, 29}, {3, 9, 29}, {3, 7, 29}, {2, 7, 28}};
      static constexpr int kNrs[4][3] = {{3, 3, 6}, {3, 3, 9}, {5, 3, 3}, {1, 1, 1}};
      static constexpr bool kReplace[4][3] = {{false, false, false},
                                              {false, false, false},
                                              {true, false, false},
                                              {false, true, true}};
      static constexpr int kNodeSize[4][3] = {{12, 5, 5}, {8, 5, 9}, {6, 10, 16}, {10, 6, 15}};
      c.mtry = kMtry[static_cast<int>(model)][i];
      c.num_random_splits = kNrs[static_cast<int>(model)][i];
      c.replace = kReplace[static_cast<int>(model)][i];
      c.min_node_size = kNodeSize[static_cast<int>(model)][i];
      c.sample_fraction = 1.0;
      return c;
    }
  }
  throw std::logic_error("unknown algo");
}

namespace {

// Held-out error of one config on one (train rows, test rows) split of data.
double holdout_mse_y(const Dataset& data, const GrowerConfig& cfg,
                     std::span<const std::int32_t> train_rows,
                     std::span<const std::int32_t> test_rows, std::uint64_t fit_seed) {
  const Dataset train = subset_rows(data, IndexSet(train_rows.begin(), train_rows.end()));
  const Forest forest = fit_forest(train, cfg, fit_seed, 1);
  std::vector<double> row(data.num_features());
  double acc = 0.0;
  for (std::int32_t r : test_rows) {
    for (int j = 0; j < data.num_features(); ++j) row[j] = data.x(r, j);
    const double diff = forest.predict(row) - data.y(r);
    acc += diff * diff;
  }
  return acc / static_cast<double>(test_rows.size());
}

}  // namespace

TuneResult cv_tune(const Dataset& data, const TuningSpace& space, int combos, int folds,
                   std::uint64_t seed, int threads) {
  if (combos < 1) throw std::invalid_argument("combos: must be >= 1");
  if (folds < 2 || folds > data.n()) throw std::invalid_argument("folds: must be in [2, n]");

  RngStream rng(seed, 0);
  TuneResult out;
  for (int c = 0; c < combos; ++c) out.configs.push_back(draw_config(space, rng));
  const std::vector<std::int32_t> perm = permutation(data.n(), rng);

  std::vector<std::int32_t> fold_start(folds + 1);
  for (int f = 0; f <= folds; ++f)
    fold_start[f] = static_cast<std::int32_t>(static_cast<std::int64_t>(f) * data.n() / folds);

  std::vector<double> fold_mse(static_cast<std::size_t>(combos) * folds, 0.0);
  const int total = combos * folds;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
  for (int k = 0; k < total; ++k) {
    const int c = k / folds;
    const int f = k % folds;
    std::vector<std::int32_t> test_rows(perm.begin() + fold_start[f], perm.begin() + fold_start[f + 1]);
    std::vector<std::int32_t> train_rows;
    train_rows.reserve(data.n() - test_rows.size());
    train_rows.insert(train_rows.end(), perm.begin(), perm.begin() + fold_start[f]);
    train_rows.insert(train_rows.end(), perm.begin() + fold_start[f + 1], perm.end());
    fold_mse[k] = holdout_mse_y(data, out.configs[c], train_rows, test_rows,
                                derive_seed(seed, 1 + static_cast<std::uint64_t>(k)));
  }

  out.scores.resize(combos);
  for (int c = 0; c < combos; ++c) {
    double acc = 0.0;
    for (int f = 0; f < folds; ++f) acc += fold_mse[static_cast<std::size_t>(c) * folds + f];
    out.scores[c] = acc / folds;
  }
  out.best_index = 0;
  for (int c = 1; c < combos; ++c)
    if (out.scores[c] < out.scores[out.best_index]) out.best_index = c;
  out.best = out.configs[out.best_index];
  out.best_score = out.scores[out.best_index];
  return out;
}

TuneResult opt_tune(SimModel model, int d, const TuningSpace& space, int combos, int sims,
                    int n_train, int n_test, std::uint64_t seed, int threads) {
  if (combos < 1) throw std::invalid_argument("combos: must be >= 1");
  if (sims < 1) throw std::invalid_argument("sims: must be >= 1");

  RngStream rng(seed, 0);
  TuneResult out;
  for (int c = 0; c < combos; ++c) out.configs.push_back(draw_config(space, rng));

  std::vector<SimData> trains, tests;
  trains.reserve(sims);
  tests.reserve(sims);
  for (int s = 0; s < sims; ++s) {
    RngStream gen(derive_seed(seed, 1), s);
    trains.push_back(generate(model, n_train, d, gen));
    tests.push_back(generate(model, n_test, d, gen));
  }

  std::vector<double> sim_mse(static_cast<std::size_t>(combos) * sims, 0.0);
  const int total = combos * sims;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
  for (int k = 0; k < total; ++k) {
    const int c = k / sims;
    const int s = k % sims;
    const Forest forest = fit_forest(trains[s].data, out.configs[c],
                                     derive_seed(seed, 2 + static_cast<std::uint64_t>(k)), 1);
    sim_mse[k] = mse_on_test([&forest](std::span<const double> x) { return forest.predict(x); },
                             tests[s]).mse;
  }

  out.scores.resize(combos);
  for (int c = 0; c < combos; ++c) {
    double acc = 0.0;
    for (int s = 0; s < sims; ++s) acc += sim_mse[static_cast<std::size_t>(c) * sims + s];
    out.scores[c] = acc / sims;
  }
  out.best_index = 0;
  for (int c = 1; c < combos; ++c)
    if (out.scores[c] < out.scores[out.best_index]) out.best_index = c;
  out.best = out.configs[out.best_index];
  out.best_score = out.scores[out.best_index];
  return out;
}

std::vector<NestedCvResult> nested_cv(const Dataset& data, const std::vector<TuningSpace>& spaces,
                                      int inner, int outer, int repeats, int combos,
                                      std::uint64_t seed, int threads) {
  if (outer < 2 || outer > data.n()) throw std::invalid_argument("outer: must be in [2, n]");
  if (repeats < 1) throw std::invalid_argument("repeats: must be >= 1");

  std::vector<NestedCvResult> results(spaces.size());
  for (std::size_t a = 0; a < spaces.size(); ++a) results[a].algorithm = algo_name(spaces[a].algo);

  for (int rep = 0; rep < repeats; ++rep) {
    const std::uint64_t rep_seed = derive_seed(seed, rep);
    RngStream shuffle_rng(rep_seed, 0);
    const std::vector<std::int32_t> perm = permutation(data.n(), shuffle_rng);
    for (int o = 0; o < outer; ++o) {
      const std::int32_t lo = static_cast<std::int32_t>(static_cast<std::int64_t>(o) * data.n() / outer);
      const std::int32_t hi =
          static_cast<std::int32_t>(static_cast<std::int64_t>(o + 1) * data.n() / outer);
      std::vector<std::int32_t> test_rows(perm.begin() + lo, perm.begin() + hi);
      std::vector<std::int32_t> train_rows;
      train_rows.insert(train_rows.end(), perm.begin(), perm.begin() + lo);
      train_rows.insert(train_rows.end(), perm.begin() + hi, perm.end());
      const Dataset train = subset_rows(data, train_rows);

      for (std::size_t a = 0; a < spaces.size(); ++a) {
        const std::uint64_t fold_seed = derive_seed(rep_seed, 1 + o * spaces.size() + a);
        const TuneResult tuned = cv_tune(train, spaces[a], combos, inner, fold_seed, threads);
        const Forest forest = fit_forest(train, tuned.best, derive_seed(fold_seed, 1), threads);
        std::vector<double> row(data.num_features());
        double acc = 0.0;
        for (std::int32_t r : test_rows) {
          for (int j = 0; j < data.num_features(); ++j) row[j] = data.x(r, j);
          const double diff = forest.predict(row) - data.y(r);
          acc += diff * diff;
        }
        results[a].fold_mse_y.push_back(acc / static_cast<double>(test_rows.size()));
        results[a].chosen.push_back(tuned.best);
      }
    }
  }
  return results;
}

std::string config_params_string(const GrowerConfig& cfg) {
  char buf[64];
  std::string out;
  auto add = [&out](const std::string& key, const std::string& value) {
    if (!out.empty()) out += ';';
    out += key + "=" + value;
  };
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%g", v);
    return std::string(buf);
  };
  auto yesno = [](bool b) { return std::string(b ? "true" : "false"); };
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, RfConfig>) {
          add("mtry", std::to_string(c.mtry));
          add("min.node.size", std::to_string(c.min_node_size));
          add("replace", yesno(c.replace));
          add("sample.fraction", num(c.replace ? 1.0 : c.sample_fraction));
        } else if constexpr (std::is_same_v<T, EtConfig>) {
          add("mtry", std::to_string(c.mtry));
          add("num.random.splits", std::to_string(c.num_random_splits));
          add("min.node.size", std::to_string(c.min_node_size));
          add("replace", yesno(c.replace));
          add("sample.fraction", num(c.replace ? 1.0 : c.sample_fraction));
        } else if constexpr (std::is_same_v<T, IntfConfig>) {
          add("npairs", std::to_string(c.npairs));
          add("min.node.size", std::to_string(c.min_node_size));
          add("replace", yesno(c.replace));
          add("sample.fraction", num(c.replace ? 1.0 : c.sample_fraction));
        } else if constexpr (std::is_same_v<T, RsrfConfig>) {
          add("width", std::to_string(c.width));
          add("include_cartcart", yesno(c.include_cartcart));
          add("mtrymode", c.mtry_mode == MtryMode::kFixed ? "fixed" : "not-fixed");
          if (c.mtry_random) add("mtry_random", std::to_string(*c.mtry_random));
          if (c.mtry_cart_cart) add("mtry_cart_cart", std::to_string(*c.mtry_cart_cart));
          add("mtry_random_cart", std::to_string(c.mtry_random_cart));
          add("min_nodesize", std::to_string(c.min_node_size));
          add("replace", yesno(c.replace));
          add("sample.fraction", num(c.replace ? 1.0 : c.sample_fraction));
          if (c.depth != 2) add("depth", std::to_string(c.depth));
        }
      },
      cfg);
  return out;
}

ReportRow row_from_mc(const McResult& mc, const std::string& params, int num_trees) {
  ReportRow row;
  row.algorithm = mc.algorithm;
  row.params = params;
  row.num_trees = num_trees;
  row.reps = mc.reps;
  row.mean_mse = mc.mean_mse;
  row.sd_mse = mc.sd_mse;
  row.mean_mse_y = mc.mean_mse_y;
  row.sd_mse_y = mc.sd_mse_y;
  row.rep_mse = mc.rep_mse;
  row.wall_seconds = mc.wall_seconds;
  return row;
}

std::string report_to_csv(const ExperimentReport& report) {
  std::string out =
      "suite,model,d,n_train,n_test,seed,algorithm,num_trees,reps,"
      "mean_mse,sd_mse,mean_mse_y,sd_mse_y,params\n";
  char buf[512];
  for (const ReportRow& row : report.rows) {
    std::snprintf(buf, sizeof buf, "%s,%s,%d,%d,%d,%llu,%s,%d,%d,%.6f,%.6f,%.6f,%.6f,\"%s\"\n",
                  report.suite.c_str(), report.model.c_str(), report.d, report.n_train,
                  report.n_test, static_cast<unsigned long long>(report.seed),
                  row.algorithm.c_str(), row.num_trees, row.reps, row.mean_mse, row.sd_mse,
                  row.mean_mse_y, row.sd_mse_y, row.params.c_str());
    out += buf;
  }
  return out;
}

void write_report(const ExperimentReport& report, const std::string& out_base) {
  {
    std::ofstream csv(out_base + ".csv");
    if (!csv) throw std::runtime_error("cannot open for writing: " + out_base + ".csv");
    csv << report_to_csv(report);
  }
  nlohmann::json doc;
  doc["suite"] = report.suite;
  doc["model"] = report.model;
  doc["d"] = report.d;
  doc["n_train"] = report.n_train;
  doc["n_test"] = report.n_test;
  doc["seed"] = report.seed;
  nlohmann::json rows = nlohmann::json::array();
  double wall_total = 0.0;
  for (const ReportRow& row : report.rows) {
    nlohmann::json r;
    r["algorithm"] = row.algorithm;
    r["params"] = row.params;
    r["num_trees"] = row.num_trees;
    r["reps"] = row.reps;
    r["mean_mse"] = row.mean_mse;
    r["sd_mse"] = row.sd_mse;
    r["mean_mse_y"] = row.mean_mse_y;
    r["sd_mse_y"] = row.sd_mse_y;
    r["rep_mse"] = row.rep_mse;
    rows.push_back(std::move(r));
    wall_total += row.wall_seconds;
  }
  doc["rows"] = std::move(rows);
  // Non-deterministic fields are confined to this object.
  doc["meta"]["wall_seconds_total"] = wall_total;
  doc["meta"]["generated_unix"] =
      std::chrono::duration_cast<std::chrono::seconds>(
          std::chrono::system_clock::now().time_since_epoch())
          .count();
  std::ofstream json_out(out_base + ".json");
  if (!json_out) throw std::runtime_error("cannot open for writing: " + out_base + ".json");
  json_out << doc.dump(1) << '\n';
}

}  // namespace grove
