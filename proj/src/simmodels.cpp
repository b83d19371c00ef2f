#include "grove/simmodels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace grove {

SimModel parse_sim_model(const std::string& name) {
  if (name == "pure_type") return SimModel::kPureType;
  if (name == "hierarchical") return SimModel::kHierarchical;
  if (name == "additive") return SimModel::kAdditive;
  if (name == "pure_2") return SimModel::kPure2;
  if (name == "pure_3") return SimModel::kPure3;
  throw std::invalid_argument("model: unknown simulation model '" + name + "'");
}

std::string sim_model_name(SimModel model) {
  switch (model) {
    case SimModel::kPureType: return "pure_type";
    case SimModel::kHierarchical: return "hierarchical";
    case SimModel::kAdditive: return "additive";
    case SimModel::kPure2: return "pure_2";
    case SimModel::kPure3: return "pure_3";
  }
  throw std::logic_error("unknown model");
}

int default_dim(SimModel model) { return model == SimModel::kPure3 ? 6 : 4; }

int min_dim(SimModel model) {
  switch (model) {
    case SimModel::kPureType:
    case SimModel::kHierarchical:
    case SimModel::kAdditive:
    case SimModel::kPure2: return 3;
    case SimModel::kPure3: return 6;
  }
  return 3;
}

bool uses_uniform_features(SimModel model) {
  return model == SimModel::kPure2 || model == SimModel::kPure3;
}

double model_value(SimModel model, std::span<const double> x) {
  constexpr double pi = std::numbers::pi;
  switch (model) {
    case SimModel::kPureType:
      return -2.0 * std::sin(x[0] * x[1] * pi) + 2.0 * std::sin(x[1] * x[2] * pi);
    case SimModel::kHierarchical:
      return -2.0 * std::sin(x[0] * pi) + 2.0 * std::sin(x[1] * pi) - 2.0 * std::sin(x[2] * pi) -
             2.0 * std::sin(x[0] * x[1] * pi) + 2.0 * std::sin(x[1] * x[2] * pi);
    case SimModel::kAdditive:
      return -2.0 * std::sin(x[0] * pi) + 2.0 * std::sin(x[1] * pi) - 2.0 * std::sin(x[2] * pi);
    case SimModel::kPure2:
      return 5.0 * (x[0] - 0.5) * (x[1] - 0.5) + 5.0 * x[2];
    case SimModel::kPure3:
      return 10.0 * (x[0] - 0.5) * (x[1] - 0.5) + x[2] + x[3] + x[4] + x[5];
  }
  throw std::logic_error("unknown model");
}

SimData generate(SimModel model, int n, int d, RngStream& rng) {
  if (model == SimModel::kPure3 && d != 6)
    throw std::invalid_argument("d: pure_3 requires d = 6");
  if (d < min_dim(model))
    throw std::invalid_argument("d: too small for model " + sim_model_name(model));
  if (n < 1) throw std::invalid_argument("n: must be >= 1");

  std::vector<double> features(static_cast<std::size_t>(n) * d);
  const bool uniform = uses_uniform_features(model);
  // rho = 0.3 equicorrelation via a shared factor: z_j = sqrt(rho)*z0 + sqrt(1-rho)*w_j.
  const double a_shared = std::sqrt(0.3);
  const double a_own = std::sqrt(0.7);
  const double scale = 2.5 / std::numbers::pi;
  for (int i = 0; i < n; ++i) {
    if (uniform) {
      for (int j = 0; j < d; ++j) features[static_cast<std::size_t>(j) * n + i] = rng.uniform01();
    } else {
      const double shared = rng.normal();
      for (int j = 0; j < d; ++j) {
        const double z = a_shared * shared + a_own * rng.normal();
        features[static_cast<std::size_t>(j) * n + i] = scale * std::atan(z);
      }
    }
  }

  std::vector<double> truth(n);
  std::vector<double> response(n);
  std::vector<double> row(d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) row[j] = features[static_cast<std::size_t>(j) * n + i];
    truth[i] = model_value(model, row);
  }
  for (int i = 0; i < n; ++i) response[i] = truth[i] + rng.normal();

  return SimData{Dataset(std::move(features), std::move(response), d), std::move(truth)};
}

Dataset hd_augment(const Dataset& data, int extra, RngStream& rng) {
  if (extra < 1) throw std::invalid_argument("extra: must be >= 1");
  const int n = data.n();
  const int d = data.num_features();

  const double a0 = std::sqrt(3.0 / 8.0);
  const double a1 = 0.5;
  const double a2 = a0;

  std::vector<double> features(static_cast<std::size_t>(n) * (d + extra));
  for (int j = 0; j < d; ++j) {
    auto col = data.column(j);
    std::copy(col.begin(), col.end(), features.begin() + static_cast<std::size_t>(j) * n);
  }
  std::vector<double> w(extra + 2);
  for (int i = 0; i < n; ++i) {
    for (double& v : w) v = rng.normal();
    for (int j = 0; j < extra; ++j)
      features[static_cast<std::size_t>(d + j) * n + i] = a0 * w[j] + a1 * w[j + 1] + a2 * w[j + 2];
  }

  std::vector<double> response(data.response().begin(), data.response().end());
  return Dataset(std::move(features), std::move(response), d + extra);
}

Dataset subset_rows(const Dataset& data, const IndexSet& rows) {
  const int n = static_cast<int>(rows.size());
  const int d = data.num_features();
  std::vector<double> features(static_cast<std::size_t>(n) * d);
  std::vector<double> response(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) features[static_cast<std::size_t>(j) * n + i] = data.x(rows[i], j);
    response[i] = data.y(rows[i]);
  }
  return Dataset(std::move(features), std::move(response), d);
}

}  // namespace grove
