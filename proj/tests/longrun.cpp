// Opt-in long-running checks (ctest -C longrun). Ordering-only assertions at
// desk scale: the interaction-aware algorithms must not lose to the plain
// random forest on the pure-type model at any dimension, and cross-validated
// tuning must land near the tuned preset. Numbers are printed for inspection.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "grove/experiment.hpp"

using namespace grove;

namespace {

int g_failures = 0;

void check(bool pass, const std::string& detail) {
  std::printf("%s %s\n", pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

int env_int(const char* name, int fallback) {
  const char* value = std::getenv(name);
  return value ? std::atoi(value) : fallback;
}

}  // namespace

int main() {
  const int reps = env_int("GROVE_LONGRUN_REPS", 10);
  const std::uint64_t seed = 31415;
  char buf[256];

  for (int d : {4, 10, 30}) {
    McResult by_algo[3];
    const Algo algos[3] = {Algo::kIntf, Algo::kRsrf, Algo::kRf};
    for (int a = 0; a < 3; ++a) {
      const GrowerConfig cfg = preset_config(algos[a], SimModel::kPureType, d);
      by_algo[a] = run_monte_carlo(SimModel::kPureType, d, cfg, 500, 500, reps, seed, 0);
      std::printf("  pure_type d=%d %s: %.3f (sd %.3f)\n", d, algo_name(algos[a]).c_str(),
                  by_algo[a].mean_mse, by_algo[a].sd_mse);
    }
    std::snprintf(buf, sizeof buf, "pure_type d=%d: intf %.3f <= rf %.3f and rsrf %.3f <= rf", d,
                  by_algo[0].mean_mse, by_algo[2].mean_mse, by_algo[1].mean_mse);
    check(by_algo[0].mean_mse <= by_algo[2].mean_mse &&
              by_algo[1].mean_mse <= by_algo[2].mean_mse,
          buf);
  }

  // cross-validated tuning tracks the tuned preset on pure_3
  {
    const int d = 6, n = 500;
    RngStream gen(seed, 5000);
    const SimData sim = generate(SimModel::kPure3, n, d, gen);
    TuningSpace space = default_space(Algo::kRsrf, d);
    const TuneResult tuned = cv_tune(sim.data, space, 20, 10, seed, 0);
    const McResult cv_mc =
        run_monte_carlo(SimModel::kPure3, d, tuned.best, n, n, 2 * reps, seed + 1, 0);
    const GrowerConfig preset = preset_config(Algo::kRsrf, SimModel::kPure3, d);
    const McResult opt_mc = run_monte_carlo(SimModel::kPure3, d, preset, n, n, 2 * reps, seed + 1, 0);
    std::snprintf(buf, sizeof buf,
                  "cv-tuned rsrf [%s] mse %.3f within 10%% of tuned preset %.3f",
                  config_params_string(tuned.best).c_str(), cv_mc.mean_mse, opt_mc.mean_mse);
    check(cv_mc.mean_mse <= 1.10 * opt_mc.mean_mse, buf);
  }

  std::printf("longrun: %d failures\n", g_failures);
  return g_failures;
}
