// Compares the OpenMP forest-fitting path against the serial reference on a
// fixed workload and verifies that both produce byte-identical forests.
#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "grove/ensemble.hpp"
#include "grove/experiment.hpp"
#include "grove/serialize.hpp"
#include "grove/simmodels.hpp"

using namespace grove;

namespace {

double time_call(const std::function<Forest()>& fit, Forest& out) {
  const auto start = std::chrono::steady_clock::now();
  out = fit();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void bench_one(const char* name, const Dataset& data, const GrowerConfig& cfg, int threads) {
  Forest serial, parallel;
  const double t_serial = time_call([&] { return fit_forest_serial(data, cfg, 99); }, serial);
  const double t_parallel = time_call([&] { return fit_forest(data, cfg, 99, threads); }, parallel);
  const bool identical = forest_to_string(serial) == forest_to_string(parallel);
  std::printf("%-6s serial %7.2fs | %d threads %7.2fs | speedup %4.2fx | identical: %s\n", name,
              t_serial, threads, t_parallel, t_serial / t_parallel, identical ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 0;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  if (argc > 1) threads = std::atoi(argv[1]);
  if (threads <= 1) {
    std::printf("need OpenMP and >1 thread for a meaningful comparison\n");
    threads = 2;
  }

  const int n = 2000;
  RngStream gen(7, 0);
  const SimData sim = generate(SimModel::kPure3, n, 6, gen);
  std::printf("workload: pure_3, n=%d, d=6\n", n);

  {
    RfConfig cfg = std::get<RfConfig>(preset_config(Algo::kRf, SimModel::kPure3, 6));
    cfg.num_trees = 300;
    bench_one("rf", sim.data, cfg, threads);
  }
  {
    EtConfig cfg = std::get<EtConfig>(preset_config(Algo::kEt, SimModel::kPure3, 6));
    cfg.num_trees = 300;
    bench_one("et", sim.data, cfg, threads);
  }
  {
    IntfConfig cfg = std::get<IntfConfig>(preset_config(Algo::kIntf, SimModel::kPure3, 6));
    cfg.num_trees = 60;
    bench_one("intf", sim.data, cfg, threads);
  }
  {
    RsrfConfig cfg = std::get<RsrfConfig>(preset_config(Algo::kRsrf, SimModel::kPure3, 6));
    cfg.num_trees = 60;
    bench_one("rsrf", sim.data, cfg, threads);
  }
  return 0;
}
