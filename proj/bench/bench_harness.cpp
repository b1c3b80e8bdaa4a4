// Wall-clock comparison of the serial reference and the OpenMP replication
// kernel, plus the per-graph statistics cost that dominates each replication.
//
//   bench_harness [replications] [n]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "netmon/harness.hpp"
#include "netmon/statistics.hpp"

using namespace netmon;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double seconds(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 16;
  const int n = argc > 2 ? std::atoi(argv[2]) : 40;

  ExperimentConfig config;
  config.scenario = "global";
  config.n = n;
  config.replications = reps;

  Rng rng = make_rng(1, 0);
  const auto scenario = scenario_catalog("no_change", n, 1.0, {}, rng);
  std::vector<Graph> graphs;
  for (int i = 0; i < 100; ++i) graphs.push_back(sample_graph(scenario.baseline.params, rng));
  double sink = 0.0;
  const double stats = seconds([&] {
    for (const auto& g : graphs) sink += summary_vector(g)[StatisticKind::avg_degree];
  });
  std::printf("summary_vector      n=%-4d %8.3f ms/graph\n", n, 1e3 * stats / graphs.size());

  CellResult serial, parallel;
  const double t_serial = seconds([&] { serial = run_cell_serial(config); });
  const double t_parallel = seconds([&] { parallel = run_cell(config); });
  const bool same = serial.runs == parallel.runs;
  std::printf("run_cell serial     reps=%-4d %8.3f s\n", reps, t_serial);
  std::printf("run_cell omp (%2d)   reps=%-4d %8.3f s  speedup %.2fx  %s\n", omp_get_max_threads(),
              reps, t_parallel, t_serial / t_parallel, same ? "identical" : "MISMATCH");
  return same && sink >= 0 ? 0 : 1;
}
