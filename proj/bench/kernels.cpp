// Serial reference kernels against their OpenMP counterparts.
// Thread count follows OMP_NUM_THREADS.

#include <vector>

#include <benchmark/benchmark.h>

#include "ratapprox/experiments.hpp"
#include "ratapprox/loewner.hpp"
#include "ratapprox/maxerror.hpp"

using namespace ratapprox;

namespace {

PartitionedData chebyshev_data(int n) {
  experiments::ExperimentConfig cfg;
  cfg.n = n;
  return add_origin(partition(experiments::make_dataset(cfg), PartitionScheme::Same));
}

const RationalApproximant& fitted_model() {
  static const RationalApproximant m = [] {
    experiments::ExperimentConfig cfg;
    cfg.n = 256;
    return experiments::fit_loewner(experiments::make_dataset(cfg), PartitionScheme::Same, true,
                                    loewner::FixedRank{28})
        .model;
  }();
  return m;
}

void BM_PencilParallel(benchmark::State& st) {
  const auto pd = chebyshev_data(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(loewner::build_pencil(pd));
}

void BM_PencilSerial(benchmark::State& st) {
  const auto pd = chebyshev_data(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(loewner::build_pencil_serial(pd));
}

void BM_EvaluateParallel(benchmark::State& st) {
  const PreparedModel pm(fitted_model());
  const auto xs = maxerror::uniform_grid(static_cast<std::size_t>(st.range(0)));
  std::vector<double> out(xs.size());
  for (auto _ : st) {
    pm.evaluate_many(xs, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_EvaluateSerial(benchmark::State& st) {
  const PreparedModel pm(fitted_model());
  const auto xs = maxerror::uniform_grid(static_cast<std::size_t>(st.range(0)));
  std::vector<double> out(xs.size());
  for (auto _ : st) {
    pm.evaluate_many_serial(xs, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_GridMaxParallel(benchmark::State& st) {
  const auto& m = fitted_model();
  for (auto _ : st) benchmark::DoNotOptimize(maxerror::grid_max_error(m, static_cast<std::size_t>(st.range(0))));
}

void BM_GridMaxSerial(benchmark::State& st) {
  const auto& m = fitted_model();
  for (auto _ : st)
    benchmark::DoNotOptimize(maxerror::grid_max_error_serial(m, static_cast<std::size_t>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_PencilParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PencilSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridMaxParallel)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridMaxSerial)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
