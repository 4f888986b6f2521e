// Serial reference kernels against their OpenMP counterparts.
//
//   slacqm_kernel_bench --benchmark_filter=sandwich

#include <complex>
#include <vector>

#include <benchmark/benchmark.h>

#include "slacqm/kernels.hpp"
#include "slacqm/platform.hpp"

namespace k = slacqm::kernels;

namespace {

std::vector<double> profile(int n) {
  std::vector<double> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = 1.0 + 0.01 * i;
  return d;
}

template <auto Fill>
void fill(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Fill(n, 20.0));
  state.SetComplexityN(n);
}

template <auto Shift>
void translation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Shift(n, 20.0, 0.37));
}

template <auto Sandwich>
void sandwich(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd p = k::serial::i_momentum(n, 20.0);
  const auto d = profile(n);
  for (auto _ : state) benchmark::DoNotOptimize(Sandwich(p, d));
}

template <auto Sum>
void kron_sum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd a = k::serial::momentum_squared(n, 20.0);
  for (auto _ : state) benchmark::DoNotOptimize(Sum(a, a));
}

template <bool Parallel>
void residuals(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXd h = k::serial::momentum_squared(n, 20.0);
  const Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
  const std::vector<std::complex<double>> lambda(static_cast<std::size_t>(n), 1.0);
  for (auto _ : state) {
    if constexpr (Parallel) benchmark::DoNotOptimize(k::parallel::residual_norms(h, v, lambda));
    else benchmark::DoNotOptimize(k::serial::residual_norms(h, v, lambda));
  }
}

}  // namespace

BENCHMARK(fill<k::serial::i_momentum>)->Name("i_momentum/serial")->Arg(111)->Arg(401)->Arg(1201);
BENCHMARK(fill<k::parallel::i_momentum>)->Name("i_momentum/parallel")->Arg(111)->Arg(401)->Arg(1201);
BENCHMARK(fill<k::serial::momentum_squared>)->Name("momentum_squared/serial")->Arg(111)->Arg(401)->Arg(1201);
BENCHMARK(fill<k::parallel::momentum_squared>)->Name("momentum_squared/parallel")->Arg(111)->Arg(401)->Arg(1201);
BENCHMARK(translation<k::serial::translation>)->Name("translation/serial")->Arg(111)->Arg(401);
BENCHMARK(translation<k::parallel::translation>)->Name("translation/parallel")->Arg(111)->Arg(401);
BENCHMARK(sandwich<k::serial::diag_sandwich>)->Name("sandwich/serial")->Arg(111)->Arg(301);
BENCHMARK(sandwich<k::parallel::diag_sandwich>)->Name("sandwich/parallel")->Arg(111)->Arg(301);
BENCHMARK(kron_sum<k::serial::kron_sum>)->Name("kron_sum/serial")->Arg(21)->Arg(41);
BENCHMARK(kron_sum<k::parallel::kron_sum>)->Name("kron_sum/parallel")->Arg(21)->Arg(41);
BENCHMARK(residuals<false>)->Name("residuals/serial")->Arg(111)->Arg(301);
BENCHMARK(residuals<true>)->Name("residuals/parallel")->Arg(111)->Arg(301);

int main(int argc, char** argv) {
  slacqm::platform::ensure_sound_blas(argv);
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
