#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "hgsearch/polymatrix.hpp"
#include "hgsearch/xsolver.hpp"

using namespace hgsearch;

namespace {

const FamilySpec& omega_family() {
  static const FamilySpec f = FamilySpec::search_form(1, -3, Rational(-1), -2, Rational(0));
  return f;
}

PolyMatrix window_matrix(std::size_t d) {
  std::vector<long> rows(2 * d + 2);
  std::iota(rows.begin(), rows.end(), 0L);
  return build_fit_matrix_x(omega_family(), d, rows);
}

void BM_DeterminantSerial(benchmark::State& state) {
  const PolyMatrix m = window_matrix(static_cast<std::size_t>(state.range(0)));
  const std::size_t bound = row_degree_bound(m);
  for (auto _ : state) benchmark::DoNotOptimize(polymat_det_serial(m, bound));
}

void BM_DeterminantParallel(benchmark::State& state) {
  const PolyMatrix m = window_matrix(static_cast<std::size_t>(state.range(0)));
  const std::size_t bound = row_degree_bound(m);
  for (auto _ : state) benchmark::DoNotOptimize(polymat_det(m, bound));
}

void BM_SolveExactSerial(benchmark::State& state) {
  SolveOptions opt;
  opt.parallel = false;
  for (auto _ : state) benchmark::DoNotOptimize(solve_x(omega_family(), static_cast<std::size_t>(state.range(0)), opt));
}

void BM_SolveExactParallel(benchmark::State& state) {
  SolveOptions opt;
  for (auto _ : state) benchmark::DoNotOptimize(solve_x(omega_family(), static_cast<std::size_t>(state.range(0)), opt));
}

void BM_SolveModular(benchmark::State& state) {
  SolveOptions opt;
  opt.method = SolveMethod::Modular;
  for (auto _ : state) benchmark::DoNotOptimize(solve_x(omega_family(), static_cast<std::size_t>(state.range(0)), opt));
}

}  // namespace

BENCHMARK(BM_DeterminantSerial)->Arg(4)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeterminantParallel)->Arg(4)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SolveExactSerial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveExactParallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SolveModular)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
