#include <benchmark/benchmark.h>

#include "jacspec/kelley.hpp"
#include "jacspec/poincare.hpp"
#include "jacspec/recurrence.hpp"
#include "jacspec/riccati.hpp"
#include "jacspec/spectrum.hpp"

namespace {

const jacspec::JacobiFamily fam = jacspec::JacobiFamily::make(2.0, 1.0, 0.4);

void BM_entry_eval(benchmark::State& state) {
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacspec::weight(fam, n));
    n = n % 100000 + 1;
  }
}
BENCHMARK(BM_entry_eval);

void BM_poincare_coeffs(benchmark::State& state) {
  std::int64_t n = 10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacspec::poincare_F(fam, 1.3, n));
    benchmark::DoNotOptimize(jacspec::poincare_G(fam, 1.3, n));
    n = n % 100000 + 10;
  }
}
BENCHMARK(BM_poincare_coeffs);

void BM_forward_recurrence(benchmark::State& state) {
  const auto depth = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        jacspec::recurrence_forward(fam, 1.3, 0.7, -0.2, depth));
  }
  state.SetItemsProcessed(state.iterations() * depth);
}
BENCHMARK(BM_forward_recurrence)->Arg(1 << 10)->Arg(1 << 14);

void BM_backward_riccati(benchmark::State& state) {
  const std::int64_t s = state.range(0);
  const auto bounds = jacspec::BoundParams::defaults(fam.alpha);
  const std::int64_t s_list[1] = {s};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        jacspec::decaying_riccati(fam, 1.5, bounds, s_list, 40));
  }
  state.SetItemsProcessed(state.iterations() * s);
}
BENCHMARK(BM_backward_riccati)->Arg(1 << 12)->Arg(1 << 15);

void BM_sturm_count(benchmark::State& state) {
  const std::int64_t K = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jacspec::sturm_count(fam, K, 1.5));
  }
  state.SetItemsProcessed(state.iterations() * K);
}
BENCHMARK(BM_sturm_count)->Arg(1000)->Arg(4000);

void BM_shooting_mismatch(benchmark::State& state) {
  const auto bounds = jacspec::BoundParams::defaults(fam.alpha);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        jacspec::shooting_mismatch(fam, 3.1, 2000, 40, bounds));
  }
}
BENCHMARK(BM_shooting_mismatch);

}  // namespace

BENCHMARK_MAIN();
