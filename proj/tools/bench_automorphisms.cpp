#include <benchmark/benchmark.h>

#include "painted/autgroup.hpp"
#include "painted/painted.hpp"

using namespace painted;

namespace {

// Affine E8 and D8 have 9 nodes, the largest size the factorial scan accepts.
const CartanScheme& scheme(int which) {
  static const CartanScheme e8 = build_affine(Family::E, 8, 1);
  static const CartanScheme d8 = build_affine(Family::D, 8, 1);
  static const CartanScheme a7 = build_affine(Family::A, 7, 1);
  return which == 0 ? e8 : which == 1 ? d8 : a7;
}

void label(benchmark::State& state) { state.SetLabel(scheme(static_cast<int>(state.range(0))).series()); }

void BM_scan_serial(benchmark::State& state) {
  const auto& s = scheme(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_automorphisms_serial(s).order());
  label(state);
}

void BM_scan_parallel(benchmark::State& state) {
  const auto& s = scheme(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_automorphisms(s).order());
  label(state);
}

void BM_backtracking(benchmark::State& state) {
  const auto& s = scheme(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(s).order());
  label(state);
}

}  // namespace

BENCHMARK(BM_scan_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_backtracking)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
